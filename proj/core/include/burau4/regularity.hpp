#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/laurent.hpp"

namespace burau4::regularity {

using laurent::LaurentPoly;

// Degree data of entries (1,1) and (3,1) of the matrix of a^m sigma a^-l.
// A missing degmin means the entry is the zero polynomial. regular means
// both entries are nonzero and rho11_degmin - rho31_degmin == -1.
struct RegularityOutcome {
  braid::BVWord word;  // sigma
  int m = 0;
  int l = 0;
  std::optional<int> rho11_degmin;
  std::optional<int> rho31_degmin;
  std::optional<int> diff;
  bool regular = false;
  bool pure = false;  // purity of a^m sigma a^-l
};

// Evaluates the matrix of a^m sigma a^-l directly and reads off the
// regularity data.
RegularityOutcome check_instance(const braid::BVWord& sigma, int m, int l);

struct ScanResult {
  int m_min = 0, m_max = 0, l_min = 0, l_max = 0;
  // Row-major grid: outcome(m, l) at index (m - m_min) * cols + (l - l_min).
  std::vector<RegularityOutcome> grid;
  // Least (m0, l0), ordered by m0 then l0, such that every sampled cell with
  // m > m0 and l >= l0 is regular and at least one such cell exists;
  // std::nullopt when no such pair is in range.
  std::optional<std::pair<int, int>> threshold;

  const RegularityOutcome& at(int m, int l) const;
};

// Full grid over [m_min, m_max] x [l_min, l_max], evaluated incrementally.
ScanResult scan_thresholds(const braid::BVWord& sigma, int m_min, int m_max,
                           int l_min, int l_max);

enum class KernelFilterResult {
  candidate,                // nontrivial element of ker(phi) = F(a, b)
  rejected_not_in_ker_phi,  // phi image acts nontrivially
  rejected_trivial,         // the word itself is the trivial braid
};
std::string to_string(KernelFilterResult r);

// Proposition-style filter: a faithful-kernel candidate must have trivial
// phi image while being nontrivial itself; both checks use the Artin action.
KernelFilterResult kernel_filter(const braid::BraidWord& w);

struct BatchConfig {
  uint64_t count = 0;
  int length_min = 4;
  int length_max = 12;
  // BV text with exactly one 'w' placeholder for the random word.
  std::string word_template = "a^3 b^3 w b^-3 a^-3";
  // Scan m = l from 1 to (reduced template length) + m_offset; the tail
  // beyond the template length is the buffer that must be fully regular.
  int m_offset = 8;
  uint64_t seed = 0;
  int jobs = 1;       // worker threads; output is identical for any value
  int redraw_cap = 64;
};

enum class TrialOutcome { regular, violation, inconclusive };
std::string to_string(TrialOutcome o);

// One scanned instance that failed regularity, kept for re-checking.
struct InstanceFailure {
  int m = 0, l = 0;
  std::string rho11, rho31;  // canonical polynomial text
  std::optional<int> rho11_degmin, rho31_degmin;
};

struct TrialRecord {
  uint64_t index = 0;
  std::string w;       // the random word (BV text)
  std::string sigma;   // instantiated template (BV text)
  size_t sigma_length = 0;
  bool pure = false;
  TrialOutcome outcome = TrialOutcome::inconclusive;
  // Largest scanned m = l that failed regularity; 0 when the whole scan was
  // regular. The trial is regular when this does not exceed sigma_length.
  int last_irregular = 0;
  int scan_max = 0;
  std::string reason;                     // inconclusive trials
  std::vector<InstanceFailure> failures;  // violations: every irregular
                                          // instance in the buffer zone
  std::string full_word;                  // violations: a^m sigma a^-m text
};

struct BatchReport {
  BatchConfig config;
  uint64_t trials = 0;
  uint64_t regular_count = 0;
  std::vector<TrialRecord> violation_list;
  std::vector<TrialRecord> inconclusive_list;
  double wall_time_seconds = 0.0;  // not written to report files, so reruns
                                   // with one seed stay byte-identical
};

// Runs the randomized experiment: per trial draw w, instantiate the
// template (redrawing while the concatenation is not freely reduced), scan
// m = l, classify. Deterministic for a fixed seed regardless of jobs.
// When jsonl is non-null every trial is written as one JSON line as soon as
// its turn (by index) comes, followed by one summary record.
BatchReport random_batch(const BatchConfig& config, std::ostream* jsonl);

// JSON line for one trial / the closing summary record (schema_version 1).
std::string trial_json(const TrialRecord& t);
std::string summary_json(const BatchReport& r);

}  // namespace burau4::regularity
