#include "burau4/regularity.hpp"

#include <atomic>
#include <chrono>
#include <condition_variable>
#include <map>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "json.hpp"

namespace burau4::regularity {

using braid::BraidWord;
using braid::BVWord;
using braid::Letter;
using braid::Rng;
using burau::BurauMatrix;
using nlohmann::json;

namespace {

const BurauMatrix& a_matrix() {
  static const BurauMatrix m = burau::evaluate(braid::parse_bv("a"));
  return m;
}

const BurauMatrix& a_inv_matrix() {
  static const BurauMatrix m = burau::evaluate(braid::parse_bv("A"));
  return m;
}

bool entries_regular(const BurauMatrix& x, RegularityOutcome& out) {
  const auto& r11 = x.at(1, 1);
  const auto& r31 = x.at(3, 1);
  if (!r11.is_zero()) out.rho11_degmin = r11.deg_min();
  if (!r31.is_zero()) out.rho31_degmin = r31.deg_min();
  if (out.rho11_degmin && out.rho31_degmin)
    out.diff = *out.rho11_degmin - *out.rho31_degmin;
  out.regular = out.diff.has_value() && *out.diff == -1;
  return out.regular;
}

bool conjugate_is_pure(const braid::StrandPermutation& sigma_perm, int m,
                       int l) {
  // permutation(a) is an involution, so only the parities of m and l matter.
  static const braid::StrandPermutation a_perm =
      braid::permutation(braid::parse_bv("a"));
  braid::StrandPermutation p(4);
  if (m % 2) p = p * a_perm;
  p = p * sigma_perm;
  if (l % 2) p = p * a_perm;
  return p.is_identity();
}

}  // namespace

RegularityOutcome check_instance(const BVWord& sigma, int m, int l) {
  if (m < 0 || l < 0)
    throw std::invalid_argument("check_instance: m and l must be >= 0");
  const BVWord a = braid::parse_bv("a");
  BVWord full = braid::concat(braid::power(a, m),
                              braid::concat(sigma, braid::power(a, -l)));
  RegularityOutcome out;
  out.word = sigma;
  out.m = m;
  out.l = l;
  out.pure = braid::permutation(full).is_identity();
  entries_regular(burau::evaluate(full), out);
  return out;
}

const RegularityOutcome& ScanResult::at(int m, int l) const {
  if (m < m_min || m > m_max || l < l_min || l > l_max)
    throw std::out_of_range("scan grid index");
  const size_t cols = static_cast<size_t>(l_max - l_min + 1);
  return grid[static_cast<size_t>(m - m_min) * cols +
              static_cast<size_t>(l - l_min)];
}

ScanResult scan_thresholds(const BVWord& sigma, int m_min, int m_max,
                           int l_min, int l_max) {
  if (m_min < 0 || l_min < 0 || m_max < m_min || l_max < l_min)
    throw std::invalid_argument("scan_thresholds: empty or negative range");
  ScanResult res;
  res.m_min = m_min;
  res.m_max = m_max;
  res.l_min = l_min;
  res.l_max = l_max;
  res.grid.resize(static_cast<size_t>(m_max - m_min + 1) *
                  static_cast<size_t>(l_max - l_min + 1));

  const braid::StrandPermutation sigma_perm = braid::permutation(sigma);
  const BurauMatrix sigma_mat = burau::evaluate(sigma);
  const size_t cols = static_cast<size_t>(l_max - l_min + 1);

  BurauMatrix a_pow_mmin = BurauMatrix::identity();
  for (int k = 0; k < m_min; ++k) a_pow_mmin = a_pow_mmin * a_matrix();

  BurauMatrix right = sigma_mat;  // sigma * a^-l, advanced along l
  for (int k = 0; k < l_min; ++k) right = right * a_inv_matrix();
  for (int l = l_min; l <= l_max; ++l) {
    if (l > l_min) right = right * a_inv_matrix();
    BurauMatrix x = a_pow_mmin * right;
    for (int m = m_min; m <= m_max; ++m) {
      if (m > m_min) x = a_matrix() * x;
      RegularityOutcome& out =
          res.grid[static_cast<size_t>(m - m_min) * cols +
                   static_cast<size_t>(l - l_min)];
      out.word = sigma;
      out.m = m;
      out.l = l;
      out.pure = conjugate_is_pure(sigma_perm, m, l);
      entries_regular(x, out);
    }
  }

  // Least (m0, l0) whose strict-m tail is nonempty and fully regular.
  for (int m0 = m_min - 1; m0 < m_max && !res.threshold; ++m0) {
    for (int l0 = l_min; l0 <= l_max; ++l0) {
      bool all = true;
      for (int m = m0 + 1; m <= m_max && all; ++m)
        for (int l = l0; l <= l_max && all; ++l)
          if (!res.at(m, l).regular) all = false;
      if (all) {
        res.threshold = {m0, l0};
        break;
      }
    }
  }
  return res;
}

std::string to_string(KernelFilterResult r) {
  switch (r) {
    case KernelFilterResult::candidate: return "candidate";
    case KernelFilterResult::rejected_not_in_ker_phi:
      return "rejected-not-in-ker-phi";
    case KernelFilterResult::rejected_trivial: return "rejected-trivial";
  }
  throw std::logic_error("unreachable");
}

KernelFilterResult kernel_filter(const BraidWord& w) {
  if (!burau::artin_trivial(braid::phi(w)))
    return KernelFilterResult::rejected_not_in_ker_phi;
  if (burau::artin_trivial(w)) return KernelFilterResult::rejected_trivial;
  return KernelFilterResult::candidate;
}

std::string to_string(TrialOutcome o) {
  switch (o) {
    case TrialOutcome::regular: return "regular";
    case TrialOutcome::violation: return "violation";
    case TrialOutcome::inconclusive: return "inconclusive";
  }
  throw std::logic_error("unreachable");
}

// --- batch -----------------------------------------------------------------

namespace {

uint64_t mix64(uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Independent per-trial stream so results do not depend on scheduling.
uint64_t trial_seed(uint64_t seed, uint64_t index) {
  return mix64(seed ^ mix64(index + 0x9E3779B97F4A7C15ull));
}

bool letters_reduced(const std::vector<Letter>& letters) {
  for (size_t i = 1; i < letters.size(); ++i)
    if (letters[i].index == letters[i - 1].index &&
        letters[i].sign == -letters[i - 1].sign)
      return false;
  return true;
}

struct Template {
  std::vector<Letter> prefix, suffix;
};

Template parse_template(const std::string& text) {
  const size_t w_pos = text.find('w');
  if (w_pos == std::string::npos)
    throw std::invalid_argument("template must contain a 'w' placeholder");
  if (text.find('w', w_pos + 1) != std::string::npos)
    throw std::invalid_argument("template must contain exactly one 'w'");
  Template t;
  t.prefix = braid::parse_bv(text.substr(0, w_pos)).letters;
  t.suffix = braid::parse_bv(text.substr(w_pos + 1)).letters;
  return t;
}

TrialRecord run_one_trial(uint64_t index, const BatchConfig& cfg,
                          const Template& tpl) {
  Rng rng(trial_seed(cfg.seed, index));
  TrialRecord rec;
  rec.index = index;

  BVWord w, sigma;
  bool have = false;
  for (int attempt = 0; attempt < cfg.redraw_cap && !have; ++attempt) {
    const int len =
        cfg.length_min +
        static_cast<int>(rng.below(
            static_cast<uint64_t>(cfg.length_max - cfg.length_min) + 1));
    w = (len == 0) ? BVWord{} : braid::random_reduced_bv_word(
                                    static_cast<size_t>(len), rng);
    std::vector<Letter> letters = tpl.prefix;
    letters.insert(letters.end(), w.letters.begin(), w.letters.end());
    letters.insert(letters.end(), tpl.suffix.begin(), tpl.suffix.end());
    if (!letters.empty() && letters_reduced(letters)) {
      sigma.letters = std::move(letters);
      sigma.reduced = true;
      have = true;
    }
  }
  rec.w = braid::to_text(w);
  if (!have) {
    rec.outcome = TrialOutcome::inconclusive;
    rec.reason = "template instantiation is not a nonempty reduced word after " +
                 std::to_string(cfg.redraw_cap) + " draws";
    return rec;
  }

  rec.sigma = braid::to_text(sigma);
  rec.sigma_length = sigma.length();
  rec.pure = braid::permutation(sigma).is_identity();
  const int len = static_cast<int>(sigma.length());
  const int scan_max = len + cfg.m_offset;
  rec.scan_max = scan_max;

  BurauMatrix x = burau::evaluate(sigma);
  for (int k = 1; k <= scan_max; ++k) {
    x = a_matrix() * x * a_inv_matrix();
    RegularityOutcome out;
    if (!entries_regular(x, out)) {
      rec.last_irregular = k;
      if (k > len) {
        InstanceFailure f;
        f.m = k;
        f.l = k;
        f.rho11 = x.at(1, 1).to_text();
        f.rho31 = x.at(3, 1).to_text();
        f.rho11_degmin = out.rho11_degmin;
        f.rho31_degmin = out.rho31_degmin;
        rec.failures.push_back(std::move(f));
      }
    }
  }

  if (rec.last_irregular <= len) {
    rec.outcome = TrialOutcome::regular;
    rec.failures.clear();
  } else {
    // sigma is a nonempty freely reduced BV word by construction, so a
    // buffer-zone irregularity counts as a violation, not as inconclusive.
    rec.outcome = TrialOutcome::violation;
    const int k = rec.last_irregular;
    const BVWord a = braid::parse_bv("a");
    rec.full_word = braid::to_text(braid::concat(
        braid::power(a, k), braid::concat(sigma, braid::power(a, -k))));
  }
  return rec;
}

void aggregate(BatchReport& report, TrialRecord&& rec) {
  ++report.trials;
  switch (rec.outcome) {
    case TrialOutcome::regular: ++report.regular_count; break;
    case TrialOutcome::violation:
      report.violation_list.push_back(std::move(rec));
      break;
    case TrialOutcome::inconclusive:
      report.inconclusive_list.push_back(std::move(rec));
      break;
  }
}

void validate_config(const BatchConfig& cfg) {
  if (cfg.count < 1) throw std::invalid_argument("count must be >= 1");
  if (cfg.length_min < 0 || cfg.length_max < cfg.length_min)
    throw std::invalid_argument("invalid length range");
  if (cfg.m_offset < 0) throw std::invalid_argument("m_offset must be >= 0");
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  if (cfg.redraw_cap < 1)
    throw std::invalid_argument("redraw_cap must be >= 1");
}

}  // namespace

BatchReport random_batch(const BatchConfig& config, std::ostream* jsonl) {
  validate_config(config);
  const Template tpl = parse_template(config.word_template);
  const auto start = std::chrono::steady_clock::now();

  BatchReport report;
  report.config = config;

  auto emit = [&](TrialRecord&& rec) {
    if (jsonl) *jsonl << trial_json(rec) << '\n' << std::flush;
    aggregate(report, std::move(rec));
  };

  if (config.jobs == 1) {
    for (uint64_t i = 0; i < config.count; ++i)
      emit(run_one_trial(i, config, tpl));
  } else {
    std::atomic<uint64_t> next{0};
    std::map<uint64_t, TrialRecord> done;
    std::mutex mu;
    std::condition_variable cv;
    const size_t backlog_cap = 64 + 2 * static_cast<size_t>(config.jobs);

    auto worker = [&] {
      for (;;) {
        const uint64_t i = next.fetch_add(1);
        if (i >= config.count) return;
        TrialRecord rec = run_one_trial(i, config, tpl);
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done.size() < backlog_cap ||
                                   done.begin()->first > i; });
        done.emplace(i, std::move(rec));
        cv.notify_all();
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(config.jobs));
    for (int j = 0; j < config.jobs; ++j) pool.emplace_back(worker);

    for (uint64_t want = 0; want < config.count; ++want) {
      TrialRecord rec;
      {
        std::unique_lock lock(mu);
        cv.wait(lock, [&] { return done.contains(want); });
        auto it = done.find(want);
        rec = std::move(it->second);
        done.erase(it);
        cv.notify_all();
      }
      emit(std::move(rec));
    }
    for (auto& th : pool) th.join();
  }

  report.wall_time_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  if (jsonl) *jsonl << summary_json(report) << '\n' << std::flush;
  return report;
}

std::string trial_json(const TrialRecord& t) {
  json j;
  j["type"] = "trial";
  j["index"] = t.index;
  j["w"] = t.w;
  j["outcome"] = to_string(t.outcome);
  j["m0"] = t.last_irregular;
  if (t.outcome != TrialOutcome::inconclusive) {
    j["sigma_length"] = t.sigma_length;
    j["pure"] = t.pure;
  }
  if (t.outcome == TrialOutcome::violation) {
    j["sigma"] = t.sigma;
    j["scan_max"] = t.scan_max;
    j["full_word"] = t.full_word;
    json fails = json::array();
    for (const auto& f : t.failures) {
      json jf;
      jf["m"] = f.m;
      jf["l"] = f.l;
      jf["rho11"] = f.rho11;
      jf["rho31"] = f.rho31;
      jf["rho11_degmin"] =
          f.rho11_degmin ? json(*f.rho11_degmin) : json(nullptr);
      jf["rho31_degmin"] =
          f.rho31_degmin ? json(*f.rho31_degmin) : json(nullptr);
      fails.push_back(std::move(jf));
    }
    j["failures"] = std::move(fails);
  }
  if (t.outcome == TrialOutcome::inconclusive) j["reason"] = t.reason;
  return j.dump();
}

std::string summary_json(const BatchReport& r) {
  json j;
  j["type"] = "summary";
  j["schema_version"] = 1;
  json cfg;
  cfg["count"] = r.config.count;
  cfg["length_min"] = r.config.length_min;
  cfg["length_max"] = r.config.length_max;
  cfg["template"] = r.config.word_template;
  cfg["m_offset"] = r.config.m_offset;
  cfg["seed"] = r.config.seed;
  cfg["jobs"] = r.config.jobs;
  cfg["redraw_cap"] = r.config.redraw_cap;
  j["config"] = std::move(cfg);
  j["trials"] = r.trials;
  j["regular_count"] = r.regular_count;
  j["violations"] = r.violation_list.size();
  j["inconclusive"] = r.inconclusive_list.size();
  return j.dump();
}

}  // namespace burau4::regularity
