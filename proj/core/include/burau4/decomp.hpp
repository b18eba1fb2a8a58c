#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/burau.hpp"
#include "burau4/laurent.hpp"

namespace burau4::decomp {

using laurent::LaurentPoly;

// A word given either over the Bokut-Vesnin letters or over the sigma
// generators of B4.
using Word = std::variant<braid::BVWord, braid::BraidWord>;

braid::BraidWord to_braid(const Word& w);
std::string word_text(const Word& w);
size_t word_length(const Word& w);

// The splitting rho_11(a^n sigma) = P(1-t^-1) + Q + R(1-t),
// rho_31(a^n sigma) = -P - Q - R, for sigma the stored base word.
struct PQRDecomposition {
  Word base_word;
  int n = 0;
  LaurentPoly P, Q, R;
  // Largest d for which the closed-form values at m = 1..d were checked
  // against direct matrix evaluation.
  int validated_depth = 0;
};

struct ExtractResult {
  std::optional<PQRDecomposition> decomposition;
  std::string failure;  // set when not decomposable at this n

  bool ok() const { return decomposition.has_value(); }
};

// Extraction at a fixed exponent, applied with sigma_n := a^n w:
//   P = [t(rho11+rho31)(sigma_n) + (rho11+rho31)(a sigma_n)] / (t^-2 - 1)
//   R = [t^-1(rho11+rho31)(sigma_n) + (rho11+rho31)(a sigma_n)] / (t^2 - 1)
//   Q = rho11(sigma_n) - P(1-t^-1) - R(1-t)
// Fails (a normal outcome meaning n is too small) when either division is
// inexact or the rho_31 identity does not hold.
ExtractResult extract_pqr(const Word& w, int n);

// Checks the closed-form predictions against direct evaluation for
// m = 1..depth and records the depth on success; returns the first
// mismatching m otherwise.
std::optional<int> validate(PQRDecomposition& d, int depth);

struct NFailure {
  int n;
  std::string reason;
};

struct MinimalNResult {
  std::optional<PQRDecomposition> decomposition;
  std::vector<NFailure> failures;  // one entry per rejected n

  bool ok() const { return decomposition.has_value(); }
};

// Smallest n <= n_max whose extraction succeeds and validates to the given
// depth; on exhaustion the result carries the per-n failure reasons.
MinimalNResult find_minimal_n(const Word& w, int n_max, int depth);

// Default search cap: twice the word length plus four.
int default_n_max(const Word& w);
inline constexpr int kDefaultDepth = 3;

// Closed-form values at level m:
//   rho11(a^{m+n} sigma) = P S_{m+1}(t^-1) + Q + R S_{m+1}(t)
//   rho31(a^{m+n} sigma) = -P S_m(t^-1) - Q - R S_m(t)
// m = 0 reproduces the base identities.
std::pair<LaurentPoly, LaurentPoly> predict(const PQRDecomposition& d, int m);

}  // namespace burau4::decomp
