#include "burau4/decomp.hpp"

#include <stdexcept>

namespace burau4::decomp {

using braid::BraidWord;
using braid::BVWord;
using burau::BurauMatrix;
using laurent::Direction;
using laurent::exact_div;
using laurent::geometric_partial_sum;

BraidWord to_braid(const Word& w) {
  if (const auto* bv = std::get_if<BVWord>(&w)) return braid::bv_expand(*bv);
  return std::get<BraidWord>(w);
}

std::string word_text(const Word& w) {
  if (const auto* bv = std::get_if<BVWord>(&w)) return braid::to_text(*bv);
  return braid::to_text(std::get<BraidWord>(w));
}

size_t word_length(const Word& w) {
  if (const auto* bv = std::get_if<BVWord>(&w)) return bv->length();
  return std::get<BraidWord>(w).length();
}

namespace {

const BurauMatrix& a_matrix() {
  static const BurauMatrix m =
      burau::evaluate(braid::bv_expand(braid::parse_bv("a")));
  return m;
}

LaurentPoly rho11_plus_rho31(const BurauMatrix& m) {
  return m.at(1, 1) + m.at(3, 1);
}

const LaurentPoly& one_minus_tinv() {
  static const LaurentPoly p = LaurentPoly::parse("1-t^-1");
  return p;
}

const LaurentPoly& one_minus_t() {
  static const LaurentPoly p = LaurentPoly::parse("1-t");
  return p;
}

ExtractResult extract_from_matrix(const Word& w, int n,
                                  const BurauMatrix& base) {
  // base = matrix of a^n w.
  static const LaurentPoly tinv2_minus_1 = LaurentPoly::parse("t^-2-1");
  static const LaurentPoly t2_minus_1 = LaurentPoly::parse("t^2-1");

  const BurauMatrix next = a_matrix() * base;
  const LaurentPoly u = rho11_plus_rho31(base);
  const LaurentPoly v = rho11_plus_rho31(next);

  auto p = exact_div(u.shifted(1) + v, tinv2_minus_1);
  if (!p)
    return {std::nullopt,
            "t*(rho11+rho31) + (rho11+rho31 after a) is not divisible by "
            "t^-2-1"};
  auto r = exact_div(u.shifted(-1) + v, t2_minus_1);
  if (!r)
    return {std::nullopt,
            "t^-1*(rho11+rho31) + (rho11+rho31 after a) is not divisible by "
            "t^2-1"};

  PQRDecomposition d;
  d.base_word = w;
  d.n = n;
  d.P = std::move(*p);
  d.R = std::move(*r);
  d.Q = base.at(1, 1) - d.P * one_minus_tinv() - d.R * one_minus_t();

  // The first base identity holds by construction of Q; the second is
  // implied when both divisions are exact, but it is part of the
  // decomposition's contract, so check it anyway.
  if (base.at(3, 1) != -(d.P + d.Q + d.R))
    return {std::nullopt, "rho31 identity -P-Q-R failed"};
  return {std::move(d), {}};
}

}  // namespace

ExtractResult extract_pqr(const Word& w, int n) {
  if (n < 0) throw std::invalid_argument("extract_pqr: n must be >= 0");
  BurauMatrix base = burau::evaluate(to_braid(w));
  for (int k = 0; k < n; ++k) base = a_matrix() * base;
  return extract_from_matrix(w, n, base);
}

std::optional<int> validate(PQRDecomposition& d, int depth) {
  if (depth < 1) throw std::invalid_argument("validate: depth must be >= 1");
  BurauMatrix m = burau::evaluate(to_braid(d.base_word));
  for (int k = 0; k < d.n; ++k) m = a_matrix() * m;
  for (int i = 1; i <= depth; ++i) {
    m = a_matrix() * m;
    auto [rho11, rho31] = predict(d, i);
    if (m.at(1, 1) != rho11 || m.at(3, 1) != rho31) return i;
  }
  d.validated_depth = std::max(d.validated_depth, depth);
  return std::nullopt;
}

MinimalNResult find_minimal_n(const Word& w, int n_max, int depth) {
  if (n_max < 0) throw std::invalid_argument("find_minimal_n: n_max < 0");
  MinimalNResult result;
  BurauMatrix base = burau::evaluate(to_braid(w));
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) base = a_matrix() * base;
    ExtractResult e = extract_from_matrix(w, n, base);
    if (!e.ok()) {
      result.failures.push_back({n, e.failure});
      continue;
    }
    PQRDecomposition d = std::move(*e.decomposition);
    if (auto bad_m = validate(d, depth)) {
      result.failures.push_back(
          {n, "prediction mismatch at m=" + std::to_string(*bad_m)});
      continue;
    }
    result.decomposition = std::move(d);
    return result;
  }
  return result;
}

int default_n_max(const Word& w) {
  return 2 * static_cast<int>(word_length(w)) + 4;
}

std::pair<LaurentPoly, LaurentPoly> predict(const PQRDecomposition& d, int m) {
  if (m < 0) throw std::invalid_argument("predict: m must be >= 0");
  const LaurentPoly s_m_inv = geometric_partial_sum(m, Direction::t_inverse);
  const LaurentPoly s_m = geometric_partial_sum(m, Direction::t);
  const LaurentPoly s_m1_inv =
      geometric_partial_sum(m + 1, Direction::t_inverse);
  const LaurentPoly s_m1 = geometric_partial_sum(m + 1, Direction::t);
  LaurentPoly rho11 = d.P * s_m1_inv + d.Q + d.R * s_m1;
  LaurentPoly rho31 = -(d.P * s_m_inv + d.Q + d.R * s_m);
  return {std::move(rho11), std::move(rho31)};
}

}  // namespace burau4::decomp
