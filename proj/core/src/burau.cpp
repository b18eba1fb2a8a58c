#include "burau4/burau.hpp"

#include <stdexcept>

namespace burau4::burau {

using braid::BraidWord;
using braid::BVWord;
using braid::Letter;

// --- BurauMatrix -------------------------------------------------------------

size_t BurauMatrix::idx(int i, int j) {
  if (i < 1 || i > 3 || j < 1 || j > 3)
    throw std::out_of_range("matrix index must be 1..3");
  return static_cast<size_t>((i - 1) * 3 + (j - 1));
}

BurauMatrix BurauMatrix::identity() {
  BurauMatrix m;
  for (int i = 1; i <= 3; ++i) m.at(i, i) = LaurentPoly::one();
  return m;
}

BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b) {
  BurauMatrix r;
  for (int i = 1; i <= 3; ++i)
    for (int k = 1; k <= 3; ++k) {
      const LaurentPoly& aik = a.at(i, k);
      if (aik.is_zero()) continue;
      for (int j = 1; j <= 3; ++j) {
        const LaurentPoly& bkj = b.at(k, j);
        if (bkj.is_zero()) continue;
        r.at(i, j) += aik * bkj;
      }
    }
  return r;
}

LaurentPoly BurauMatrix::det() const {
  const auto& m = *this;
  return m.at(1, 1) * (m.at(2, 2) * m.at(3, 3) - m.at(2, 3) * m.at(3, 2)) -
         m.at(1, 2) * (m.at(2, 1) * m.at(3, 3) - m.at(2, 3) * m.at(3, 1)) +
         m.at(1, 3) * (m.at(2, 1) * m.at(3, 2) - m.at(2, 2) * m.at(3, 1));
}

std::optional<BurauMatrix> BurauMatrix::inverse() const {
  const LaurentPoly d = det();
  if (d.is_zero() || d.term_count() != 1) return std::nullopt;
  const auto& lead = d.terms().front();
  laurent::Coeff c = lead.second;
  if (c != laurent::Coeff(1) && c != laurent::Coeff(-1)) return std::nullopt;
  // det = +-t^k, so det^-1 = +-t^-k.
  const LaurentPoly dinv = LaurentPoly::monomial(c, -lead.first);
  const auto& m = *this;
  auto minor2 = [&](int r1, int r2, int c1, int c2) {
    return m.at(r1, c1) * m.at(r2, c2) - m.at(r1, c2) * m.at(r2, c1);
  };
  BurauMatrix adjT;  // adjugate (transposed cofactors)
  adjT.at(1, 1) = minor2(2, 3, 2, 3);
  adjT.at(1, 2) = -minor2(1, 3, 2, 3);
  adjT.at(1, 3) = minor2(1, 2, 2, 3);
  adjT.at(2, 1) = -minor2(2, 3, 1, 3);
  adjT.at(2, 2) = minor2(1, 3, 1, 3);
  adjT.at(2, 3) = -minor2(1, 2, 1, 3);
  adjT.at(3, 1) = minor2(2, 3, 1, 2);
  adjT.at(3, 2) = -minor2(1, 3, 1, 2);
  adjT.at(3, 3) = minor2(1, 2, 1, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j) adjT.at(i, j) *= dinv;
  return adjT;
}

std::string BurauMatrix::to_text() const {
  std::string out;
  for (int i = 1; i <= 3; ++i) {
    out += '[';
    for (int j = 1; j <= 3; ++j) {
      if (j > 1) out += ", ";
      out += at(i, j).to_text();
    }
    out += "]\n";
  }
  return out;
}

// --- generator and Bokut-Vesnin matrices --------------------------------------

namespace {

LaurentPoly P(std::string_view text) { return LaurentPoly::parse(text); }

std::array<BurauMatrix, 3> make_positive_generators() {
  std::array<BurauMatrix, 3> g;
  g[0].at(1, 1) = P("-t^-1");
  g[0].at(2, 1) = P("t^-1");
  g[0].at(2, 2) = P("1");
  g[0].at(3, 3) = P("1");

  g[1].at(1, 1) = P("1");
  g[1].at(1, 2) = P("1");
  g[1].at(2, 2) = P("-t^-1");
  g[1].at(3, 2) = P("t^-1");
  g[1].at(3, 3) = P("1");

  g[2].at(1, 1) = P("1");
  g[2].at(2, 2) = P("1");
  g[2].at(2, 3) = P("1");
  g[2].at(3, 3) = P("-t^-1");
  return g;
}

std::array<BurauMatrix, 3> make_negative_generators(
    const std::array<BurauMatrix, 3>& pos) {
  std::array<BurauMatrix, 3> g;
  for (int i = 0; i < 3; ++i) {
    auto inv = pos[static_cast<size_t>(i)].inverse();
    if (!inv)
      throw std::logic_error("generator matrix is not invertible");
    g[static_cast<size_t>(i)] = std::move(*inv);
  }
  return g;
}

struct GeneratorTables {
  std::array<BurauMatrix, 3> pos = make_positive_generators();
  std::array<BurauMatrix, 3> neg = make_negative_generators(pos);
};

const GeneratorTables& tables() {
  static const GeneratorTables t;
  return t;
}

// Cached images of the Bokut-Vesnin letters, used for BV evaluation.
struct BVTables {
  BurauMatrix a, a_inv, b, b_inv;
};

const BVTables& bv_tables() {
  static const BVTables t = [] {
    BVTables r;
    r.a = evaluate(braid::bv_expand(braid::parse_bv("a")));
    r.b = evaluate(braid::bv_expand(braid::parse_bv("b")));
    r.a_inv = evaluate(braid::bv_expand(braid::parse_bv("A")));
    r.b_inv = evaluate(braid::bv_expand(braid::parse_bv("B")));
    return r;
  }();
  return t;
}

}  // namespace

const BurauMatrix& generator_matrix(int i, int sign) {
  if (i < 1 || i > 3) throw std::out_of_range("generator index must be 1..3");
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("sign must be +1 or -1");
  const auto& t = tables();
  return sign > 0 ? t.pos[static_cast<size_t>(i - 1)]
                  : t.neg[static_cast<size_t>(i - 1)];
}

BurauMatrix evaluate(const BraidWord& w) {
  if (w.strands != 4)
    throw std::invalid_argument("matrix evaluation expects a B4 word");
  static_assert(kCompositionOrder == CompositionOrder::left_to_right);
  BurauMatrix r = BurauMatrix::identity();
  for (const auto& l : w.letters) r = r * generator_matrix(l.index, l.sign);
  return r;
}

BurauMatrix evaluate(const BVWord& w) {
  const auto& t = bv_tables();
  BurauMatrix r = BurauMatrix::identity();
  for (const auto& l : w.letters) {
    const BurauMatrix& g = (l.index == 1) ? (l.sign > 0 ? t.a : t.a_inv)
                                          : (l.sign > 0 ? t.b : t.b_inv);
    r = r * g;
  }
  return r;
}

// --- Artin action --------------------------------------------------------------

FreeGroupEndo FreeGroupEndo::identity_endo(int n) {
  FreeGroupEndo e;
  e.n = n;
  for (int i = 0; i < n; ++i)
    e.images[static_cast<size_t>(i)] = {static_cast<int8_t>(i + 1)};
  return e;
}

bool FreeGroupEndo::is_identity() const {
  for (int i = 0; i < n; ++i) {
    const auto& img = images[static_cast<size_t>(i)];
    if (img.size() != 1 || img[0] != i + 1) return false;
  }
  return true;
}

namespace {

void append_reduced(std::vector<int8_t>& out, int8_t x) {
  if (!out.empty() && out.back() == -x)
    out.pop_back();
  else
    out.push_back(x);
}

// Image of one free generator under one braid letter.
// s_i sends x_i -> x_i x_{i+1} x_i^-1 and x_{i+1} -> x_i;
// s_i^-1 sends x_i -> x_{i+1} and x_{i+1} -> x_{i+1}^-1 x_i x_{i+1}.
void letter_image(const Letter& l, int x, std::vector<int8_t>& out) {
  const int i = l.index;
  const auto push = [&](int v) { append_reduced(out, static_cast<int8_t>(v)); };
  if (l.sign > 0) {
    if (x == i) {
      push(i);
      push(i + 1);
      push(-i);
    } else if (x == i + 1) {
      push(i);
    } else {
      push(x);
    }
  } else {
    if (x == i) {
      push(i + 1);
    } else if (x == i + 1) {
      push(-(i + 1));
      push(i);
      push(i + 1);
    } else {
      push(x);
    }
  }
}

}  // namespace

FreeGroupEndo artin_endo(const BraidWord& w) {
  if (w.strands != 3 && w.strands != 4)
    throw std::invalid_argument("artin action expects 3 or 4 strands");
  FreeGroupEndo e = FreeGroupEndo::identity_endo(w.strands);
  // Processing letters left to right: replace every letter of each image by
  // its image under the current braid letter, reducing as we go. This yields
  // the endomorphism of the whole word compatible with left-to-right
  // matrix composition.
  for (const auto& l : w.letters) {
    for (int x = 0; x < e.n; ++x) {
      const auto& img = e.images[static_cast<size_t>(x)];
      std::vector<int8_t> next;
      next.reserve(img.size() * 3);
      for (int8_t sym : img) {
        if (sym > 0) {
          letter_image(l, sym, next);
        } else {
          // Image of an inverse letter: reversed, sign-flipped image.
          std::vector<int8_t> fwd;
          letter_image(l, -sym, fwd);
          for (auto it = fwd.rbegin(); it != fwd.rend(); ++it)
            append_reduced(next, static_cast<int8_t>(-*it));
        }
      }
      e.images[static_cast<size_t>(x)] = std::move(next);
    }
  }
  return e;
}

bool artin_trivial(const BraidWord& w) { return artin_endo(w).is_identity(); }

}  // namespace burau4::burau
