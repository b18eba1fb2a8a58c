#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/laurent.hpp"

namespace burau4::templieb {

using laurent::LaurentPoly;

// Planar non-crossing perfect matching of 2n boundary points, n = 3 or 4.
// Boundary numbering: top points 1..n left to right, bottom points n+1..2n
// right to left, so the identity diagram pairs (k, 2n+1-k) and U_i pairs
// (i, i+1) and (2n-i, 2n+1-i), and non-crossing equals balanced nesting in
// the cyclic order 1..2n.
class TLDiagram {
 public:
  static TLDiagram identity(int n);
  static TLDiagram generator(int n, int i);  // U_i, 1 <= i <= n-1
  // Builds from a pairing given as partner[p] for 0-based points; validates
  // that it is a non-crossing perfect matching.
  static TLDiagram from_pairing(int n, const std::array<uint8_t, 8>& partner);

  int n() const noexcept { return n_; }
  int points() const noexcept { return 2 * n_; }
  // 1-based partner lookup.
  int partner(int p) const { return partner_[static_cast<size_t>(p - 1)] + 1; }
  bool noncrossing() const;

  // Strict weak order so diagrams can key maps; also used for canonical
  // iteration order.
  friend bool operator<(const TLDiagram& a, const TLDiagram& b) {
    if (a.n_ != b.n_) return a.n_ < b.n_;
    return a.partner_ < b.partner_;
  }
  friend bool operator==(const TLDiagram&, const TLDiagram&) = default;

  std::string to_text() const;  // e.g. "(1 6)(2 3)(4 5)"

 private:
  TLDiagram() = default;
  int n_ = 0;
  std::array<uint8_t, 8> partner_{};  // 0-based, first 2n entries used
  friend struct DiagramOps;
};

// Product of two diagrams: stack x above y, glue x's bottom to y's top,
// count closed loops.
struct DiagramProduct {
  TLDiagram diagram;
  int loops;
};
DiagramProduct diagram_mul(const TLDiagram& x, const TLDiagram& y);

// Formal LaurentPoly-linear combination of diagrams of one TL_n.
class TLElement {
 public:
  explicit TLElement(int n) : n_(n) {}
  static TLElement zero(int n) { return TLElement(n); }
  static TLElement unit(int n);  // identity diagram, coefficient 1
  static TLElement from_diagram(TLDiagram d, LaurentPoly c = LaurentPoly::one());

  int n() const noexcept { return n_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  const std::map<TLDiagram, LaurentPoly>& terms() const noexcept {
    return terms_;
  }
  void add_term(const TLDiagram& d, const LaurentPoly& c);

  friend bool operator==(const TLElement&, const TLElement&) = default;
  TLElement& operator+=(const TLElement& o);
  friend TLElement operator+(TLElement a, const TLElement& b) {
    a += b;
    return a;
  }

  std::string to_text() const;

 private:
  int n_;
  std::map<TLDiagram, LaurentPoly> terms_;  // no zero coefficients stored
};

// Loop scalar delta = -t^-2 - t^2: each closed loop contributes one factor.
const LaurentPoly& loop_delta();

// The bracket variable A, fixed to the monomial t; the inverse relation
// requires A^2 + A^-2 + delta = 0, which t satisfies (as do -t, t^-1, -t^-1).
const LaurentPoly& bracket_a();
const LaurentPoly& bracket_a_inv();

// Bilinear extension of diagram stacking; operands must share n.
TLElement tl_mul(const TLElement& x, const TLElement& y);

// Multiplicative image of a braid word: each positive letter contributes
// A + A^-1 U_i, each negative letter A^-1 + A U_i.
TLElement theta(const braid::BraidWord& w, int n);

// Projection TL_4 -> TL_3 on generators: U_1 -> U_1, U_2 -> U_2, U_3 -> U_1,
// extended to basis diagrams through their stored generator words and then
// linearly.
TLElement psi(const TLElement& x);  // pre: x.n() == 4

// All basis diagrams of TL_n in canonical order (5 for n=3, 14 for n=4).
const std::vector<TLDiagram>& basis(int n);

// One fixed reduced generator word (indices of U) representing a basis
// diagram; empty for the identity diagram. Used by psi.
const std::vector<uint8_t>& basis_word(const TLDiagram& d);

}  // namespace burau4::templieb
