#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "burau4/braid.hpp"
#include "burau4/laurent.hpp"

namespace burau4::burau {

using laurent::LaurentPoly;

// How a word maps to a matrix product: letters multiply left to right,
// burau(uv) = burau(u) * burau(v). Fixed by the generator-fidelity tests,
// which check the product of a's expansion against its published matrix.
enum class CompositionOrder { left_to_right, right_to_left };
inline constexpr CompositionOrder kCompositionOrder =
    CompositionOrder::left_to_right;

// 3x3 matrix of Laurent polynomials.
class BurauMatrix {
 public:
  BurauMatrix() = default;  // all entries zero
  static BurauMatrix identity();

  // 1-based row/column access.
  LaurentPoly& at(int i, int j) { return m_[idx(i, j)]; }
  const LaurentPoly& at(int i, int j) const { return m_[idx(i, j)]; }

  friend BurauMatrix operator*(const BurauMatrix& a, const BurauMatrix& b);
  friend bool operator==(const BurauMatrix&, const BurauMatrix&) = default;

  LaurentPoly det() const;
  // Exact inverse; available only when det is a unit (+-t^k).
  std::optional<BurauMatrix> inverse() const;

  std::string to_text() const;  // rows bracketed, canonical entry text

 private:
  static size_t idx(int i, int j);
  std::array<LaurentPoly, 9> m_;
};

// The generator image for sign +1, its exact inverse for sign -1; i in 1..3.
const BurauMatrix& generator_matrix(int i, int sign);

// Matrix of a word, letters composed left to right (kCompositionOrder).
// BV words are evaluated through cached images of a, b and their inverses.
BurauMatrix evaluate(const braid::BraidWord& w);  // pre: strands == 4
BurauMatrix evaluate(const braid::BVWord& w);

// The (i, j) entry, 1-based.
inline const LaurentPoly& entry(const BurauMatrix& m, int i, int j) {
  return m.at(i, j);
}

// Endomorphism of the free group F_n given by images of the generators;
// words are reduced sequences of signed indices (+-1..n).
struct FreeGroupEndo {
  int n;
  std::array<std::vector<int8_t>, 4> images;

  static FreeGroupEndo identity_endo(int n);
  bool is_identity() const;
  friend bool operator==(const FreeGroupEndo&, const FreeGroupEndo&) = default;
};

// The action of w on F_n (s_i: x_i -> x_i x_{i+1} x_i^-1, x_{i+1} -> x_i).
FreeGroupEndo artin_endo(const braid::BraidWord& w);

// True iff the action is the identity endomorphism. The action is faithful,
// so this decides braid triviality; it shares no code with the matrices and
// serves as the independent oracle.
bool artin_trivial(const braid::BraidWord& w);

}  // namespace burau4::burau
