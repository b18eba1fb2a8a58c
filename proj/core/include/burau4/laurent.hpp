#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace burau4::laurent {

namespace detail {
struct BigInt;  // arbitrary-precision payload, defined in laurent.cpp
// Out-of-line deleter so the inline Coeff constructors compile against the
// incomplete payload type.
struct BigIntDeleter {
  void operator()(BigInt* p) const noexcept;
};
using BigPtr = std::unique_ptr<BigInt, BigIntDeleter>;
}  // namespace detail

// Integer coefficient with an int64 fast path. Values outside the int64
// range are promoted to an arbitrary-precision payload and demoted again as
// soon as they fit, so equality is structural: big_ is engaged iff the value
// does not fit in int64.
class Coeff {
 public:
  Coeff() noexcept = default;
  Coeff(long long v) noexcept : v_(v) {}
  Coeff(int v) noexcept : v_(v) {}
  Coeff(const Coeff& o);
  Coeff(Coeff&& o) noexcept = default;
  Coeff& operator=(const Coeff& o);
  Coeff& operator=(Coeff&& o) noexcept;
  ~Coeff();

  // Accepts an optional leading '-' followed by decimal digits.
  static Coeff from_decimal(std::string_view s);

  bool is_zero() const noexcept { return big_ == nullptr && v_ == 0; }
  bool fits_int64() const noexcept { return big_ == nullptr; }
  long long as_int64() const;  // throws std::range_error if too large
  int sign() const noexcept;
  std::string str() const;

  Coeff& operator+=(const Coeff& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_add_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    add_slow(o);
    return *this;
  }
  Coeff& operator-=(const Coeff& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_sub_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    sub_slow(o);
    return *this;
  }
  Coeff& operator*=(const Coeff& o) {
    if (!big_ && !o.big_) {
      long long r;
      if (!__builtin_mul_overflow(v_, o.v_, &r)) {
        v_ = r;
        return *this;
      }
    }
    mul_slow(o);
    return *this;
  }
  void negate();

  friend Coeff operator+(Coeff a, const Coeff& b) { a += b; return a; }
  friend Coeff operator-(Coeff a, const Coeff& b) { a -= b; return a; }
  friend Coeff operator*(Coeff a, const Coeff& b) { a *= b; return a; }
  friend Coeff operator-(Coeff a) { a.negate(); return a; }

  friend bool operator==(const Coeff& a, const Coeff& b) noexcept {
    if (!a.big_ && !b.big_) return a.v_ == b.v_;
    if (!a.big_ || !b.big_) return false;
    return big_equal(a, b);
  }
  friend bool operator!=(const Coeff& a, const Coeff& b) noexcept {
    return !(a == b);
  }

  // Writes num/den to out and returns true when den divides num exactly.
  // Pre: den != 0.
  static bool div_exact(const Coeff& num, const Coeff& den, Coeff& out);

 private:
  long long v_ = 0;
  detail::BigPtr big_;

  void add_slow(const Coeff& o);
  void sub_slow(const Coeff& o);
  void mul_slow(const Coeff& o);
  void demote_if_small();
  static bool big_equal(const Coeff& a, const Coeff& b) noexcept;
};

// deg_min / deg_max were asked of the zero polynomial, which has no degree.
struct ZeroPolyError : std::domain_error {
  ZeroPolyError() : std::domain_error("zero polynomial has no degree") {}
};

struct PolyParseError : std::runtime_error {
  size_t position;
  PolyParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Laurent polynomial over the integers: sorted sparse term list, strictly
// increasing exponents, no zero coefficients.
class LaurentPoly {
 public:
  using Term = std::pair<int, Coeff>;

  LaurentPoly() = default;  // the zero polynomial

  // Sorts, combines equal exponents, drops zero coefficients.
  static LaurentPoly from_terms(std::vector<Term> terms);
  static LaurentPoly monomial(Coeff c, int exp);
  static LaurentPoly constant(long long c) { return monomial(c, 0); }
  static LaurentPoly one() { return monomial(1, 0); }
  static LaurentPoly t_power(int exp) { return monomial(1, exp); }

  bool is_zero() const noexcept { return terms_.empty(); }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  size_t term_count() const noexcept { return terms_.size(); }

  int deg_min() const;  // throws ZeroPolyError on the zero polynomial
  int deg_max() const;  // throws ZeroPolyError on the zero polynomial
  Coeff coeff(int exp) const;

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) {
    a += b;
    return a;
  }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) {
    a -= b;
    return a;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(LaurentPoly a);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) {
    return !(a == b);
  }

  // Multiply by t^de in place.
  LaurentPoly& shift(int de);
  LaurentPoly shifted(int de) const;

  // Canonical text form, terms by increasing exponent, e.g.
  // "-t^-3+t^-2-1+2*t-t^2"; the zero polynomial prints as "0".
  std::string to_text() const;
  // Parses the canonical form (whitespace tolerated, '*' optional).
  static LaurentPoly parse(std::string_view text);

 private:
  std::vector<Term> terms_;
  void normalize();
};

// Exact division: returns the quotient when d divides p exactly, otherwise
// std::nullopt (a normal outcome, used to search for decomposition exponents).
// Pre: d != 0 (throws std::invalid_argument).
std::optional<LaurentPoly> exact_div(const LaurentPoly& p,
                                     const LaurentPoly& d);

enum class Direction { t, t_inverse };

// Partial sum of the geometric series with initial term 1 and quotient -t
// (Direction::t) or -t^-1 (Direction::t_inverse): sum_{k=0..i} (-t^{+-1})^k.
LaurentPoly geometric_partial_sum(int i, Direction direction);

}  // namespace burau4::laurent
