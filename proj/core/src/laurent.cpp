#include "burau4/laurent.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <charconv>
#include <limits>

namespace burau4::laurent {

namespace detail {
struct BigInt {
  mpz_class v;
};

void BigIntDeleter::operator()(BigInt* p) const noexcept { delete p; }
}  // namespace detail

using detail::BigInt;
using detail::BigPtr;

namespace {

BigPtr make_big(mpz_class v = mpz_class()) {
  return BigPtr(new BigInt{std::move(v)});
}

mpz_class to_mpz(const Coeff& c, const BigInt* big, long long small) {
  (void)c;
  if (big) return big->v;
  mpz_class z;
  // mpz_class has no long long constructor on LP64; long == long long here.
  static_assert(sizeof(long) == sizeof(long long));
  z = static_cast<long>(small);
  return z;
}

}  // namespace

// --- Coeff -----------------------------------------------------------------

Coeff::Coeff(const Coeff& o)
    : v_(o.v_), big_(o.big_ ? make_big(o.big_->v) : nullptr) {}

Coeff& Coeff::operator=(const Coeff& o) {
  if (this != &o) {
    v_ = o.v_;
    big_ = o.big_ ? make_big(o.big_->v) : nullptr;
  }
  return *this;
}

Coeff& Coeff::operator=(Coeff&& o) noexcept {
  v_ = o.v_;
  big_ = std::move(o.big_);
  return *this;
}

Coeff::~Coeff() = default;

Coeff Coeff::from_decimal(std::string_view s) {
  if (s.empty()) throw std::invalid_argument("empty coefficient literal");
  size_t i = (s[0] == '-') ? 1 : 0;
  if (i == s.size()) throw std::invalid_argument("sign without digits");
  for (size_t k = i; k < s.size(); ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("invalid coefficient literal: " +
                                  std::string(s));
  long long v;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec == std::errc() && ptr == s.data() + s.size()) return Coeff(v);
  Coeff c;
  c.big_ = make_big();
  c.big_->v = mpz_class(std::string(s), 10);
  c.demote_if_small();
  return c;
}

long long Coeff::as_int64() const {
  if (big_) throw std::range_error("coefficient does not fit in int64");
  return v_;
}

int Coeff::sign() const noexcept {
  if (big_) return mpz_sgn(big_->v.get_mpz_t());
  return (v_ > 0) - (v_ < 0);
}

std::string Coeff::str() const {
  if (big_) return big_->v.get_str();
  return std::to_string(v_);
}

void Coeff::demote_if_small() {
  if (!big_) return;
  if (big_->v.fits_slong_p()) {
    v_ = big_->v.get_si();
    big_.reset();
  }
}

void Coeff::add_slow(const Coeff& o) {
  mpz_class r = to_mpz(*this, big_.get(), v_) + to_mpz(o, o.big_.get(), o.v_);
  big_ = make_big(std::move(r));
  demote_if_small();
}

void Coeff::sub_slow(const Coeff& o) {
  mpz_class r = to_mpz(*this, big_.get(), v_) - to_mpz(o, o.big_.get(), o.v_);
  big_ = make_big(std::move(r));
  demote_if_small();
}

void Coeff::mul_slow(const Coeff& o) {
  mpz_class r = to_mpz(*this, big_.get(), v_) * to_mpz(o, o.big_.get(), o.v_);
  big_ = make_big(std::move(r));
  demote_if_small();
}

void Coeff::negate() {
  if (!big_) {
    if (v_ != std::numeric_limits<long long>::min()) {
      v_ = -v_;
      return;
    }
  }
  mpz_class r = -to_mpz(*this, big_.get(), v_);
  big_ = make_big(std::move(r));
  demote_if_small();
}

bool Coeff::big_equal(const Coeff& a, const Coeff& b) noexcept {
  return a.big_->v == b.big_->v;
}

bool Coeff::div_exact(const Coeff& num, const Coeff& den, Coeff& out) {
  if (den.is_zero()) throw std::invalid_argument("division by zero");
  if (!num.big_ && !den.big_) {
    // INT64_MIN / -1 traps in hardware; divert before touching % or /.
    if (num.v_ == std::numeric_limits<long long>::min() && den.v_ == -1) {
      out.big_ = make_big();
      out.big_->v = -to_mpz(num, nullptr, num.v_);
      out.v_ = 0;
      out.demote_if_small();
      return true;
    }
    if (num.v_ % den.v_ != 0) return false;
    out = Coeff(num.v_ / den.v_);
    return true;
  }
  mpz_class n = to_mpz(num, num.big_.get(), num.v_);
  mpz_class d = to_mpz(den, den.big_.get(), den.v_);
  mpz_class q, r;
  mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (r != 0) return false;
  out.big_ = make_big(std::move(q));
  out.v_ = 0;
  out.demote_if_small();
  return true;
}

// --- LaurentPoly -----------------------------------------------------------

void LaurentPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.first < b.first; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().first == t.first) {
      out.back().second += t.second;
      if (out.back().second.is_zero()) out.pop_back();
    } else if (!t.second.is_zero()) {
      out.push_back(std::move(t));
    }
  }
  terms_ = std::move(out);
}

LaurentPoly LaurentPoly::from_terms(std::vector<Term> terms) {
  LaurentPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

LaurentPoly LaurentPoly::monomial(Coeff c, int exp) {
  LaurentPoly p;
  if (!c.is_zero()) p.terms_.emplace_back(exp, std::move(c));
  return p;
}

int LaurentPoly::deg_min() const {
  if (terms_.empty()) throw ZeroPolyError();
  return terms_.front().first;
}

int LaurentPoly::deg_max() const {
  if (terms_.empty()) throw ZeroPolyError();
  return terms_.back().first;
}

Coeff LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const Term& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Coeff(0);
}

namespace {

// Merge-add sorted term lists; sgn = -1 subtracts b.
void merge_into(std::vector<LaurentPoly::Term>& a,
                const std::vector<LaurentPoly::Term>& b, int sgn) {
  if (b.empty()) return;
  std::vector<LaurentPoly::Term> out;
  out.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i].first < b[j].first) {
      out.push_back(std::move(a[i++]));
    } else if (a[i].first > b[j].first) {
      Coeff c = b[j].second;
      if (sgn < 0) c.negate();
      out.emplace_back(b[j].first, std::move(c));
      ++j;
    } else {
      Coeff c = std::move(a[i].second);
      if (sgn < 0)
        c -= b[j].second;
      else
        c += b[j].second;
      if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(std::move(a[i]));
  for (; j < b.size(); ++j) {
    Coeff c = b[j].second;
    if (sgn < 0) c.negate();
    out.emplace_back(b[j].first, std::move(c));
  }
  a = std::move(out);
}

}  // namespace

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, +1);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  merge_into(terms_, o.terms_, -1);
  return *this;
}

LaurentPoly operator-(LaurentPoly a) {
  for (auto& t : a.terms_) t.second.negate();
  return a;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  const int lo = a.terms_.front().first + b.terms_.front().first;
  const int hi = a.terms_.back().first + b.terms_.back().first;
  const long long span = static_cast<long long>(hi) - lo + 1;

  LaurentPoly r;
  // Dense accumulation over the result span; Burau entry spans stay small
  // (they are bounded by the word length), so this is the common path.
  if (span <= 1 << 20) {
    static thread_local std::vector<Coeff> scratch;
    scratch.assign(static_cast<size_t>(span), Coeff(0));
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        scratch[static_cast<size_t>(ta.first + tb.first - lo)] +=
            ta.second * tb.second;
    r.terms_.reserve(std::min<size_t>(a.terms_.size() * b.terms_.size(),
                                      static_cast<size_t>(span)));
    for (long long k = 0; k < span; ++k)
      if (!scratch[static_cast<size_t>(k)].is_zero())
        r.terms_.emplace_back(lo + static_cast<int>(k),
                              std::move(scratch[static_cast<size_t>(k)]));
  } else {
    // Degenerate huge-span case: accumulate sparsely.
    std::vector<LaurentPoly::Term> acc;
    for (const auto& ta : a.terms_)
      for (const auto& tb : b.terms_)
        acc.emplace_back(ta.first + tb.first, ta.second * tb.second);
    r.terms_ = std::move(acc);
    r.normalize();
  }
  return r;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly& LaurentPoly::shift(int de) {
  for (auto& t : terms_) t.first += de;
  return *this;
}

LaurentPoly LaurentPoly::shifted(int de) const {
  LaurentPoly p = *this;
  p.shift(de);
  return p;
}

std::string LaurentPoly::to_text() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exp, c] : terms_) {
    const bool neg = c.sign() < 0;
    if (neg) {
      out += '-';
    } else if (!first) {
      out += '+';
    }
    Coeff mag = c;
    if (neg) mag.negate();
    const bool unit = (mag == Coeff(1));
    if (exp == 0) {
      out += mag.str();
    } else {
      if (!unit) {
        out += mag.str();
        out += '*';
      }
      out += 't';
      if (exp != 1) {
        out += '^';
        out += std::to_string(exp);
      }
    }
    first = false;
  }
  return out;
}

namespace {

struct PolyParser {
  std::string_view s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
  [[noreturn]] void fail(const std::string& what) {
    throw PolyParseError(what + " at position " + std::to_string(pos), pos);
  }

  long long parse_int(bool allow_sign) {
    skip_ws();
    size_t start = pos;
    if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits_from = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits_from) fail("expected integer");
    long long v;
    auto [ptr, ec] = std::from_chars(s.data() + start, s.data() + pos, v);
    if (ec != std::errc() || ptr != s.data() + pos) fail("integer overflow");
    return v;
  }

  // term := sign? number? ('*'? 't' ('^' int)?)?  with at least one of
  // number / 't' present.
  void parse_term(std::vector<LaurentPoly::Term>& terms, bool first) {
    skip_ws();
    int sgn = 1;
    if (pos < s.size() && (s[pos] == '+' || s[pos] == '-')) {
      if (s[pos] == '-') sgn = -1;
      ++pos;
    } else if (!first) {
      fail("expected '+' or '-'");
    }
    skip_ws();
    Coeff coeff(1);
    bool have_number = false;
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() &&
             std::isdigit(static_cast<unsigned char>(s[pos])))
        ++pos;
      coeff = Coeff::from_decimal(s.substr(start, pos - start));
      have_number = true;
    }
    skip_ws();
    if (pos < s.size() && s[pos] == '*') {
      if (!have_number) fail("'*' without coefficient");
      ++pos;
      skip_ws();
    }
    int exp = 0;
    if (pos < s.size() && s[pos] == 't') {
      ++pos;
      exp = 1;
      skip_ws();
      if (pos < s.size() && s[pos] == '^') {
        ++pos;
        long long e = parse_int(true);
        if (e < std::numeric_limits<int>::min() ||
            e > std::numeric_limits<int>::max())
          fail("exponent out of range");
        exp = static_cast<int>(e);
      }
    } else if (!have_number) {
      fail("expected term");
    }
    if (sgn < 0) coeff.negate();
    terms.emplace_back(exp, std::move(coeff));
  }
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyParser p{text};
  if (p.eof()) throw PolyParseError("empty polynomial text", 0);
  std::vector<Term> terms;
  bool first = true;
  while (!p.eof()) {
    p.parse_term(terms, first);
    first = false;
  }
  // "0" parses as the monomial 0*t^0, which normalizes to zero.
  return from_terms(std::move(terms));
}

// --- free functions ----------------------------------------------------------

std::optional<LaurentPoly> exact_div(const LaurentPoly& p,
                                     const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_div by zero");
  if (p.is_zero()) return LaurentPoly();
  // Long division from the lowest exponent: the quotient's lowest term is
  // forced at every step, and its maximal exponent is bounded by
  // deg_max(p) - deg_max(d), so the loop terminates.
  const int q_max = p.deg_max() - d.deg_max();
  LaurentPoly rem = p;
  std::vector<LaurentPoly::Term> q_terms;
  const int d_min = d.deg_min();
  const Coeff& d_low = d.terms().front().second;
  while (!rem.is_zero()) {
    const int e = rem.deg_min() - d_min;
    if (e > q_max) return std::nullopt;
    Coeff q;
    if (!Coeff::div_exact(rem.terms().front().second, d_low, q))
      return std::nullopt;
    LaurentPoly piece = LaurentPoly::monomial(q, e);
    rem -= piece * d;
    q_terms.emplace_back(e, std::move(q));
  }
  return LaurentPoly::from_terms(std::move(q_terms));
}

LaurentPoly geometric_partial_sum(int i, Direction direction) {
  if (i < 0) throw std::invalid_argument("geometric_partial_sum: i < 0");
  std::vector<LaurentPoly::Term> terms;
  terms.reserve(static_cast<size_t>(i) + 1);
  const int step = (direction == Direction::t) ? 1 : -1;
  for (int k = 0; k <= i; ++k)
    terms.emplace_back(step * k, (k % 2 == 0) ? 1 : -1);
  return LaurentPoly::from_terms(std::move(terms));
}

}  // namespace burau4::laurent
