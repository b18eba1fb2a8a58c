#include "burau4/braid.hpp"

#include <algorithm>
#include <cctype>

namespace burau4::braid {

// --- StrandPermutation -------------------------------------------------------

StrandPermutation::StrandPermutation(int n) : n_(n) {
  if (n != 3 && n != 4)
    throw std::invalid_argument("permutation size must be 3 or 4");
  for (int i = 0; i < 4; ++i) img_[static_cast<size_t>(i)] = static_cast<uint8_t>(i + 1);
}

int StrandPermutation::image(int i) const {
  if (i < 1 || i > n_) throw std::out_of_range("strand index");
  return img_[static_cast<size_t>(i - 1)];
}

void StrandPermutation::swap_adjacent(int i) {
  if (i < 1 || i >= n_) throw std::out_of_range("transposition index");
  for (int k = 0; k < n_; ++k) {
    auto& v = img_[static_cast<size_t>(k)];
    if (v == i)
      v = static_cast<uint8_t>(i + 1);
    else if (v == i + 1)
      v = static_cast<uint8_t>(i);
  }
}

bool StrandPermutation::is_identity() const noexcept {
  for (int i = 0; i < n_; ++i)
    if (img_[static_cast<size_t>(i)] != i + 1) return false;
  return true;
}

StrandPermutation StrandPermutation::inverse() const {
  StrandPermutation r(n_);
  for (int i = 1; i <= n_; ++i)
    r.img_[static_cast<size_t>(image(i) - 1)] = static_cast<uint8_t>(i);
  return r;
}

StrandPermutation operator*(const StrandPermutation& a,
                            const StrandPermutation& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("permutation size mismatch");
  StrandPermutation r(a.n_);
  // (a*b)(i) = b(a(i)): a acts first, matching word concatenation.
  for (int i = 1; i <= a.n_; ++i)
    r.img_[static_cast<size_t>(i - 1)] = static_cast<uint8_t>(b.image(a.image(i)));
  return r;
}

// --- parsing -----------------------------------------------------------------

namespace {

struct WordParser {
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
  [[noreturn]] void fail(const std::string& what) {
    throw ParseError(what + " at position " + std::to_string(pos), pos);
  }

  // Optional "^k", k != 0. Returns 1 when absent.
  int parse_power() {
    if (pos >= s.size() || s[pos] != '^') return 1;
    ++pos;
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    size_t digits_from = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == digits_from) fail("expected integer exponent after '^'");
    long long k = 0;
    bool neg = (s[start] == '-');
    for (size_t i = digits_from; i < pos; ++i) {
      k = k * 10 + (s[i] - '0');
      if (k > 1 << 20) fail("exponent out of range");
    }
    if (neg) k = -k;
    if (k == 0) fail("zero exponent not allowed");
    return static_cast<int>(k);
  }

  void append(std::vector<Letter>& letters, int index, int sign, int k) {
    if (k < 0) {
      sign = -sign;
      k = -k;
    }
    for (int i = 0; i < k; ++i) letters.push_back({index, sign});
  }
};

constexpr std::string_view kSigmaUtf8 = "\xcf\x83";  // lowercase sigma

}  // namespace

BraidWord parse_braid(std::string_view text, int strand_count) {
  if (strand_count != 3 && strand_count != 4)
    throw std::invalid_argument("strand count must be 3 or 4");
  WordParser p{text};
  BraidWord w;
  w.strands = strand_count;
  while (!p.eof()) {
    int sign = +1;
    char c = p.s[p.pos];
    if (c == 's' || c == 'S') {
      sign = (c == 'S') ? -1 : +1;
      ++p.pos;
    } else if (p.s.substr(p.pos, kSigmaUtf8.size()) == kSigmaUtf8) {
      p.pos += kSigmaUtf8.size();
    } else {
      p.fail("expected generator token");
    }
    if (p.pos >= p.s.size() ||
        !std::isdigit(static_cast<unsigned char>(p.s[p.pos])))
      p.fail("expected generator index");
    int index = p.s[p.pos] - '0';
    ++p.pos;
    if (index < 1 || index >= strand_count)
      p.fail("generator index out of range (max " +
             std::to_string(strand_count - 1) + ")");
    int k = p.parse_power();
    p.append(w.letters, index, sign, k);
  }
  return w;
}

BVWord parse_bv(std::string_view text) {
  WordParser p{text};
  BVWord w;
  while (!p.eof()) {
    char c = p.s[p.pos];
    int index, sign;
    switch (c) {
      case 'a': index = 1; sign = +1; break;
      case 'A': index = 1; sign = -1; break;
      case 'b': index = 2; sign = +1; break;
      case 'B': index = 2; sign = -1; break;
      default: p.fail("expected one of a, b, A, B");
    }
    ++p.pos;
    int k = p.parse_power();
    p.append(w.letters, index, sign, k);
  }
  return w;
}

std::string to_text(const BraidWord& w) {
  std::string out;
  size_t i = 0;
  while (i < w.letters.size()) {
    size_t j = i;
    while (j < w.letters.size() && w.letters[j] == w.letters[i]) ++j;
    if (!out.empty()) out += ' ';
    out += 's';
    out += static_cast<char>('0' + w.letters[i].index);
    const long long run = static_cast<long long>(j - i);
    const long long k = w.letters[i].sign * run;
    if (k != 1) {
      out += '^';
      out += std::to_string(k);
    }
    i = j;
  }
  return out;
}

std::string to_text(const BVWord& w) {
  static constexpr char kNames[2][2] = {{'a', 'A'}, {'b', 'B'}};
  std::string out;
  out.reserve(w.letters.size());
  for (const auto& l : w.letters)
    out += kNames[l.index - 1][l.sign < 0 ? 1 : 0];
  return out;
}

// --- reduction and word algebra ------------------------------------------------

namespace {

std::vector<Letter> reduce_letters(const std::vector<Letter>& in) {
  std::vector<Letter> stack;
  stack.reserve(in.size());
  for (const auto& l : in) {
    if (!stack.empty() && stack.back().index == l.index &&
        stack.back().sign == -l.sign)
      stack.pop_back();
    else
      stack.push_back(l);
  }
  return stack;
}

std::vector<Letter> invert_letters(const std::vector<Letter>& in) {
  std::vector<Letter> out;
  out.reserve(in.size());
  for (auto it = in.rbegin(); it != in.rend(); ++it)
    out.push_back({it->index, -it->sign});
  return out;
}

}  // namespace

BraidWord free_reduce(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters = reduce_letters(w.letters);
  r.reduced = true;
  return r;
}

BVWord free_reduce(const BVWord& w) {
  BVWord r;
  r.letters = reduce_letters(w.letters);
  r.reduced = true;
  return r;
}

BraidWord inverse(const BraidWord& w) {
  BraidWord r;
  r.strands = w.strands;
  r.letters = invert_letters(w.letters);
  r.reduced = w.reduced;  // reduction is preserved under formal inversion
  return r;
}

BVWord inverse(const BVWord& w) {
  BVWord r;
  r.letters = invert_letters(w.letters);
  r.reduced = w.reduced;
  return r;
}

BraidWord concat(const BraidWord& u, const BraidWord& v) {
  if (u.strands != v.strands)
    throw std::invalid_argument("strand count mismatch in concat");
  BraidWord r;
  r.strands = u.strands;
  r.letters = u.letters;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BVWord concat(const BVWord& u, const BVWord& v) {
  BVWord r;
  r.letters = u.letters;
  r.letters.insert(r.letters.end(), v.letters.begin(), v.letters.end());
  return r;
}

BVWord power(const BVWord& w, int k) {
  BVWord base = (k < 0) ? inverse(w) : w;
  int reps = (k < 0) ? -k : k;
  BVWord r;
  r.letters.reserve(base.letters.size() * static_cast<size_t>(reps));
  for (int i = 0; i < reps; ++i)
    r.letters.insert(r.letters.end(), base.letters.begin(),
                     base.letters.end());
  return r;
}

namespace {

const std::vector<Letter>& a_expansion() {
  static const std::vector<Letter> kA = {{1, +1}, {2, +1}, {1, -1},
                                         {3, +1}, {2, -1}, {1, -1}};
  return kA;
}

const std::vector<Letter>& b_expansion() {
  static const std::vector<Letter> kB = {{3, +1}, {1, -1}};
  return kB;
}

}  // namespace

BraidWord bv_expand(const BVWord& w) {
  BraidWord r;
  r.strands = 4;
  for (const auto& l : w.letters) {
    const auto& exp = (l.index == 1) ? a_expansion() : b_expansion();
    if (l.sign > 0) {
      r.letters.insert(r.letters.end(), exp.begin(), exp.end());
    } else {
      auto inv = invert_letters(exp);
      r.letters.insert(r.letters.end(), inv.begin(), inv.end());
    }
  }
  return r;
}

BraidWord phi(const BraidWord& w) {
  if (w.strands != 4) throw std::invalid_argument("phi expects a B4 word");
  BraidWord r;
  r.strands = 3;
  r.letters.reserve(w.letters.size());
  for (const auto& l : w.letters)
    r.letters.push_back({l.index == 3 ? 1 : l.index, l.sign});
  return r;
}

StrandPermutation permutation(const BraidWord& w) {
  StrandPermutation p(w.strands);
  for (const auto& l : w.letters) p.swap_adjacent(l.index);
  return p;
}

StrandPermutation permutation(const BVWord& w) {
  return permutation(bv_expand(w));
}

BVWord random_reduced_bv_word(size_t length, Rng& rng) {
  if (length < 1)
    throw std::invalid_argument("random_reduced_bv_word: length must be >= 1");
  static constexpr Letter kAll[4] = {{1, +1}, {1, -1}, {2, +1}, {2, -1}};
  BVWord w;
  w.letters.reserve(length);
  w.letters.push_back(kAll[rng.below(4)]);
  while (w.letters.size() < length) {
    const Letter& prev = w.letters.back();
    const Letter forbidden{prev.index, -prev.sign};
    uint64_t k = rng.below(3);
    for (const auto& cand : kAll) {
      if (cand == forbidden) continue;
      if (k == 0) {
        w.letters.push_back(cand);
        break;
      }
      --k;
    }
  }
  w.reduced = true;
  return w;
}

BVWord random_reduced_bv_word(size_t length, uint64_t seed) {
  Rng rng(seed);
  return random_reduced_bv_word(length, rng);
}

}  // namespace burau4::braid
