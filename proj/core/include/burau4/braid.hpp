#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace burau4::braid {

struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// One signed generator letter. For braid words index means sigma_index; for
// Bokut-Vesnin words index 1 is a and index 2 is b.
struct Letter {
  int index;
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

struct BraidWord {
  int strands = 4;  // 3 or 4
  std::vector<Letter> letters;
  bool reduced = false;  // set by free_reduce; no adjacent inverse pairs
  size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const BraidWord& a, const BraidWord& b) {
    return a.strands == b.strands && a.letters == b.letters;
  }
};

struct BVWord {
  std::vector<Letter> letters;  // index 1 = a, index 2 = b
  bool reduced = false;
  size_t length() const noexcept { return letters.size(); }
  friend bool operator==(const BVWord& a, const BVWord& b) {
    return a.letters == b.letters;
  }
};

// Bijection of {1..n}, n = 3 or 4.
class StrandPermutation {
 public:
  explicit StrandPermutation(int n);  // identity
  int size() const noexcept { return n_; }
  int image(int i) const;  // 1-based
  void swap_adjacent(int i);  // post-compose with the transposition (i, i+1)
  bool is_identity() const noexcept;
  StrandPermutation inverse() const;
  friend StrandPermutation operator*(const StrandPermutation& a,
                                     const StrandPermutation& b);
  friend bool operator==(const StrandPermutation&,
                         const StrandPermutation&) = default;

 private:
  int n_;
  std::array<uint8_t, 4> img_;
};

// Deterministic explicit-state generator (splitmix64); identical output on
// every platform, which the reproducibility contract of batch runs requires.
class Rng {
 public:
  explicit Rng(uint64_t seed) noexcept : state_(seed) {}
  uint64_t next() noexcept {
    uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }
  // Uniform value in [0, bound); bound >= 1.
  uint64_t below(uint64_t bound) noexcept {
    return static_cast<uint64_t>(
        (static_cast<unsigned __int128>(next()) * bound) >> 64);
  }

 private:
  uint64_t state_;
};

// Tokens "s1".."s3" / "S1".."S3" (or unicode sigma followed by the index),
// optional "^k" with integer k != 0; whitespace-separated or concatenated.
BraidWord parse_braid(std::string_view text, int strand_count);

// BV grammar: letters a/b with uppercase A/B meaning inverse, optional "^k".
BVWord parse_bv(std::string_view text);

// Emission mirrors parsing: braid words as space-separated tokens with
// collapsed powers, BV words as concatenated letters.
std::string to_text(const BraidWord& w);
std::string to_text(const BVWord& w);

BraidWord free_reduce(const BraidWord& w);
BVWord free_reduce(const BVWord& w);

// Formal inverse: reverse the letters and flip the signs.
BraidWord inverse(const BraidWord& w);
BVWord inverse(const BVWord& w);

BraidWord concat(const BraidWord& u, const BraidWord& v);
BVWord concat(const BVWord& u, const BVWord& v);

// w^k for any integer k (negative powers use the formal inverse).
BVWord power(const BVWord& w, int k);

// Letterwise substitution a -> s1 s2 s1^-1 s3 s2^-1 s1^-1, b -> s3 s1^-1;
// inverse letters expand to the reversed sign-flipped word. Not auto-reduced.
BraidWord bv_expand(const BVWord& w);

// The projection B4 -> B3 sending s1 -> s1, s2 -> s2, s3 -> s1.
BraidWord phi(const BraidWord& w);

StrandPermutation permutation(const BraidWord& w);
StrandPermutation permutation(const BVWord& w);

// Uniform non-backtracking walk: first letter uniform over the 4 signed
// generators, each following letter uniform over the 3 non-cancelling ones.
BVWord random_reduced_bv_word(size_t length, Rng& rng);
BVWord random_reduced_bv_word(size_t length, uint64_t seed);

}  // namespace burau4::braid
