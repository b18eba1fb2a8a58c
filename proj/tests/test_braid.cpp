#include <doctest.h>

#include <set>
#include <string>

#include "burau4/braid.hpp"

using namespace burau4::braid;

namespace {

BVWord random_word_or_empty(Rng& rng, int max_len) {
  const auto len = rng.below(static_cast<uint64_t>(max_len) + 1);
  if (len == 0) return BVWord{};
  return random_reduced_bv_word(len, rng);
}

}  // namespace

TEST_CASE("braid word parsing and emission") {
  const BraidWord w = parse_braid("s1 s2^-3 S3 s1^2", 4);
  REQUIRE(w.length() == 7);
  CHECK(w.letters[0] == Letter{1, +1});
  CHECK(w.letters[1] == Letter{2, -1});
  CHECK(w.letters[3] == Letter{2, -1});
  CHECK(w.letters[4] == Letter{3, -1});
  CHECK(w.letters[5] == Letter{1, +1});
  CHECK(to_text(w) == "s1 s2^-3 s3^-1 s1^2");
  CHECK(parse_braid(to_text(w), 4) == w);

  CHECK(parse_braid("\xcf\x83" "1\xcf\x83" "2", 4) ==
        parse_braid("s1 s2", 4));
  CHECK(parse_braid("", 4).length() == 0);
  CHECK(parse_braid("s1s2s1", 4).length() == 3);
  CHECK(parse_braid("s1 s2", 3).strands == 3);
}

TEST_CASE("braid parser rejects out-of-range input") {
  CHECK_THROWS_AS((void)parse_braid("s9", 4), ParseError);
  CHECK_THROWS_AS((void)parse_braid("s0", 4), ParseError);
  CHECK_THROWS_AS((void)parse_braid("s3", 3), ParseError);
  CHECK_THROWS_AS((void)parse_braid("s1^0", 4), ParseError);
  CHECK_THROWS_AS((void)parse_braid("s1^", 4), ParseError);
  CHECK_THROWS_AS((void)parse_braid("x1", 4), ParseError);
  CHECK_THROWS_AS((void)parse_braid("s", 4), ParseError);
  try {
    (void)parse_braid("s1 s9", 4);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position >= 3);
  }
}

TEST_CASE("free-group word parsing and emission") {
  const BVWord w = parse_bv("a^3 b^3 abAB b^-3 a^-3");
  CHECK(w.length() == 16);
  CHECK(to_text(w) == "aaabbbabABBBBAAA");
  CHECK(parse_bv(to_text(w)) == w);
  CHECK(parse_bv("").length() == 0);
  CHECK(to_text(BVWord{}) == "");
  CHECK_THROWS_AS((void)parse_bv("c"), ParseError);
  CHECK_THROWS_AS((void)parse_bv("a^0"), ParseError);
  CHECK_THROWS_AS((void)parse_bv("s1"), ParseError);
}

TEST_CASE("free reduction") {
  CHECK(free_reduce(parse_bv("aA")).length() == 0);
  CHECK(free_reduce(parse_bv("abBA")).length() == 0);
  CHECK(free_reduce(parse_bv("abBb")) == parse_bv("ab"));
  CHECK(free_reduce(parse_bv("ab")).reduced);

  CHECK(free_reduce(parse_braid("s1 S1", 4)).length() == 0);
  CHECK(free_reduce(parse_braid("s1 s2 S2 S1 s3", 4)) ==
        parse_braid("s3", 4));

  Rng rng(404);
  for (int i = 0; i < 100; ++i) {
    const BVWord w = random_word_or_empty(rng, 12);
    CHECK(free_reduce(concat(w, inverse(w))).length() == 0);
    CHECK(free_reduce(w) == w);  // generator output is already reduced
    CHECK(inverse(inverse(w)) == w);
  }
}

TEST_CASE("powers") {
  const BVWord a = parse_bv("a");
  CHECK(power(a, 3) == parse_bv("aaa"));
  CHECK(power(a, -2) == parse_bv("AA"));
  CHECK(power(a, 0).length() == 0);
  const BVWord w = parse_bv("ab");
  CHECK(power(w, 2) == parse_bv("abab"));
  CHECK(power(w, -1) == inverse(w));
}

TEST_CASE("strand permutations") {
  StrandPermutation id4(4);
  CHECK(id4.is_identity());
  StrandPermutation s1 = id4;
  s1.swap_adjacent(1);
  CHECK(s1.image(1) == 2);
  CHECK(s1.image(2) == 1);
  CHECK(s1.image(3) == 3);
  CHECK(s1 * s1 == id4);
  CHECK(s1.inverse() == s1);

  // Fixed images of the two free-group letters.
  const StrandPermutation pa = permutation(parse_bv("a"));
  CHECK(pa.image(1) == 4);
  CHECK(pa.image(2) == 3);
  CHECK(pa.image(3) == 2);
  CHECK(pa.image(4) == 1);
  const StrandPermutation pb = permutation(parse_bv("b"));
  CHECK(pb.image(1) == 2);
  CHECK(pb.image(2) == 1);
  CHECK(pb.image(3) == 4);
  CHECK(pb.image(4) == 3);
}

TEST_CASE("permutation is a homomorphism") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const BVWord u = random_word_or_empty(rng, 10);
    const BVWord v = random_word_or_empty(rng, 10);
    CHECK(permutation(concat(u, v)) == permutation(u) * permutation(v));
    CHECK((permutation(u) * permutation(inverse(u))).is_identity());
    CHECK(permutation(bv_expand(u)) == permutation(u));
  }
}

TEST_CASE("letter expansion") {
  CHECK(bv_expand(parse_bv("a")) ==
        parse_braid("s1 s2 S1 s3 S2 S1", 4));
  CHECK(bv_expand(parse_bv("b")) == parse_braid("s3 S1", 4));
  CHECK(bv_expand(parse_bv("A")) ==
        parse_braid("s1 s2 S3 s1 S2 S1", 4));
  CHECK(bv_expand(parse_bv("B")) == parse_braid("s1 S3", 4));

  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    const BVWord w = random_word_or_empty(rng, 8);
    CHECK(bv_expand(inverse(w)) == inverse(bv_expand(w)));
    CHECK(bv_expand(w).length() ==
          [&] {
            size_t n = 0;
            for (const Letter& x : w.letters) n += (x.index == 1) ? 6 : 2;
            return n;
          }());
  }
}

TEST_CASE("projection phi kills both letters") {
  CHECK(phi(parse_braid("s1 s2 s3", 4)) == parse_braid("s1 s2 s1", 3));
  CHECK(phi(parse_braid("S3", 4)) == parse_braid("S1", 3));
  CHECK_THROWS_AS((void)phi(parse_braid("s1", 3)), std::invalid_argument);

  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const BVWord w = random_word_or_empty(rng, 8);
    // The expansion of any word in the two letters lies in ker phi.
    CHECK(free_reduce(phi(bv_expand(w))).length() == 0);
  }
}

TEST_CASE("random reduced words") {
  Rng rng(1);
  for (int len : {1, 2, 5, 17}) {
    const BVWord w = random_reduced_bv_word(static_cast<size_t>(len), rng);
    CHECK(w.length() == static_cast<size_t>(len));
    CHECK(w.reduced);
    CHECK(free_reduce(w) == w);
  }
  CHECK_THROWS_AS((void)random_reduced_bv_word(0, rng), std::invalid_argument);

  // Same seed, same word; the stream is part of the file-format contract.
  CHECK(random_reduced_bv_word(10, 42) == random_reduced_bv_word(10, 42));
  CHECK(random_reduced_bv_word(10, 42) != random_reduced_bv_word(10, 43));

  // All four letters actually occur.
  std::set<std::string> seen;
  Rng r2(3);
  for (int i = 0; i < 64; ++i)
    seen.insert(to_text(random_reduced_bv_word(1, r2)));
  CHECK(seen == std::set<std::string>{"a", "A", "b", "B"});
}

TEST_CASE("deterministic generator stream") {
  Rng x(123), y(123);
  for (int i = 0; i < 10; ++i) CHECK(x.next() == y.next());
  Rng z(0);
  for (int i = 0; i < 1000; ++i) {
    const uint64_t v = z.below(7);
    CHECK(v < 7);
  }
}
