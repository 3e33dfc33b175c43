#include <gtest/gtest.h>

#include <random>

#include "palwidth/palwidth.hpp"

using namespace palwidth;

namespace {

Word W(const char* text, std::size_t rank = 2) { return parse_word(text, rank); }

// Cyclic word of v read backwards equals some rotation of it.
bool cyclically_reversible(const Word& v) {
  const Word core = cyclic_reduce(v).core;
  const Word rev = reverse(core);
  for (std::size_t s = 0; s <= core.size(); ++s) {
    if (rotate(core, s) == rev) return true;
  }
  return core.empty();
}

}  // namespace

TEST(Palindromes, Recognition) {
  EXPECT_TRUE(is_palindrome(W("x1^-2 x2^3 x3^-4 x2^3 x1^-2", 3)));
  EXPECT_FALSE(is_palindrome(W("x1 x2")));
  EXPECT_TRUE(is_palindrome(Word(2)));
  EXPECT_TRUE(is_palindrome(W("x1^-5")));
}

TEST(Palindromes, Palindromize) {
  EXPECT_EQ(palindromize(W("x1"), Word(2)), W("x1^-2"));
  EXPECT_EQ(palindromize(Word(2), W("x1 x2 x1")), W("x1 x2 x1"));
  const Word q = palindromize(W("x1 x2"), W("x2"));
  EXPECT_EQ(q, W("x1^-1 x2^-1 x1^-1"));
  EXPECT_TRUE(is_palindrome(q));
  EXPECT_THROW(palindromize(W("x1"), W("x1 x2")), PreconditionError);
}

TEST(Palindromes, PalindromizeAlwaysGivesPalindromes) {
  std::mt19937_64 rng(5);
  const auto pals = enumerate_palindromes(3, 5);
  for (int i = 0; i < 1000; ++i) {
    const Word u = random_word(3, static_cast<std::size_t>(i % 12), rng);
    EXPECT_TRUE(is_palindrome(palindromize(u, pals[static_cast<std::size_t>(i) % pals.size()])));
  }
}

TEST(Palindromes, Retract) {
  EXPECT_EQ(retract(W("x3 x1 x2", 3), {3}), W("x1 x2", 3));
  EXPECT_EQ(retract(W("x1 x2^-1 x1", 3), {3}), W("x1 x2^-1 x1", 3));
  const Word r = retract(W("x1 x3 x1", 3), {3});
  EXPECT_EQ(r, W("x1^2", 3));
  EXPECT_TRUE(is_palindrome(r));
}

TEST(Palindromes, EnumerationSmallCases) {
  const auto r1 = enumerate_palindromes(1, 2);
  const std::vector<Word> expect1{Word(1), W("x1", 1), W("x1^-1", 1), W("x1^2", 1),
                                  W("x1^-2", 1)};
  EXPECT_EQ(r1, expect1);
  const auto r2 = enumerate_palindromes(2, 1);
  const std::vector<Word> expect2{Word(2), W("x1"), W("x1^-1"), W("x2"), W("x2^-1")};
  EXPECT_EQ(r2, expect2);
}

TEST(Palindromes, EnumerationMatchesFilter) {
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (std::size_t len = 0; len <= 7; ++len) {
      std::vector<Word> filtered;
      for_each_word(rank, len, [&](const Word& w) {
        if (reverse(w) == w) filtered.push_back(w);
      });
      std::sort(filtered.begin(), filtered.end(), shortlex_less);
      EXPECT_EQ(enumerate_palindromes(rank, len), filtered) << rank << " " << len;
    }
  }
  // Reduced words of length <= 3 in rank 2: 1 + 4 + 12 + 36 of which the
  // palindromes are 1 + 4 + 4 + 12.
  EXPECT_EQ(enumerate_palindromes(2, 3).size(), 21u);
}

TEST(Palindromes, TwoPalindromeTestAgreesWithSearchAndCyclicReversal) {
  const auto pals = enumerate_palindromes(2, 8);
  std::size_t yes = 0;
  for_each_word(2, 6, [&](const Word& v) {
    bool brute = false;
    for (const Word& p : pals) {
      if (is_palindrome(multiply(invert(p), v))) {
        brute = true;
        break;
      }
    }
    const auto got = two_palindrome_factors(v);
    if (brute) EXPECT_TRUE(got.has_value()) << print_word(v);
    EXPECT_EQ(got.has_value(), cyclically_reversible(v)) << print_word(v);
    if (got) {
      ++yes;
      EXPECT_TRUE(is_palindrome(got->first));
      EXPECT_TRUE(is_palindrome(got->second));
      EXPECT_EQ(multiply(got->first, got->second), v);
    }
  });
  EXPECT_GT(yes, 0u);
}

TEST(Palindromes, LengthBoundedBasics) {
  const auto empty = pal_length_bounded(Word(2), 3, 0);
  EXPECT_TRUE(empty.exact());
  EXPECT_EQ(empty.lower, 0u);

  const Word p = W("x1 x2^2 x1");
  const auto one = pal_length_bounded(p, 3, p.size());
  EXPECT_EQ(one.lower, 1u);
  ASSERT_TRUE(one.upper);
  EXPECT_EQ(*one.upper, 1u);

  const auto two = pal_length_bounded(W("x1 x2"), 3, 2);
  EXPECT_EQ(two.lower, 2u);
  ASSERT_TRUE(two.upper);
  EXPECT_EQ(*two.upper, 2u);
  ASSERT_EQ(two.witness.size(), 2u);
  EXPECT_EQ(multiply(two.witness[0], two.witness[1]), W("x1 x2"));
}

TEST(Palindromes, DeltaForcesThreeFactors) {
  const Word w = pal_witness(13);
  const auto b = pal_length_bounded(w, 2, 2 * w.size());
  EXPECT_GE(b.lower, 3u);
  EXPECT_FALSE(b.upper.has_value() && *b.upper < 3);
}

TEST(Palindromes, WitnessesAlwaysVerify) {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(2, 1 + static_cast<std::size_t>(i % 6), rng);
    const auto b = pal_length_bounded(w, 4);
    ASSERT_TRUE(b.upper) << print_word(w);
    EXPECT_LE(b.lower, *b.upper);
    EXPECT_EQ(b.witness.size(), *b.upper);
    Word prod(2);
    for (const Word& f : b.witness) {
      EXPECT_TRUE(is_palindrome(f));
      EXPECT_LE(f.size(), b.factor_len_cap);
      prod = multiply(prod, f);
    }
    EXPECT_EQ(prod, w);
  }
}

// abABab needs three or four palindromes; the bounded search leaves that
// bracket open rather than guessing.
TEST(Palindromes, OpenBracketStaysOpen) {
  const auto b = pal_length_bounded(W("abABab"), 4);
  EXPECT_EQ(b.lower, 3u);
  ASSERT_TRUE(b.upper);
  EXPECT_EQ(*b.upper, 4u);
}
