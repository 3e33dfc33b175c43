#include <gtest/gtest.h>

#include <random>
#include <set>

#include "palwidth/palwidth.hpp"

using namespace palwidth;

namespace {

Word W(const char* text, std::size_t rank = 2) { return parse_word(text, rank); }

}  // namespace

TEST(Words, MultiplyCancelsAtTheSeam) {
  EXPECT_EQ(multiply(W("x1 x2"), W("x2^-1")), W("x1"));
  EXPECT_TRUE(multiply(W("x1"), W("x1^-1")).empty());
  EXPECT_EQ(print_word(multiply(W("x1^2"), W("x2^3"))), "x1^2 x2^3");
  EXPECT_TRUE(multiply(W("x1 x2 x1"), W("x1^-1 x2^-1 x1^-1")).empty());
}

TEST(Words, MultiplyRejectsRankMismatch) {
  EXPECT_THROW(multiply(W("x1", 2), W("x1", 3)), RankError);
}

TEST(Words, InvertAndReverse) {
  EXPECT_EQ(invert(W("x1 x2^-1")), W("x2 x1^-1"));
  EXPECT_TRUE(invert(Word(2)).empty());
  EXPECT_EQ(invert(W("x1^2 x2^3")), W("x2^-3 x1^-2"));
  EXPECT_EQ(reverse(W("x1 x2")), W("x2 x1"));
  const Word pal = W("x1^-2 x2^3 x3^-4 x2^3 x1^-2", 3);
  EXPECT_EQ(reverse(pal), pal);
  EXPECT_TRUE(reverse(Word(2)).empty());
}

TEST(Words, ThetaIsLetterwiseInversion) {
  EXPECT_EQ(theta(W("x1 x2")), W("x1^-1 x2^-1"));
  EXPECT_EQ(theta(W("x1^-2 x2^3 x3^-4 x2^3 x1^-2", 3)), W("x1^2 x2^-3 x3^4 x2^-3 x1^2", 3));
  EXPECT_TRUE(theta(Word(2)).empty());
}

TEST(Words, InvolutionsCommute) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word w = random_word(3, i % 20, rng);
    EXPECT_EQ(invert(invert(w)), w);
    EXPECT_EQ(reverse(reverse(w)), w);
    EXPECT_EQ(theta(theta(w)), w);
    EXPECT_EQ(invert(w), theta(reverse(w)));
  }
}

TEST(Words, Syllables) {
  const Word w = W("x1^2 x2^-3 x3^4 x2^-3 x1^2", 3);
  const std::vector<Syllable> expect{{1, 2}, {2, -3}, {3, 4}, {2, -3}, {1, 2}};
  EXPECT_EQ(syllables(w), expect);
  EXPECT_EQ(syllable_length(w), 5u);
  EXPECT_EQ(syllable_length(Word(2)), 0u);
  const Word u2 = W("x1^2 x2^2 x1^2 x2^2");
  EXPECT_EQ(syllable_length(u2), 4u);
  EXPECT_EQ(from_syllables(3, syllables(w)), w);
}

TEST(Words, SyllableWindows) {
  const Word u2 = W("x1^2 x2^2 x1^2 x2^2");
  EXPECT_EQ(syllable_window(u2, 1, 2, false), W("x2^2 x1^2"));
  EXPECT_EQ(syllable_window(u2, 3, 2, true), W("x2^2 x1^2"));
  const Word w = W("x1^2 x2^-3 x3^4", 3);
  EXPECT_EQ(syllable_window(w, 0, 3, false), w);
  EXPECT_THROW(syllable_window(u2, 3, 2, false), PreconditionError);
}

TEST(Words, LetterOrderIsShortlexBase) {
  EXPECT_EQ(Letter(1, 1).index(), 0u);
  EXPECT_EQ(Letter(1, -1).index(), 1u);
  EXPECT_EQ(Letter(2, 1).index(), 2u);
  EXPECT_TRUE(shortlex_less(W("x2"), W("x1 x1")));
  EXPECT_TRUE(shortlex_less(W("x1"), W("x1^-1")));
  EXPECT_FALSE(shortlex_less(W("x1"), W("x1")));
}

// The number of reduced words of length L over 2n letters is 2n(2n-1)^(L-1).
TEST(Words, EnumerationCountsMatchClosedForm) {
  for (std::size_t rank = 1; rank <= 3; ++rank) {
    for (std::size_t len = 0; len <= 6; ++len) {
      std::size_t count = 0;
      std::set<std::string> seen;
      for_each_word_of_length(rank, len, [&](const Word& w) {
        ++count;
        EXPECT_EQ(w.size(), len);
        seen.insert(print_compact(w));
      });
      std::size_t expect = 1;
      if (len) {
        expect = 2 * rank;
        for (std::size_t i = 1; i < len; ++i) expect *= 2 * rank - 1;
      }
      EXPECT_EQ(count, expect) << "rank " << rank << " len " << len;
      EXPECT_EQ(seen.size(), expect);
    }
  }
}

TEST(Words, RandomWordsAreReducedOfRequestedLength) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 1000; ++i) {
    const std::size_t len = static_cast<std::size_t>(i % 30);
    const Word w = random_word(2, len, rng);
    ASSERT_EQ(w.size(), len);
    for (std::size_t j = 1; j < w.size(); ++j) EXPECT_NE(w[j], w[j - 1].inverse());
  }
}

TEST(Words, PowerAndGenerator) {
  EXPECT_EQ(power(W("x1 x2"), 3), W("x1 x2 x1 x2 x1 x2"));
  EXPECT_EQ(power(W("x1 x2"), -1), W("x2^-1 x1^-1"));
  EXPECT_TRUE(power(W("x1 x2"), 0).empty());
  EXPECT_EQ(generator(2, 2, -3), W("x2^-3"));
}

TEST(Text, ParsesBothGrammars) {
  EXPECT_EQ(W("x1^2 x2^-3"), W("aaBBB"));
  EXPECT_TRUE(W("aA").empty());
  EXPECT_TRUE(W("1").empty());
  EXPECT_TRUE(W("   ").empty());
  EXPECT_EQ(W("x1x2"), W("ab"));
  EXPECT_EQ(print_word(W("x1 x1 x2^-1")), "x1^2 x2^-1");
  EXPECT_EQ(print_compact(W("x1^2 x2^-1")), "aaB");
}

TEST(Text, ParseErrorsCarryPositions) {
  try {
    (void)parse_word("x1 x3", 2);
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 3u);
  }
  EXPECT_THROW(parse_word("x1^0", 2), ParseError);
  EXPECT_THROW(parse_word("x1 y2", 2), ParseError);
  EXPECT_THROW(parse_word("abc", 2), ParseError);
  EXPECT_THROW(parse_word("x1^", 2), ParseError);
}

TEST(Text, RoundTrip) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 2000; ++i) {
    const Word w = random_word(3, static_cast<std::size_t>(i % 25), rng);
    EXPECT_EQ(parse_word(print_word(w), 3), w);
    EXPECT_EQ(parse_word(print_compact(w), 3), w);
  }
}

TEST(Text, FreeProductWords) {
  const FPWord g = parse_fp_word(print_fp_word(fp_witness(3)));
  EXPECT_EQ(g, fp_witness(3));
}
