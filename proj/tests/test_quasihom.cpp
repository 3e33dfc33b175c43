#include <gtest/gtest.h>

#include <random>

#include "palwidth/palwidth.hpp"

using namespace palwidth;

namespace {

Word W(const char* text, std::size_t rank = 2) { return parse_word(text, rank); }

// Straight from the syllable list, no shared code with delta().
long delta_by_hand(const Word& w) {
  std::vector<long> e;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0 && w[i].gen() == w[i - 1].gen()) {
      ++e.back();
    } else {
      e.push_back(1);
    }
  }
  long d = 0;
  for (std::size_t j = 1; j < e.size(); ++j) d += (e[j] > e[j - 1]) - (e[j] < e[j - 1]);
  return d;
}

}  // namespace

TEST(Delta, Examples) {
  EXPECT_EQ(delta(W("x1^2 x2^-3 x3^4 x2^-3 x1^2", 3)), 0);
  EXPECT_EQ(delta(pal_witness(4)), 3);
  EXPECT_EQ(pal_witness(4), W("x1 x2 x1^2 x2^2 x1^3 x2^3 x1^4 x2^4"));
  EXPECT_EQ(delta(W("x1 x2 x3", 3)), 0);
  EXPECT_EQ(delta(W("x1^5")), 0);
  EXPECT_EQ(delta(Word(2)), 0);
}

TEST(Delta, WitnessFamily) {
  EXPECT_EQ(pal_witness(1), W("x1 x2"));
  EXPECT_EQ(pal_witness(3), W("x1 x2 x1^2 x2^2 x1^3 x2^3"));
  for (std::size_t n = 1; n <= 60; ++n) EXPECT_EQ(delta(pal_witness(n)), static_cast<long>(n) - 1);
  EXPECT_THROW(pal_witness(0), PreconditionError);
}

TEST(Delta, AgreesWithHandCount) {
  for_each_word(3, 6, [](const Word& w) { ASSERT_EQ(delta(w), delta_by_hand(w)); });
}

TEST(Delta, AntisymmetricUnderInversion) {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 5000; ++i) {
    const Word w = random_word(3, static_cast<std::size_t>(i % 40), rng);
    EXPECT_EQ(delta(w) + delta(invert(w)), 0);
  }
}

TEST(Delta, VanishesOnPalindromes) {
  for_each_palindrome(2, 12, [](const Word& p) { ASSERT_EQ(delta(p), 0) << print_word(p); });
}

TEST(Delta, SignPatternAndRenamingInvariance) {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(3, static_cast<std::size_t>(i % 30), rng);
    auto syls = syllables(w);
    for (auto& s : syls) {
      if (rng() & 1) s.exponent = -s.exponent;
      s.gen = 4 - s.gen;
    }
    EXPECT_EQ(delta(from_syllables(3, syls)), delta(w));
  }
}

TEST(Delta, DefectBounds) {
  EXPECT_EQ(delta_defect(W("x1"), W("x1^-1")), 0);
  long hi = -100, lo = 100;
  for_each_word(2, 5, [&](const Word& u) {
    for_each_word(2, 5, [&](const Word& w) {
      const long d = delta_defect(u, w);
      hi = std::max(hi, d);
      lo = std::min(lo, d);
    });
  });
  EXPECT_LE(hi, 6);
  EXPECT_GE(lo, -6);
  EXPECT_THROW(delta_defect(W("x1", 2), W("x1", 3)), RankError);
}

TEST(Delta, LowerBound) {
  EXPECT_EQ(pal_lower_bound_from_delta(Word(2)), 0u);
  EXPECT_EQ(pal_lower_bound_from_delta(W("x1 x2 x1")), 1u);
  EXPECT_EQ(pal_lower_bound_from_delta(pal_witness(13)), 3u);
  EXPECT_EQ(pal_lower_bound_from_delta(pal_witness(7)), 2u);
  EXPECT_EQ(pal_lower_bound_from_delta(pal_witness(8)), 3u);
  EXPECT_EQ(pal_lower_bound_from_delta(pal_witness(1)), 1u);
}

TEST(FreeProduct, Delta) {
  EXPECT_EQ(fp_delta(fp_witness(3)), 2);
  EXPECT_EQ(fp_delta(FPWord({{Factor::A, 5}})), 0);
  EXPECT_EQ(fp_delta(FPWord()), 0);
  for (std::size_t n = 1; n <= 10; ++n) EXPECT_EQ(fp_delta(fp_witness(n)), static_cast<long>(n) - 1);
}

TEST(FreeProduct, Witness) {
  const FPWord w1({{Factor::A, 1}, {Factor::B, 1}});
  const FPWord w2({{Factor::A, 1}, {Factor::B, 1}, {Factor::A, 2}, {Factor::B, 2}});
  EXPECT_EQ(fp_witness(1), w1);
  EXPECT_EQ(fp_witness(2), w2);
  EXPECT_THROW(fp_witness(0), PreconditionError);
}

TEST(FreeProduct, MultiplyMergesAndCascades) {
  EXPECT_TRUE(fp_multiply(FPWord({{Factor::A, 1}}), FPWord({{Factor::A, -1}})).empty());
  const FPWord g({{Factor::A, 1}, {Factor::B, 2}});
  const FPWord h({{Factor::B, -2}, {Factor::A, 3}});
  EXPECT_EQ(fp_multiply(g, h), FPWord({{Factor::A, 4}}));
  EXPECT_EQ(fp_multiply(FPWord({{Factor::A, 1}}), FPWord({{Factor::B, 1}})),
            FPWord({{Factor::A, 1}, {Factor::B, 1}}));
  EXPECT_THROW(FPWord({{Factor::A, 1}, {Factor::A, 2}}), PreconditionError);
  EXPECT_THROW(FPWord({{Factor::A, 0}}), PreconditionError);
}

// Every symmetric degree sequence of up to 8 syllables has zero delta.
TEST(FreeProduct, SymmetricWordsHaveZeroDelta) {
  for (std::size_t len = 1; len <= 8; ++len) {
    const std::size_t half = (len + 1) / 2;
    std::vector<long> deg(half, 1);
    while (true) {
      std::vector<FPSyllable> syl;
      for (std::size_t i = 0; i < len; ++i) {
        const long d = deg[std::min(i, len - 1 - i)];
        syl.push_back({i % 2 ? Factor::B : Factor::A, d});
      }
      EXPECT_EQ(fp_delta(FPWord(syl)), 0);
      std::size_t j = 0;
      while (j < half && deg[j] == 4) deg[j++] = 1;
      if (j == half) break;
      ++deg[j];
    }
  }
}

TEST(FreeProduct, EmpiricalDefect) {
  std::mt19937_64 rng(23);
  long worst = 0;
  for (int i = 0; i < 20000; ++i) {
    const FPWord g = random_fp_word(static_cast<std::size_t>(i % 12), 5, rng);
    const FPWord h = random_fp_word(static_cast<std::size_t>((i / 12) % 12), 5, rng);
    worst = std::max(worst, std::labs(fp_delta_defect(g, h)));
  }
  EXPECT_LE(worst, 6);
}
