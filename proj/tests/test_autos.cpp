#include <gtest/gtest.h>

#include <random>

#include "palwidth/palwidth.hpp"

using namespace palwidth;

namespace {

Word W(const char* text, std::size_t rank = 2) { return parse_word(text, rank); }

}  // namespace

TEST(Autos, Theta) {
  const Automorphism th = theta_aut(3);
  EXPECT_EQ(apply(th, W("x1", 3)), W("x1^-1", 3));
  EXPECT_EQ(compose(th, th).images(), Automorphism::identity(3).images());
  std::mt19937_64 rng(59);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word(3, static_cast<std::size_t>(i % 20), rng);
    EXPECT_EQ(apply(th, w), theta(w));
  }
}

TEST(Autos, NielsenU) {
  const Automorphism u = nielsen_U();
  EXPECT_EQ(apply(u, W("x2")), W("x1 x2"));
  EXPECT_EQ(apply(u, W("x1")), W("x1"));
  std::mt19937_64 rng(61);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(2, static_cast<std::size_t>(i % 20), rng);
    EXPECT_EQ(apply(compose(inverse(u), u), w), w);
    EXPECT_EQ(apply(compose(u, inverse(u)), w), w);
  }
}

TEST(Autos, Tau) {
  EXPECT_EQ(tau(Word(2)).images(), Automorphism::identity(2).images());
  EXPECT_EQ(apply(tau(W("x1")), W("x2")), W("x1 x2 x1^-1"));
  std::mt19937_64 rng(67);
  for (int i = 0; i < 200; ++i) {
    const Word u = random_word(2, static_cast<std::size_t>(i % 6), rng);
    const Word v = random_word(2, static_cast<std::size_t>(i % 7), rng);
    EXPECT_EQ(compose(tau(u), tau(v)).images(), tau(multiply(u, v)).images());
    const Word g = random_word(2, static_cast<std::size_t>(i % 9), rng);
    EXPECT_EQ(apply(tau(u), g), multiply({u, g, invert(u)}));
  }
}

TEST(Autos, CompositionIsAfter) {
  const Automorphism u = nielsen_U();
  const Automorphism th = theta_aut(2);
  std::mt19937_64 rng(71);
  for (int i = 0; i < 200; ++i) {
    const Word w = random_word(2, static_cast<std::size_t>(i % 12), rng);
    EXPECT_EQ(apply(compose(th, u), w), apply(th, apply(u, w)));
    EXPECT_EQ(apply(compose(th, th), w), w);
  }
  EXPECT_THROW(compose(theta_aut(2), theta_aut(3)), RankError);
}

TEST(Autos, RandomInverseAndAudit) {
  std::mt19937_64 rng(73);
  for (int i = 0; i < 200; ++i) {
    const Automorphism phi = random_automorphism(3, 1 + static_cast<std::size_t>(i % 10), rng);
    EXPECT_EQ(phi.replay_images(), phi.images());
    const Automorphism inv = inverse(phi);
    EXPECT_EQ(inv.replay_images(), inv.images());
    const Word w = random_word(3, static_cast<std::size_t>(i % 15), rng);
    EXPECT_EQ(apply(inv, apply(phi, w)), w);
  }
}

// With compose = "after" and tau_w(g) = w g w^-1 the composite comes out as
// conjugation by x1^-1; p_of_sigma absorbs the inversion.
TEST(Autos, ThetaUThetaUInverseIsInner) {
  const Automorphism th = theta_aut(2);
  const Automorphism u = nielsen_U();
  const Automorphism c = compose({th, u, th, inverse(u)});
  const auto p = extract_conjugator(c);
  ASSERT_TRUE(p);
  EXPECT_EQ(*p, W("x1^-1"));
  EXPECT_EQ(p_of_sigma(u), W("x1"));
}

TEST(Autos, ExtractConjugator) {
  std::mt19937_64 rng(79);
  for (int i = 0; i < 500; ++i) {
    const std::size_t rank = 2 + static_cast<std::size_t>(i % 2);
    const Word w = random_word(rank, static_cast<std::size_t>(i % 15), rng);
    const auto got = extract_conjugator(tau(w));
    ASSERT_TRUE(got);
    EXPECT_EQ(*got, w);
  }
  EXPECT_FALSE(extract_conjugator(theta_aut(2)));
  EXPECT_FALSE(extract_conjugator(nielsen_U()));
}

TEST(Autos, PalindromeOfSigma) {
  EXPECT_TRUE(p_of_sigma(Automorphism::identity(2)).empty());
  std::mt19937_64 rng(83);
  for (int i = 0; i < 500; ++i) {
    const Automorphism s = random_automorphism(2, 1 + static_cast<std::size_t>(i % 12), rng);
    const Word p = p_of_sigma(s);
    EXPECT_TRUE(is_palindrome(p));
    // p(sigma U) = sigma(x1) p(sigma).
    EXPECT_EQ(p_of_sigma(compose(s, nielsen_U())), multiply(apply(s, W("x1")), p));
  }
  EXPECT_THROW(p_of_sigma(theta_aut(3)), PreconditionError);
}
