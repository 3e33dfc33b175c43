#ifndef PALWIDTH_QUASIHOM_HPP
#define PALWIDTH_QUASIHOM_HPP

#include <cstdlib>

#include "palwidth/word.hpp"

namespace palwidth {

inline constexpr long sign_of(long v) { return (v > 0) - (v < 0); }

/// The palindrome-recognizing quasi-homomorphism.
///
/// With |e_1|, ..., |e_m| the absolute syllable exponents of w, returns
/// sum_j sign(|e_{j+1}| - |e_j|). Words with at most one syllable map to 0.
inline long delta(const Word& w) {
  long total = 0;
  long prev = 0;
  bool first = true;
  std::size_t prev_gen = 0;
  long run = 0;
  // Single pass over letters, closing a syllable whenever the generator changes.
  auto close = [&](long exponent) {
    if (!first) total += sign_of(exponent - prev);
    prev = exponent;
    first = false;
  };
  for (Letter l : w) {
    if (l.gen() != prev_gen && run != 0) {
      close(run);
      run = 0;
    }
    prev_gen = l.gen();
    ++run;
  }
  if (run != 0) close(run);
  return total;
}

/// delta(uw) - delta(u) - delta(w). Always within [-6, 6].
inline long delta_defect(const Word& u, const Word& w) {
  return delta(multiply(u, w)) - delta(u) - delta(w);
}

/// Least k with delta(w) <= 6k - 6, i.e. a sound lower bound on the number of
/// palindromes whose product is w. The empty word needs none.
inline std::size_t pal_lower_bound_from_delta(const Word& w) {
  if (w.empty()) return 0;
  const long d = delta(w);
  if (d <= 0) return 1;
  return static_cast<std::size_t>((d + 6 + 5) / 6);
}

/// x1 x2 x1^2 x2^2 ... x1^n x2^n, whose delta is n - 1.
inline Word pal_witness(std::size_t n, std::size_t rank = 2) {
  if (n == 0) throw PreconditionError("pal_witness needs n >= 1");
  if (rank < 2) throw RankError("pal_witness needs rank >= 2");
  std::vector<Syllable> syls;
  for (std::size_t i = 1; i <= n; ++i) {
    syls.push_back({1, static_cast<long>(i)});
    syls.push_back({2, static_cast<long>(i)});
  }
  return from_syllables(rank, syls);
}

}  // namespace palwidth

#endif  // PALWIDTH_QUASIHOM_HPP
