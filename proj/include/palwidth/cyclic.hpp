#ifndef PALWIDTH_CYCLIC_HPP
#define PALWIDTH_CYCLIC_HPP

#include <optional>

#include "palwidth/word.hpp"

namespace palwidth {

struct CyclicReduction {
  Word core;
  Word conjugator;  // w = conjugator * core * conjugator^-1
};

inline CyclicReduction cyclic_reduce(const Word& w) {
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (2 * i + 1 < n && w[i] == w[n - 1 - i].inverse()) ++i;
  return {w.subword(i, n - 2 * i), w.subword(0, i)};
}

inline std::size_t cyclic_length(const Word& w) { return cyclic_reduce(w).core.size(); }

/// Left rotation of a word by `shift` letters. The result is reduced when the
/// input is cyclically reduced.
inline Word rotate(const Word& w, std::size_t shift) {
  if (w.empty()) return w;
  shift %= w.size();
  std::vector<Letter> raw(w.begin() + static_cast<std::ptrdiff_t>(shift), w.end());
  raw.insert(raw.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(shift));
  return Word::reduce(raw, w.rank());
}

/// Some g with g * from * g^-1 = to, or nothing if the two are not conjugate.
inline std::optional<Word> find_conjugator(const Word& from, const Word& to) {
  require_same_rank(from, to);
  const auto cf = cyclic_reduce(from);
  const auto ct = cyclic_reduce(to);
  if (cf.core.size() != ct.core.size()) return std::nullopt;
  const std::size_t n = cf.core.size();
  if (n == 0) return Word(from.rank());
  for (std::size_t i = 0; i < n; ++i) {
    // cf.core = t s with |t| = i; rotating gives s t = s (t s) s^-1.
    if (std::equal(ct.core.begin(), ct.core.begin() + static_cast<std::ptrdiff_t>(n - i),
                   cf.core.begin() + static_cast<std::ptrdiff_t>(i)) &&
        std::equal(ct.core.begin() + static_cast<std::ptrdiff_t>(n - i), ct.core.end(),
                   cf.core.begin())) {
      const Word s = cf.core.subword(i, n - i);
      return multiply({ct.conjugator, s, invert(cf.conjugator)});
    }
  }
  return std::nullopt;
}

/// The unique r with w = r^e for maximal e >= 1. The empty word is its own root.
inline Word primitive_root(const Word& w) {
  const auto cr = cyclic_reduce(w);
  const std::size_t n = cr.core.size();
  for (std::size_t d = 1; d <= n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = cr.core[i] == cr.core[i - d];
    if (periodic) {
      return multiply({cr.conjugator, cr.core.subword(0, d), invert(cr.conjugator)});
    }
  }
  return w;
}

}  // namespace palwidth

#endif  // PALWIDTH_CYCLIC_HPP
