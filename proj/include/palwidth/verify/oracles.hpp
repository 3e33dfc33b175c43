#ifndef PALWIDTH_VERIFY_ORACLES_HPP
#define PALWIDTH_VERIFY_ORACLES_HPP

#include <cstdint>
#include <numeric>
#include <optional>
#include <vector>

#include "palwidth/errors.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/primitivity.hpp"
#include "palwidth/word.hpp"

// Independent reference computations used by the test suites. They share
// only Word arithmetic with the code they check.

namespace palwidth::oracle {

/// Dense numbering of the reduced rank-2 words of length <= max_len: the
/// empty word is 0, then words by length, each length block in base-3 order
/// of "which of the three allowed letters comes next".
class Rank2Index {
 public:
  explicit Rank2Index(std::size_t max_len) : max_len_(max_len) {
    offsets_.push_back(0);
    std::size_t block = 1;
    for (std::size_t len = 0; len <= max_len; ++len) {
      offsets_.push_back(offsets_.back() + block);
      block = len == 0 ? 4 : block * 3;
    }
  }

  [[nodiscard]] std::size_t size() const { return offsets_.back(); }
  [[nodiscard]] std::size_t max_len() const { return max_len_; }

  [[nodiscard]] std::optional<std::size_t> index(const Word& w) const {
    if (w.rank() != 2) throw RankError("Rank2Index works in rank 2");
    if (w.size() > max_len_) return std::nullopt;
    if (w.empty()) return 0;
    std::size_t code = w[0].index();
    for (std::size_t i = 1; i < w.size(); ++i) code = code * 3 + step(w[i - 1], w[i]);
    return offsets_[w.size()] + code;
  }

  [[nodiscard]] Word word(std::size_t idx) const {
    std::size_t len = 0;
    while (offsets_[len + 1] <= idx) ++len;
    std::size_t code = idx - offsets_[len];
    std::vector<std::size_t> digits(len);
    for (std::size_t i = len; i-- > 1;) {
      digits[i] = code % 3;
      code /= 3;
    }
    std::vector<Letter> raw;
    if (len) {
      raw.push_back(Letter::from_index(code));
      for (std::size_t i = 1; i < len; ++i) raw.push_back(unstep(raw.back(), digits[i]));
    }
    return Word::reduce(raw, 2);
  }

 private:
  // The three letters that may follow `prev`, in index order, numbered 0..2.
  static std::size_t step(Letter prev, Letter next) {
    std::size_t d = 0;
    for (std::size_t i = 0; i < 4; ++i) {
      const Letter c = Letter::from_index(i);
      if (c == prev.inverse()) continue;
      if (c == next) return d;
      ++d;
    }
    throw InternalError("Rank2Index: unreduced word");
  }
  static Letter unstep(Letter prev, std::size_t digit) {
    for (std::size_t i = 0; i < 4; ++i) {
      const Letter c = Letter::from_index(i);
      if (c == prev.inverse()) continue;
      if (digit-- == 0) return c;
    }
    throw InternalError("Rank2Index: bad digit");
  }

  std::size_t max_len_;
  std::vector<std::size_t> offsets_;
};

inline constexpr std::uint8_t kUnreached = 0xff;

/// Breadth-first closure of palindrome products in rank 2.
///
/// Level j holds the words reachable from the identity by j right
/// multiplications by palindromes of length <= pal_len, staying within
/// length <= word_len throughout. Entry i is the level of word(i), or
/// kUnreached. This is an upper bound for the palindromic length, and equal
/// to it whenever some optimal factorization fits the two caps.
inline std::vector<std::uint8_t> palindrome_closure(const Rank2Index& ix, std::size_t pal_len,
                                                    std::size_t max_levels) {
  std::vector<std::uint8_t> level(ix.size(), kUnreached);
  std::vector<Word> pals;
  for_each_word(2, pal_len, [&](const Word& w) {
    if (!w.empty() && w == reverse(w)) pals.push_back(w);
  });
  std::vector<std::size_t> frontier{0};
  level[0] = 0;
  for (std::size_t j = 1; j <= max_levels && !frontier.empty(); ++j) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      const Word cur = ix.word(i);
      for (const Word& p : pals) {
        const auto t = ix.index(multiply(cur, p));
        if (t && level[*t] == kUnreached) {
          level[*t] = static_cast<std::uint8_t>(j);
          next.push_back(*t);
        }
      }
    }
    frontier = std::move(next);
  }
  return level;
}

/// Exponent-sum vector.
inline std::vector<long> abelianize(const Word& w) {
  std::vector<long> v(w.rank(), 0);
  for (Letter l : w) v[l.gen() - 1] += l.sign();
  return v;
}

/// Primitive elements have unimodular abelianization: gcd of the exponent
/// sums is 1. Necessary, not sufficient.
inline bool abelian_unimodular(const Word& w) {
  long g = 0;
  for (long e : abelianize(w)) g = std::gcd(g, e);
  return g == 1;
}

/// All words of length <= max_len passing the Whitehead-algorithm test, in
/// shortlex order.
inline std::vector<Word> primitives_by_filter(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out;
  for_each_word(rank, max_len, [&](const Word& w) {
    if (is_primitive(w)) out.push_back(w);
  });
  return out;
}

}  // namespace palwidth::oracle

#endif  // PALWIDTH_VERIFY_ORACLES_HPP
