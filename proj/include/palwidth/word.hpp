#ifndef PALWIDTH_WORD_HPP
#define PALWIDTH_WORD_HPP

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <initializer_list>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "palwidth/errors.hpp"

namespace palwidth {

/// A generator x_g or its inverse. Stored as the signed integer +g / -g.
///
/// Letters are totally ordered by `index()`, which puts x1 < x1^-1 < x2 <
/// x2^-1 < ... . The same index numbers the vertices of a Whitehead graph.
class Letter {
 public:
  constexpr Letter(std::size_t gen, int sign)
      : value_(sign < 0 ? -static_cast<std::int32_t>(gen)
                        : static_cast<std::int32_t>(gen)) {}

  static constexpr Letter from_index(std::size_t index) {
    return Letter(index / 2 + 1, (index % 2) ? -1 : 1);
  }

  [[nodiscard]] constexpr std::size_t gen() const {
    return static_cast<std::size_t>(value_ < 0 ? -value_ : value_);
  }
  [[nodiscard]] constexpr int sign() const { return value_ < 0 ? -1 : 1; }
  [[nodiscard]] constexpr Letter inverse() const { return Letter(-value_); }
  [[nodiscard]] constexpr std::size_t index() const {
    return 2 * (gen() - 1) + (value_ < 0 ? 1 : 0);
  }
  [[nodiscard]] constexpr std::int32_t value() const { return value_; }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& other) const {
    return index() <=> other.index();
  }

 private:
  constexpr explicit Letter(std::int32_t v) : value_(v) {}
  std::int32_t value_;
};

/// Maximal power block g^exponent of a reduced word.
struct Syllable {
  std::size_t gen;
  long exponent;

  bool operator==(const Syllable&) const = default;
};

/// A freely reduced word over the free basis x_1..x_rank.
///
/// Every constructor either reduces or is private and fed already-reduced
/// letters, so a `Word` is always freely reduced and all its generators lie
/// within the rank. The empty word is the identity.
class Word {
 public:
  explicit Word(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw RankError("rank must be at least 1");
  }

  /// Freely reduces `raw`. Throws RankError for letters outside the rank.
  static Word reduce(std::span<const Letter> raw, std::size_t rank) {
    Word out(rank);
    out.letters_.reserve(raw.size());
    for (Letter l : raw) {
      if (l.gen() == 0 || l.gen() > rank) {
        throw RankError("letter x" + std::to_string(l.gen()) +
                        " outside rank " + std::to_string(rank));
      }
      out.push_reducing(l);
    }
    return out;
  }
  static Word reduce(std::initializer_list<Letter> raw, std::size_t rank) {
    return reduce(std::span<const Letter>(raw.begin(), raw.size()), rank);
  }

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] std::size_t size() const { return letters_.size(); }
  [[nodiscard]] bool empty() const { return letters_.empty(); }
  [[nodiscard]] std::span<const Letter> letters() const { return letters_; }
  [[nodiscard]] Letter operator[](std::size_t i) const { return letters_[i]; }
  [[nodiscard]] Letter front() const { return letters_.front(); }
  [[nodiscard]] Letter back() const { return letters_.back(); }
  [[nodiscard]] auto begin() const { return letters_.begin(); }
  [[nodiscard]] auto end() const { return letters_.end(); }

  /// Same letters viewed in a larger rank.
  [[nodiscard]] Word with_rank(std::size_t rank) const {
    if (rank < rank_) {
      for (Letter l : letters_) {
        if (l.gen() > rank) {
          throw RankError("word uses x" + std::to_string(l.gen()) +
                          ", cannot narrow to rank " + std::to_string(rank));
        }
      }
    }
    Word out(rank);
    out.letters_ = letters_;
    return out;
  }

  /// Subword letters[pos, pos+count). Subwords of reduced words are reduced.
  [[nodiscard]] Word subword(std::size_t pos, std::size_t count) const {
    Word out(rank_);
    out.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                        letters_.begin() +
                            static_cast<std::ptrdiff_t>(pos + count));
    return out;
  }

  bool operator==(const Word& other) const {
    return rank_ == other.rank_ && letters_ == other.letters_;
  }

  // Words multiply and invert through free functions; these friends need to
  // append without re-validating the rank.
  friend Word multiply(const Word& u, const Word& w);
  friend Word invert(const Word& w);
  friend Word reverse(const Word& w);
  friend Word theta(const Word& w);

 private:
  void push_reducing(Letter l) {
    if (!letters_.empty() && letters_.back() == l.inverse()) {
      letters_.pop_back();
    } else {
      letters_.push_back(l);
    }
  }

  std::size_t rank_;
  std::vector<Letter> letters_;
};

/// Shortlex order: shorter first, then lexicographic by letter index.
inline bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

inline void require_same_rank(const Word& u, const Word& w) {
  if (u.rank() != w.rank()) {
    throw RankError("rank mismatch: " + std::to_string(u.rank()) + " vs " +
                    std::to_string(w.rank()));
  }
}

inline Word multiply(const Word& u, const Word& w) {
  require_same_rank(u, w);
  Word out = u;
  out.letters_.reserve(u.size() + w.size());
  for (Letter l : w.letters_) out.push_reducing(l);
  return out;
}

inline Word invert(const Word& w) {
  Word out(w.rank());
  out.letters_.reserve(w.size());
  for (auto it = w.letters_.rbegin(); it != w.letters_.rend(); ++it) {
    out.letters_.push_back(it->inverse());
  }
  return out;
}

/// Letter order reversed, signs kept. Reversal of a reduced word is reduced.
inline Word reverse(const Word& w) {
  Word out(w.rank());
  out.letters_.assign(w.letters_.rbegin(), w.letters_.rend());
  return out;
}

/// The involution inverting every generator: each letter's sign flips in place.
inline Word theta(const Word& w) {
  Word out(w.rank());
  out.letters_.reserve(w.size());
  for (Letter l : w.letters_) out.letters_.push_back(l.inverse());
  return out;
}

inline Word multiply(std::initializer_list<Word> factors) {
  if (factors.size() == 0) throw PreconditionError("empty product");
  Word out = *factors.begin();
  for (auto it = factors.begin() + 1; it != factors.end(); ++it) {
    out = multiply(out, *it);
  }
  return out;
}

inline Word power(const Word& w, long exponent) {
  Word base = exponent < 0 ? invert(w) : w;
  Word out(w.rank());
  for (long i = 0; i < std::labs(exponent); ++i) out = multiply(out, base);
  return out;
}

inline Word letter_word(std::size_t rank, Letter l) { return Word::reduce({l}, rank); }

inline Word generator(std::size_t rank, std::size_t gen, long exponent = 1) {
  std::vector<Letter> raw(static_cast<std::size_t>(std::labs(exponent)),
                          Letter(gen, exponent < 0 ? -1 : 1));
  return Word::reduce(raw, rank);
}

inline std::vector<Syllable> syllables(const Word& w) {
  std::vector<Syllable> out;
  for (Letter l : w) {
    if (!out.empty() && out.back().gen == l.gen()) {
      out.back().exponent += l.sign();
    } else {
      out.push_back({l.gen(), l.sign()});
    }
  }
  return out;
}

/// Syllabic length SL(w).
inline std::size_t syllable_length(const Word& w) { return syllables(w).size(); }

/// Product of the given syllables, reduced.
inline Word from_syllables(std::size_t rank, std::span<const Syllable> syls) {
  std::vector<Letter> raw;
  for (const Syllable& s : syls) {
    if (s.exponent == 0) throw PreconditionError("zero syllable exponent");
    raw.insert(raw.end(), static_cast<std::size_t>(std::labs(s.exponent)),
               Letter(s.gen, s.exponent < 0 ? -1 : 1));
  }
  return Word::reduce(raw, rank);
}

/// Product of `count` consecutive syllables of w starting at syllable `start`.
/// With `cyclic` the window wraps from the last syllable to the first.
inline Word syllable_window(const Word& w, std::size_t start, std::size_t count,
                            bool cyclic) {
  const auto syls = syllables(w);
  const std::size_t sl = syls.size();
  const bool ok = cyclic ? (count <= sl && (start < sl || (sl == 0 && start == 0)))
                         : (start + count <= sl);
  if (!ok) {
    throw PreconditionError("syllable window [" + std::to_string(start) + ", +" +
                            std::to_string(count) + ") out of range for SL " +
                            std::to_string(sl));
  }
  std::vector<Syllable> picked;
  picked.reserve(count);
  for (std::size_t i = 0; i < count; ++i) picked.push_back(syls[(start + i) % sl]);
  return from_syllables(w.rank(), picked);
}

/// Uniform reduced word of exactly `length` letters.
template <class Rng>
Word random_word(std::size_t rank, std::size_t length, Rng& rng) {
  std::vector<Letter> raw;
  raw.reserve(length);
  const std::size_t letters = 2 * rank;
  for (std::size_t i = 0; i < length; ++i) {
    if (raw.empty()) {
      std::uniform_int_distribution<std::size_t> pick(0, letters - 1);
      raw.push_back(Letter::from_index(pick(rng)));
    } else {
      // Skip the inverse of the previous letter.
      std::uniform_int_distribution<std::size_t> pick(0, letters - 2);
      std::size_t idx = pick(rng);
      if (idx >= raw.back().inverse().index()) ++idx;
      raw.push_back(Letter::from_index(idx));
    }
  }
  return Word::reduce(raw, rank);
}

/// Visits every reduced word of exactly `length` letters in shortlex order.
template <class F>
void for_each_word_of_length(std::size_t rank, std::size_t length, F&& f) {
  std::vector<Letter> buf;
  buf.reserve(length);
  auto rec = [&](auto& self) -> void {
    if (buf.size() == length) {
      f(Word::reduce(buf, rank));
      return;
    }
    for (std::size_t i = 0; i < 2 * rank; ++i) {
      Letter l = Letter::from_index(i);
      if (!buf.empty() && buf.back() == l.inverse()) continue;
      buf.push_back(l);
      self(self);
      buf.pop_back();
    }
  };
  rec(rec);
}

template <class F>
void for_each_word(std::size_t rank, std::size_t max_length, F&& f) {
  for (std::size_t len = 0; len <= max_length; ++len) {
    for_each_word_of_length(rank, len, f);
  }
}

}  // namespace palwidth

template <>
struct std::hash<palwidth::Word> {
  std::size_t operator()(const palwidth::Word& w) const noexcept {
    std::size_t h = std::hash<std::size_t>{}(w.rank());
    for (palwidth::Letter l : w) {
      h ^= std::hash<std::int32_t>{}(l.value()) + 0x9e3779b97f4a7c15ULL +
           (h << 6) + (h >> 2);
    }
    return h;
  }
};

#endif  // PALWIDTH_WORD_HPP
