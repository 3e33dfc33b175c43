#ifndef PALWIDTH_FREE_PRODUCT_HPP
#define PALWIDTH_FREE_PRODUCT_HPP

#include <cstdlib>
#include <functional>
#include <random>
#include <vector>

#include "palwidth/errors.hpp"
#include "palwidth/quasihom.hpp"

namespace palwidth {

// Free product A * B of two infinite cyclic groups. A syllable is a nonzero
// power of the generator of one factor.

enum class Factor { A, B };

struct FPSyllable {
  Factor factor;
  long element;

  bool operator==(const FPSyllable&) const = default;
};

/// Degree map d : A u B -> N. Must return at least 1 on nonzero elements.
using DegreeTable = std::function<long(Factor, long)>;

inline long default_degree(Factor, long element) { return std::labs(element); }

/// Reduced word in A * B: consecutive syllables alternate factors.
class FPWord {
 public:
  FPWord() = default;

  /// Validates alternation and nonzero elements.
  explicit FPWord(std::vector<FPSyllable> syllables)
      : syllables_(std::move(syllables)) {
    for (std::size_t i = 0; i < syllables_.size(); ++i) {
      if (syllables_[i].element == 0) {
        throw PreconditionError("free-product syllable with zero element");
      }
      if (i > 0 && syllables_[i].factor == syllables_[i - 1].factor) {
        throw PreconditionError("free-product syllables must alternate factors");
      }
    }
  }

  [[nodiscard]] const std::vector<FPSyllable>& syllables() const { return syllables_; }
  [[nodiscard]] std::size_t size() const { return syllables_.size(); }
  [[nodiscard]] bool empty() const { return syllables_.empty(); }

  bool operator==(const FPWord&) const = default;

 private:
  std::vector<FPSyllable> syllables_;
};

inline long fp_delta(const FPWord& g, const DegreeTable& degree = default_degree) {
  long total = 0;
  const auto& s = g.syllables();
  long prev = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const long d = degree(s[i].factor, s[i].element);
    if (d < 1) throw PreconditionError("degree table must be positive");
    if (i > 0) total += sign_of(d - prev);
    prev = d;
  }
  return total;
}

/// a_1 b_1 ... a_n b_n with d(a_i) = d(b_i) = i.
inline FPWord fp_witness(std::size_t n) {
  if (n == 0) throw PreconditionError("fp_witness needs n >= 1");
  std::vector<FPSyllable> s;
  for (std::size_t i = 1; i <= n; ++i) {
    s.push_back({Factor::A, static_cast<long>(i)});
    s.push_back({Factor::B, static_cast<long>(i)});
  }
  return FPWord(std::move(s));
}

/// Concatenation with boundary syllables of the same factor merged; merges
/// cascade while a merge produces the identity.
inline FPWord fp_multiply(const FPWord& g, const FPWord& h) {
  std::vector<FPSyllable> out = g.syllables();
  for (const FPSyllable& s : h.syllables()) {
    if (!out.empty() && out.back().factor == s.factor) {
      out.back().element += s.element;
      if (out.back().element == 0) out.pop_back();
    } else {
      out.push_back(s);
    }
  }
  return FPWord(std::move(out));
}

inline FPWord fp_invert(const FPWord& g) {
  std::vector<FPSyllable> out(g.syllables().rbegin(), g.syllables().rend());
  for (auto& s : out) s.element = -s.element;
  return FPWord(std::move(out));
}

inline long fp_delta_defect(const FPWord& g, const FPWord& h,
                            const DegreeTable& degree = default_degree) {
  return fp_delta(fp_multiply(g, h), degree) - fp_delta(g, degree) -
         fp_delta(h, degree);
}

/// Random reduced FPWord with `syllable_count` syllables, |element| <= max_element.
template <class Rng>
FPWord random_fp_word(std::size_t syllable_count, long max_element, Rng& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::uniform_int_distribution<long> mag(1, max_element);
  std::vector<FPSyllable> s;
  Factor f = coin(rng) ? Factor::A : Factor::B;
  for (std::size_t i = 0; i < syllable_count; ++i) {
    const long m = mag(rng);
    s.push_back({f, coin(rng) ? m : -m});
    f = f == Factor::A ? Factor::B : Factor::A;
  }
  return FPWord(std::move(s));
}

}  // namespace palwidth

#endif  // PALWIDTH_FREE_PRODUCT_HPP
