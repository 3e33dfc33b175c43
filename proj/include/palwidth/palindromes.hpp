#ifndef PALWIDTH_PALINDROMES_HPP
#define PALWIDTH_PALINDROMES_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "palwidth/bracket.hpp"
#include "palwidth/cyclic.hpp"
#include "palwidth/quasihom.hpp"
#include "palwidth/word.hpp"

namespace palwidth {

/// True iff w equals its reverse. The empty word is a palindrome.
inline bool is_palindrome(const Word& w) {
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (w[i] != w[n - 1 - i]) return false;
  }
  return true;
}

/// theta(u) * p * u^-1, a palindrome whenever p is one.
inline Word palindromize(const Word& u, const Word& p) {
  require_same_rank(u, p);
  if (!is_palindrome(p)) throw PreconditionError("palindromize: p is not a palindrome");
  return multiply({theta(u), p, invert(u)});
}

/// Image under the retraction killing the generators in `kill`.
inline Word retract(const Word& w, const std::set<std::size_t>& kill) {
  std::vector<Letter> kept;
  kept.reserve(w.size());
  for (Letter l : w) {
    if (!kill.contains(l.gen())) kept.push_back(l);
  }
  return Word::reduce(kept, w.rank());
}

/// Visits every reduced palindrome of length <= max_len once, in shortlex
/// order with x1 < x1^-1 < x2 < ... .
///
/// A palindrome of length L is fixed by its first ceil(L/2) letters, and
/// lexicographic order on palindromes of one length agrees with the order on
/// those halves, so walking reduced halves in order and mirroring them yields
/// the shortlex sequence directly.
template <class F>
void for_each_palindrome(std::size_t rank, std::size_t max_len, F&& f) {
  std::vector<Letter> full;
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::size_t half = (len + 1) / 2;
    for_each_word_of_length(rank, half, [&](const Word& h) {
      full.assign(h.begin(), h.end());
      for (std::size_t i = len / 2; i-- > 0;) full.push_back(h[i]);
      Word p = Word::reduce(full, rank);
      if (p.size() == len) f(p);
    });
  }
}

inline std::vector<Word> enumerate_palindromes(std::size_t rank, std::size_t max_len) {
  std::vector<Word> out;
  for_each_palindrome(rank, max_len, [&](const Word& p) { out.push_back(p); });
  return out;
}

/// Decides whether v is a product of two palindromes and, if so, returns the
/// factorization (p, q) with the shortest longer factor.
///
/// v = p q with p, q palindromes exactly when p^-1 v p = reverse(v) for a
/// palindrome p. The solutions of g reverse(v) g^-1 = v form one coset
/// c <r> with r the root of reverse(v), and p r p^-1 = reverse(r) for any
/// palindromic solution p, so either every element of the coset is a
/// palindrome or none is. Testing a single conjugator therefore decides the
/// question without any length cap.
inline std::optional<std::pair<Word, Word>> two_palindrome_factors(const Word& v) {
  if (v.empty()) return std::pair{v, v};
  const Word rv = reverse(v);
  const auto c = find_conjugator(rv, v);
  if (!c || !is_palindrome(*c)) return std::nullopt;

  const Word r = primitive_root(rv);
  const Word r_inv = invert(r);
  const std::size_t step = std::max<std::size_t>(1, cyclic_length(r));
  const long span = static_cast<long>((c->size() + v.size() + 2 * r.size()) / step + 2);

  auto score = [&](const Word& p) {
    const Word q = multiply(invert(p), v);
    return std::pair{std::max(p.size(), q.size()), p.size() + q.size()};
  };
  Word best = *c;
  auto best_score = score(best);
  Word up = *c;
  Word down = *c;
  for (long j = 1; j <= span; ++j) {
    up = multiply(up, r);
    down = multiply(down, r_inv);
    for (const Word* cand : {&up, &down}) {
      const auto s = score(*cand);
      if (s < best_score) {
        best_score = s;
        best = *cand;
      }
    }
  }
  Word q = multiply(invert(best), v);
  if (!is_palindrome(best) || !is_palindrome(q)) {
    throw InternalError("two_palindrome_factors produced a non-palindromic factor");
  }
  return std::pair{std::move(best), std::move(q)};
}

struct PalSearchOptions {
  /// Maximum DFS nodes across the k >= 3 levels before giving up.
  std::size_t node_budget = 20'000'000;
};

namespace detail {

inline std::size_t common_prefix(const Word& a, const Word& b) {
  std::size_t n = std::min(a.size(), b.size());
  std::size_t i = 0;
  while (i < n && a[i] == b[i]) ++i;
  return i;
}

inline std::size_t delta_bound_both_ways(const Word& w) {
  return std::max(pal_lower_bound_from_delta(w), pal_lower_bound_from_delta(invert(w)));
}

class PalSearch {
 public:
  PalSearch(std::size_t rank, std::size_t cap, std::size_t budget)
      : cap_(cap), budget_(budget), pals_(enumerate_palindromes(rank, cap)) {}

  // Writes factors of a k-palindrome factorization of v into out.
  bool run(const Word& v, std::size_t k, std::vector<Word>& out) {
    if (delta_bound_both_ways(v) > k) return false;
    if (k == 2) {
      auto f = two_palindrome_factors(v);
      if (!f || f->first.size() > cap_ || f->second.size() > cap_) return false;
      out.push_back(f->first);
      out.push_back(f->second);
      return true;
    }
    // Longest common prefix with v first: those factors cancel the most.
    std::vector<std::vector<const Word*>> buckets(cap_ + 1);
    for (const Word& p : pals_) buckets[common_prefix(p, v)].push_back(&p);
    for (std::size_t b = buckets.size(); b-- > 0;) {
      for (const Word* p : buckets[b]) {
        if (++nodes_ > budget_) {
          exhausted_ = true;
          return false;
        }
        out.push_back(*p);
        if (run(multiply(invert(*p), v), k - 1, out)) return true;
        out.pop_back();
        if (exhausted_) return false;
      }
    }
    return false;
  }

  [[nodiscard]] bool exhausted() const { return exhausted_; }

 private:
  std::size_t cap_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
  std::vector<Word> pals_;
};

}  // namespace detail

inline std::size_t default_factor_len_cap(const Word& w) { return 2 * w.size() + 2; }

/// Bracket for the palindromic length of w.
///
/// Lower bounds: 0 / 1 / 2 from emptiness and palindromicity, the delta
/// certificate applied to w and w^-1, and 3 when the exact two-palindrome
/// test fails. Upper bounds come only from verified witnesses found by
/// iterative deepening on the number of factors, each factor a palindrome of
/// length at most `factor_len_cap`.
inline PalBracket pal_length_bounded(const Word& w, std::size_t max_k,
                                     std::size_t factor_len_cap,
                                     const PalSearchOptions& opts = {}) {
  PalBracket b;
  b.factor_len_cap = factor_len_cap;
  if (w.empty()) {
    b.lower = 0;
    b.upper = 0;
    b.lower_provenance = b.upper_provenance = Provenance::trivial;
    return b;
  }
  b.raise_lower(1, Provenance::trivial);
  if (is_palindrome(w)) {
    b.upper = 1;
    b.witness = {w};
    b.upper_provenance = Provenance::witness;
    return b;
  }
  b.raise_lower(2, Provenance::trivial);
  b.raise_lower(detail::delta_bound_both_ways(w), Provenance::delta_certificate);

  if (max_k >= 2 && b.lower <= 2) {
    if (auto f = two_palindrome_factors(w)) {
      if (f->first.size() <= factor_len_cap && f->second.size() <= factor_len_cap) {
        b.upper = 2;
        b.witness = {f->first, f->second};
        b.upper_provenance = Provenance::witness;
        return b;
      }
    } else {
      b.raise_lower(3, Provenance::exhausted_search);
    }
  }

  if (max_k >= 3 && b.lower <= max_k) {
    detail::PalSearch search(w.rank(), factor_len_cap, opts.node_budget);
    for (std::size_t k = std::max<std::size_t>(3, b.lower); k <= max_k; ++k) {
      std::vector<Word> factors;
      if (search.run(w, k, factors)) {
        b.upper = k;
        b.witness = std::move(factors);
        b.upper_provenance = Provenance::witness;
        break;
      }
      if (search.exhausted()) {
        b.budget_exhausted = true;
        break;
      }
    }
  }
  if (b.upper) {
    Word prod(w.rank());
    for (const Word& p : b.witness) {
      if (!is_palindrome(p)) throw InternalError("witness factor is not a palindrome");
      prod = multiply(prod, p);
    }
    if (!(prod == w) || b.witness.size() != *b.upper) {
      throw InternalError("palindromic witness does not multiply back");
    }
  }
  return b;
}

inline PalBracket pal_length_bounded(const Word& w, std::size_t max_k) {
  return pal_length_bounded(w, max_k, default_factor_len_cap(w));
}

}  // namespace palwidth

#endif  // PALWIDTH_PALINDROMES_HPP
