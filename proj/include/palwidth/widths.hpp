#ifndef PALWIDTH_WIDTHS_HPP
#define PALWIDTH_WIDTHS_HPP

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "palwidth/automorphism.hpp"
#include "palwidth/bracket.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/primitivity.hpp"
#include "palwidth/whitehead_graph.hpp"

namespace palwidth {

/// u(n) = (x1^2 x2^2 ... xn^2)^2 in rank `rank` (defaults to n).
inline Word u_word(std::size_t n, std::size_t rank = 0) {
  if (n < 2) throw PreconditionError("u_word needs n >= 2");
  if (rank == 0) rank = n;
  if (rank < n) throw RankError("u_word: rank below n");
  std::vector<Syllable> syls;
  for (int rep = 0; rep < 2; ++rep) {
    for (std::size_t g = 1; g <= n; ++g) syls.push_back({g, 2});
  }
  return from_syllables(rank, syls);
}

struct UPower {
  std::size_t n;
  std::size_t k;  // w = u(n)^(2k)
};

/// Exact syllable-pattern match of w against u(n)^(2k): every exponent is +2
/// and the generators cycle x1, ..., xn a multiple of 4 times.
inline std::optional<UPower> match_u_power(const Word& w) {
  const auto syls = syllables(w);
  std::size_t n = 0;
  for (const auto& s : syls) n = std::max(n, s.gen);
  if (n < 2 || syls.size() % (4 * n) != 0 || syls.empty()) return std::nullopt;
  for (std::size_t i = 0; i < syls.size(); ++i) {
    if (syls[i].exponent != 2 || syls[i].gen != i % n + 1) return std::nullopt;
  }
  return UPower{n, syls.size() / (4 * n)};
}

/// Checked evidence that u(n)^(2k) is not a product of k or fewer primitive
/// elements.
struct HamPowerCert {
  std::size_t n = 0;
  std::size_t k = 0;
  std::size_t sl_u = 0;      // measured SL(u)
  std::size_t sl_power = 0;  // measured SL(u^(2k))
  std::vector<Word> windows;
  std::vector<std::vector<std::size_t>> window_cycles;
  std::vector<std::string> transcript;

  [[nodiscard]] std::size_t lower_bound() const { return k + 1; }
};

/// Verifies the premises of the u^(2k) argument and records them.
///
/// (a) each of the SL(u) cyclic windows of SL(u) consecutive syllables of u has
///     a Hamiltonian Whitehead graph;
/// (b) u ends and begins with different generators, so SL(u^(2k)) = 2k SL(u);
/// (c) ceil(SL(u^(2k)) / k) >= SL(u) + 2, so some factor of any k-term
///     primitive factorization keeps a full window as a proper subword.
inline HamPowerCert ham_power_cert(std::size_t n, std::size_t k) {
  if (n < 2) throw CertificateRefused("premise n >= 2 failed");
  if (k < 1) throw CertificateRefused("premise k >= 1 failed");
  HamPowerCert c;
  c.n = n;
  c.k = k;
  const Word u = u_word(n);
  const auto syls = syllables(u);
  c.sl_u = syls.size();

  for (std::size_t start = 0; start < c.sl_u; ++start) {
    Word z = syllable_window(u, start, c.sl_u, true);
    if (syllable_length(z) != c.sl_u) {
      throw CertificateRefused("premise (a): window " + std::to_string(start) +
                               " merges syllables");
    }
    auto cycle = is_hamiltonian(whitehead_graph(z), std::max(n, kHamiltonianRankCap));
    if (!cycle) {
      throw CertificateRefused("premise (a): window " + std::to_string(start) +
                               " is not Hamiltonian");
    }
    c.windows.push_back(std::move(z));
    c.window_cycles.push_back(std::move(*cycle));
  }
  c.transcript.push_back("(a) " + std::to_string(c.sl_u) + " cyclic windows of " +
                         std::to_string(c.sl_u) + " syllables, all Hamiltonian");

  if (syls.front().gen == syls.back().gen) {
    throw CertificateRefused("premise (b): u begins and ends with the same generator");
  }
  const Word p = power(u, static_cast<long>(2 * k));
  c.sl_power = syllable_length(p);
  if (c.sl_power != 2 * k * c.sl_u) {
    throw CertificateRefused("premise (b): SL(u^2k) = " + std::to_string(c.sl_power) +
                             " != 2k SL(u)");
  }
  c.transcript.push_back("(b) SL(u^" + std::to_string(2 * k) + ") = " +
                         std::to_string(c.sl_power) + " = 2k SL(u)");

  const std::size_t per_factor = (c.sl_power + k - 1) / k;
  if (per_factor < c.sl_u + 2) {
    throw CertificateRefused("premise (c): ceil(SL/k) = " + std::to_string(per_factor) +
                             " < SL(u) + 2");
  }
  c.transcript.push_back("(c) ceil(" + std::to_string(c.sl_power) + "/" + std::to_string(k) +
                         ") = " + std::to_string(per_factor) +
                         " >= " + std::to_string(c.sl_u + 2));
  return c;
}

/// Re-checks a certificate against freshly computed data.
inline bool check_ham_power_cert(const HamPowerCert& c) {
  if (c.n < 2 || c.k < 1) return false;
  const Word u = u_word(c.n);
  if (syllable_length(u) != c.sl_u || c.windows.size() != c.sl_u ||
      c.window_cycles.size() != c.sl_u) {
    return false;
  }
  for (std::size_t i = 0; i < c.sl_u; ++i) {
    if (!(syllable_window(u, i, c.sl_u, true) == c.windows[i])) return false;
    if (!is_hamiltonian_cycle(whitehead_graph(c.windows[i]), c.window_cycles[i])) return false;
  }
  if (syllable_length(power(u, static_cast<long>(2 * c.k))) != c.sl_power) return false;
  return c.sl_power == 2 * c.k * c.sl_u && (c.sl_power + c.k - 1) / c.k >= c.sl_u + 2;
}

/// Two palindromes (p1, p2) with p1 p2 = a, for primitive a in F_2.
///
/// With sigma(x1) = a and p(.) as in p_of_sigma, a = p(sigma U) p(sigma)^-1.
inline std::pair<Word, Word> prim_decompose_two_pals(const Word& a) {
  if (a.rank() != 2) throw PreconditionError("prim_decompose_two_pals works in F_2");
  if (!is_primitive(a)) throw PreconditionError("prim_decompose_two_pals: not primitive");
  const Automorphism sigma = carrier_automorphism(a);
  Word p1 = p_of_sigma(compose(sigma, nielsen_U()));
  Word p2 = invert(p_of_sigma(sigma));
  if (!is_palindrome(p1) || !is_palindrome(p2) || !(multiply(p1, p2) == a)) {
    throw InternalError("two-palindrome decomposition failed to verify");
  }
  return {std::move(p1), std::move(p2)};
}

/// (x^-1, x w) for a generator x absent from w. The rank grows to fit x.
inline std::pair<Word, Word> fresh_gen_decompose(const Word& w, std::size_t fresh) {
  if (fresh == 0) throw RankError("generator index starts at 1");
  for (Letter l : w) {
    if (l.gen() == fresh) {
      throw PreconditionError("fresh generator x" + std::to_string(fresh) + " occurs in w");
    }
  }
  const std::size_t rank = std::max(w.rank(), fresh);
  const Word x = generator(rank, fresh);
  return {invert(x), multiply(x, w.with_rank(rank))};
}

struct PrimEnumBudget {
  std::size_t max_rank = 3;
  std::size_t max_len = 10;
};

/// All primitive elements of length <= max_len, in shortlex order.
///
/// Breadth-first search from x1 under every Whitehead automorphism, dropping
/// images longer than max_len. By peak reduction, each primitive of length
/// at most L is joined to x1 by Whitehead moves whose lengths never increase
/// on the way down, so the reversed path stays under the cap.
inline std::vector<Word> enumerate_primitives(std::size_t rank, std::size_t max_len,
                                              const PrimEnumBudget& budget = {}) {
  if (rank > budget.max_rank || max_len > budget.max_len) {
    throw BudgetError("enumerate_primitives limited to rank <= " +
                      std::to_string(budget.max_rank) + ", length <= " +
                      std::to_string(budget.max_len));
  }
  if (max_len == 0) return {};
  const auto autos = enumerate_whitehead_autos(rank);
  std::unordered_set<Word> seen{generator(rank, 1)};
  std::deque<Word> queue{generator(rank, 1)};
  while (!queue.empty()) {
    const Word w = std::move(queue.front());
    queue.pop_front();
    for (const auto& a : autos) {
      Word img = apply_whitehead(a, w);
      if (img.size() <= max_len && seen.insert(img).second) queue.push_back(std::move(img));
    }
  }
  std::vector<Word> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), shortlex_less);
  return out;
}

struct PrimSearchOptions {
  /// Candidate factors come from enumerate_primitives, which caps the length
  /// per rank; entry r-1 is the cap for rank r (last entry for higher ranks).
  std::vector<std::size_t> enum_len_cap{10, 10, 7, 5};
  std::size_t node_budget = 2'000'000;
};

namespace detail {

inline const std::vector<Word>& cached_primitives(std::size_t rank, std::size_t len) {
  static std::mutex mu;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<std::vector<Word>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[{rank, len}];
  if (!slot) {
    slot = std::make_unique<std::vector<Word>>(
        enumerate_primitives(rank, len, PrimEnumBudget{rank, len}));
  }
  return *slot;
}

class PrimSearch {
 public:
  PrimSearch(const std::vector<Word>& prims, std::size_t cap, std::size_t budget)
      : prims_(prims), cap_(cap), budget_(budget) {}

  bool run(const Word& v, std::size_t k, std::vector<Word>& out) {
    if (k == 1) {
      if (v.size() <= cap_ && is_primitive(v)) {
        out.push_back(v);
        return true;
      }
      return false;
    }
    std::vector<std::vector<const Word*>> buckets(cap_ + 1);
    for (const Word& p : prims_) buckets[common_prefix(p, v)].push_back(&p);
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
  const std::vector<Word>& prims_;
  std::size_t cap_;
  std::size_t budget_;
  std::size_t nodes_ = 0;
  bool exhausted_ = false;
};

}  // namespace detail

/// Bracket for the primitive length of w.
///
/// Lower bounds: 1 for nonempty words, 2 when the Whitehead algorithm rejects
/// w, and k + 1 when w is literally u(n)^(2k) and the certificate verifies.
/// Upper bounds come from verified witnesses over primitive factors of length
/// at most min(factor_len_cap, the enumeration cap for the rank); the cap
/// actually used is reported in the bracket.
inline PrimBracket prim_length_bounded(const Word& w, std::size_t max_k,
                                       std::size_t factor_len_cap,
                                       const PrimSearchOptions& opts = {}) {
  PrimBracket b;
  const auto& caps = opts.enum_len_cap;
  const std::size_t enum_cap = caps.at(std::min(w.rank(), caps.size()) - 1);
  b.factor_len_cap = std::min(factor_len_cap, enum_cap);
  if (w.empty()) {
    b.upper = 0;
    b.lower_provenance = b.upper_provenance = Provenance::trivial;
    return b;
  }
  b.raise_lower(1, Provenance::trivial);
  if (is_primitive(w)) {
    b.upper = 1;
    b.witness = {w};
    b.upper_provenance = Provenance::witness;
    return b;
  }
  b.raise_lower(2, Provenance::whitehead_certificate);
  if (auto m = match_u_power(w)) {
    const HamPowerCert cert = ham_power_cert(m->n, m->k);
    b.raise_lower(cert.lower_bound(), Provenance::ham_power_certificate);
  }

  if (max_k >= 2 && b.lower <= max_k) {
    const auto& prims = detail::cached_primitives(w.rank(), b.factor_len_cap);
    detail::PrimSearch search(prims, b.factor_len_cap, opts.node_budget);
    for (std::size_t k = b.lower; k <= max_k; ++k) {
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
      if (!is_primitive(p)) throw InternalError("witness factor is not primitive");
      prod = multiply(prod, p);
    }
    if (!(prod == w)) throw InternalError("primitive witness does not multiply back");
  }
  return b;
}

inline PrimBracket prim_length_bounded(const Word& w, std::size_t max_k) {
  return prim_length_bounded(w, max_k, default_factor_len_cap(w));
}

}  // namespace palwidth

#endif  // PALWIDTH_WIDTHS_HPP
