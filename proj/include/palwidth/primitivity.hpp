#ifndef PALWIDTH_PRIMITIVITY_HPP
#define PALWIDTH_PRIMITIVITY_HPP

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "palwidth/automorphism.hpp"
#include "palwidth/cyclic.hpp"
#include "palwidth/whitehead_aut.hpp"

namespace palwidth {

namespace detail {

// Non-identity type-II automorphisms per rank. Type-I automorphisms preserve
// length, so only these can shorten a cyclic word.
inline const std::vector<MultiplierAut>& shortening_candidates(std::size_t rank) {
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<std::vector<MultiplierAut>>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[rank];
  if (!slot) {
    slot = std::make_unique<std::vector<MultiplierAut>>();
    for (auto& m : enumerate_multiplier_autos(rank)) {
      if (!is_identity(m)) slot->push_back(std::move(m));
    }
  }
  return *slot;
}

}  // namespace detail

struct Minimization {
  Word minword;                     // cyclically reduced
  std::vector<WhiteheadAut> trace;  // applied in order
};

/// Replays a minimization trace: cyclically reduce, then for each step apply
/// the automorphism and cyclically reduce again.
inline Word replay_trace(const Word& w, const std::vector<WhiteheadAut>& trace) {
  Word cur = cyclic_reduce(w).core;
  for (const auto& a : trace) cur = cyclic_reduce(apply_whitehead(a, cur)).core;
  return cur;
}

/// Greedy Whitehead minimization of the cyclic word of w. Each step takes the
/// automorphism with the largest decrease in cyclic length, the first one in
/// enumeration order on ties, and stops when none decreases it.
inline Minimization minimize(const Word& w) {
  Minimization out{cyclic_reduce(w).core, {}};
  const auto& candidates = detail::shortening_candidates(w.rank());
  for (;;) {
    const MultiplierAut* best = nullptr;
    Word best_word = out.minword;
    for (const auto& m : candidates) {
      Word img = cyclic_reduce(apply_elementary(m, out.minword)).core;
      if (img.size() < best_word.size()) {
        best = &m;
        best_word = std::move(img);
      }
    }
    if (!best) break;
    out.trace.emplace_back(*best);
    out.minword = std::move(best_word);
  }
  return out;
}

/// True iff w lies in the Aut(F_n)-orbit of x1. The empty word is not primitive.
inline bool is_primitive(const Word& w) {
  if (w.empty()) return false;
  return minimize(w).minword.size() == 1;
}

/// An automorphism sigma with sigma(x1) = w, for primitive w.
///
/// Each minimization step is tracked on linear words as a Whitehead factor
/// followed by the inner automorphism that undoes the conjugation removed by
/// cyclic reduction. That yields Psi with Psi(w) a single letter l; with T the
/// signed transposition sending x1 to l, sigma = Psi^-1 T.
inline Automorphism carrier_automorphism(const Word& w) {
  const std::size_t n = w.rank();
  const auto start = cyclic_reduce(w);
  Automorphism psi = tau(invert(start.conjugator));
  Word cur = start.core;
  for (const auto& step : minimize(w).trace) {
    const Word img = apply_whitehead(step, cur);
    const auto cr = cyclic_reduce(img);
    psi = compose({tau(invert(cr.conjugator)), Automorphism::from(step), psi});
    cur = cr.core;
  }
  if (cur.size() != 1) throw PreconditionError("carrier_automorphism: word is not primitive");
  const Letter l = cur[0];
  PermutationAut t = identity_permutation(n);
  t.images[l.gen() - 1] = Letter(1, 1);
  t.images[0] = l;
  Automorphism sigma = compose(inverse(psi), Automorphism::from(ElementaryAut(t)));
  if (!(sigma.image(1) == w)) throw InternalError("carrier automorphism misses its target");
  return sigma;
}

}  // namespace palwidth

#endif  // PALWIDTH_PRIMITIVITY_HPP
