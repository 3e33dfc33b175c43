#ifndef PALWIDTH_WHITEHEAD_AUT_HPP
#define PALWIDTH_WHITEHEAD_AUT_HPP

#include <algorithm>
#include <numeric>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include "palwidth/word.hpp"

namespace palwidth {

/// Type-I Whitehead automorphism: x_i -> images[i-1], a signed permutation of
/// the generators.
struct PermutationAut {
  std::vector<Letter> images;

  bool operator==(const PermutationAut&) const = default;
};

/// Type-II Whitehead automorphism (a, S) with a in S and a^-1 not in S.
///
/// The multiplier a and its inverse are fixed. Any other letter x maps to
///   a^-1 x   if x^-1 in S,
///   x a      if x in S,
/// both factors when both hold, and x itself otherwise.
struct MultiplierAut {
  Letter multiplier;
  std::vector<bool> in_set;  // indexed by Letter::index()

  bool operator==(const MultiplierAut&) const = default;
};

using WhiteheadAut = std::variant<PermutationAut, MultiplierAut>;

inline std::size_t aut_rank(const PermutationAut& p) { return p.images.size(); }
inline std::size_t aut_rank(const MultiplierAut& m) { return m.in_set.size() / 2; }
inline std::size_t aut_rank(const WhiteheadAut& a) {
  return std::visit([](const auto& x) { return aut_rank(x); }, a);
}

inline PermutationAut identity_permutation(std::size_t rank) {
  PermutationAut p;
  for (std::size_t g = 1; g <= rank; ++g) p.images.emplace_back(g, 1);
  return p;
}

/// Builds (a, S), validating a in S and a^-1 not in S.
inline MultiplierAut make_multiplier(std::size_t rank, Letter a,
                                     const std::vector<Letter>& set) {
  if (a.gen() > rank) throw RankError("multiplier outside rank");
  MultiplierAut m{a, std::vector<bool>(2 * rank, false)};
  for (Letter l : set) {
    if (l.gen() > rank) throw RankError("set letter outside rank");
    m.in_set[l.index()] = true;
  }
  if (!m.in_set[a.index()] || m.in_set[a.inverse().index()]) {
    throw PreconditionError("type-II Whitehead automorphism needs a in S, a^-1 not in S");
  }
  return m;
}

/// Appends the image of a single letter.
inline void append_image(const PermutationAut& p, Letter l, std::vector<Letter>& out) {
  const Letter img = p.images.at(l.gen() - 1);
  out.push_back(l.sign() > 0 ? img : img.inverse());
}

inline void append_image(const MultiplierAut& m, Letter l, std::vector<Letter>& out) {
  if (l.gen() == m.multiplier.gen()) {
    out.push_back(l);
    return;
  }
  if (m.in_set[l.inverse().index()]) out.push_back(m.multiplier.inverse());
  out.push_back(l);
  if (m.in_set[l.index()]) out.push_back(m.multiplier);
}

template <class Aut>
Word apply_elementary(const Aut& a, const Word& w) {
  if (aut_rank(a) != w.rank()) throw RankError("automorphism and word rank differ");
  std::vector<Letter> raw;
  raw.reserve(w.size() + 2);
  for (Letter l : w) append_image(a, l, raw);
  return Word::reduce(raw, w.rank());
}

inline Word apply_whitehead(const WhiteheadAut& a, const Word& w) {
  return std::visit([&](const auto& x) { return apply_elementary(x, w); }, a);
}

inline PermutationAut inverse(const PermutationAut& p) {
  PermutationAut out{std::vector<Letter>(p.images.size(), Letter(1, 1))};
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    const Letter img = p.images[i];
    // x_{i+1} -> img  means  img.gen -> x_{i+1}^{img.sign}
    out.images[img.gen() - 1] = Letter(i + 1, img.sign());
  }
  return out;
}

/// (a, S)^-1 = (a^-1, S - a + a^-1).
inline MultiplierAut inverse(const MultiplierAut& m) {
  MultiplierAut out = m;
  out.multiplier = m.multiplier.inverse();
  out.in_set[m.multiplier.index()] = false;
  out.in_set[m.multiplier.inverse().index()] = true;
  return out;
}

inline WhiteheadAut inverse(const WhiteheadAut& a) {
  return std::visit([](const auto& x) { return WhiteheadAut(inverse(x)); }, a);
}

inline bool is_identity(const PermutationAut& p) {
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (p.images[i] != Letter(i + 1, 1)) return false;
  }
  return true;
}

/// True iff (a, S) fixes every generator, i.e. S = {a}.
inline bool is_identity(const MultiplierAut& m) {
  for (std::size_t i = 0; i < m.in_set.size(); ++i) {
    if (m.in_set[i] && i != m.multiplier.index()) return false;
  }
  return true;
}

inline bool is_identity(const WhiteheadAut& a) {
  return std::visit([](const auto& x) { return is_identity(x); }, a);
}

inline std::string describe_letter(Letter l) {
  return "x" + std::to_string(l.gen()) + (l.sign() < 0 ? "^-1" : "");
}

inline std::string describe(const PermutationAut& p) {
  std::string s = "perm(";
  for (std::size_t i = 0; i < p.images.size(); ++i) {
    if (i) s += ", ";
    s += describe_letter(p.images[i]);
  }
  return s + ")";
}

inline std::string describe(const MultiplierAut& m) {
  std::string s = "mult(" + describe_letter(m.multiplier) + "; {";
  bool first = true;
  for (std::size_t i = 0; i < m.in_set.size(); ++i) {
    if (!m.in_set[i]) continue;
    if (!first) s += ", ";
    s += describe_letter(Letter::from_index(i));
    first = false;
  }
  return s + "})";
}

inline std::string describe(const WhiteheadAut& a) {
  return std::visit([](const auto& x) { return describe(x); }, a);
}

/// All n! 2^n type-I automorphisms: permutations in lexicographic order, and
/// for each one the sign patterns in increasing bitmask order. The identity
/// comes first.
inline std::vector<PermutationAut> enumerate_permutation_autos(std::size_t rank) {
  std::vector<PermutationAut> out;
  std::vector<std::size_t> perm(rank);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << rank); ++mask) {
      PermutationAut p;
      for (std::size_t i = 0; i < rank; ++i) {
        p.images.emplace_back(perm[i], (mask >> i) & 1 ? -1 : 1);
      }
      out.push_back(std::move(p));
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

/// All valid type-II pairs (a, S): multipliers in letter order, and for each
/// one the 2^(2n-2) choices for the letters other than a^{+-1}, as a bitmask
/// over those letters in letter order. Includes the identities S = {a}.
inline std::vector<MultiplierAut> enumerate_multiplier_autos(std::size_t rank) {
  std::vector<MultiplierAut> out;
  const std::size_t letters = 2 * rank;
  for (std::size_t ai = 0; ai < letters; ++ai) {
    const Letter a = Letter::from_index(ai);
    std::vector<std::size_t> others;
    for (std::size_t i = 0; i < letters; ++i) {
      if (Letter::from_index(i).gen() != a.gen()) others.push_back(i);
    }
    for (std::size_t mask = 0; mask < (std::size_t{1} << others.size()); ++mask) {
      MultiplierAut m{a, std::vector<bool>(letters, false)};
      m.in_set[ai] = true;
      for (std::size_t b = 0; b < others.size(); ++b) {
        if ((mask >> b) & 1) m.in_set[others[b]] = true;
      }
      out.push_back(std::move(m));
    }
  }
  return out;
}

/// Type-I automorphisms followed by type-II pairs.
inline std::vector<WhiteheadAut> enumerate_whitehead_autos(std::size_t rank) {
  if (rank == 0) throw RankError("rank must be at least 1");
  std::vector<WhiteheadAut> out;
  for (auto& p : enumerate_permutation_autos(rank)) out.emplace_back(std::move(p));
  for (auto& m : enumerate_multiplier_autos(rank)) out.emplace_back(std::move(m));
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_WHITEHEAD_AUT_HPP
