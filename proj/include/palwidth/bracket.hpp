#ifndef PALWIDTH_BRACKET_HPP
#define PALWIDTH_BRACKET_HPP

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "palwidth/word.hpp"

namespace palwidth {

/// Where a bound in a Bracket came from.
enum class Provenance {
  none,
  trivial,                // empty / nonempty / not-a-member facts
  delta_certificate,      // quasi-homomorphism bound
  exhausted_search,       // an exact decision procedure ruled out fewer factors
  witness,                // explicit factorization
  whitehead_certificate,  // Whitehead graph has no cut vertex
  ham_power_certificate,  // Hamiltonian-window counting argument
};

inline constexpr std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::none: return "none";
    case Provenance::trivial: return "trivial";
    case Provenance::delta_certificate: return "delta-certificate";
    case Provenance::exhausted_search: return "exhausted-search";
    case Provenance::witness: return "witness";
    case Provenance::whitehead_certificate: return "whitehead-certificate";
    case Provenance::ham_power_certificate: return "ham-power-certificate";
  }
  return "none";
}

/// A sound interval [lower, upper] for a length relative to a generating set.
///
/// `upper`, when present, is backed by `witness`: a factorization whose factors
/// are all members of the set and whose product reduces to the queried word.
/// An absent upper bound means the bounded search did not find a witness
/// within `max_k` factors of length at most `factor_len_cap`.
struct Bracket {
  std::size_t lower = 0;
  std::optional<std::size_t> upper;
  std::vector<Word> witness;
  Provenance lower_provenance = Provenance::none;
  Provenance upper_provenance = Provenance::none;
  std::size_t factor_len_cap = 0;
  bool budget_exhausted = false;

  [[nodiscard]] bool exact() const { return upper && *upper == lower; }

  void raise_lower(std::size_t value, Provenance why) {
    if (value > lower) {
      lower = value;
      lower_provenance = why;
    }
  }
};

using PalBracket = Bracket;
using PrimBracket = Bracket;

}  // namespace palwidth

#endif  // PALWIDTH_BRACKET_HPP
