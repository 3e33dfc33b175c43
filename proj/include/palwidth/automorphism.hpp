#ifndef PALWIDTH_AUTOMORPHISM_HPP
#define PALWIDTH_AUTOMORPHISM_HPP

#include <initializer_list>
#include <optional>
#include <random>
#include <variant>
#include <vector>

#include "palwidth/cyclic.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/whitehead_aut.hpp"
#include "palwidth/word.hpp"

namespace palwidth {

/// Inner automorphism g -> w g w^-1.
struct InnerAut {
  Word conjugator;

  bool operator==(const InnerAut&) const = default;
};

inline std::size_t aut_rank(const InnerAut& t) { return t.conjugator.rank(); }

inline void append_image(const InnerAut& t, Letter l, std::vector<Letter>& out) {
  out.insert(out.end(), t.conjugator.begin(), t.conjugator.end());
  out.push_back(l);
  for (auto it = t.conjugator.letters().rbegin(); it != t.conjugator.letters().rend(); ++it) {
    out.push_back(it->inverse());
  }
}

inline InnerAut inverse(const InnerAut& t) { return {invert(t.conjugator)}; }

inline std::string describe(const InnerAut& t) {
  std::string s = "inner(";
  for (std::size_t i = 0; i < t.conjugator.size(); ++i) {
    if (i) s += " ";
    s += describe_letter(t.conjugator[i]);
  }
  return s + ")";
}

using ElementaryAut = std::variant<PermutationAut, MultiplierAut, InnerAut>;

inline ElementaryAut to_elementary(const WhiteheadAut& a) {
  return std::visit([](const auto& x) { return ElementaryAut(x); }, a);
}

/// An automorphism of F_n kept as a product of elementary factors together
/// with the generator images that product induces.
///
/// Composition convention, used everywhere: compose(phi, psi) is phi after
/// psi, so apply(compose(phi, psi), w) = apply(phi, apply(psi, w)). The
/// factor list reads the same way: factors()[0] is applied last.
///
/// Only elementary factors can be fed in, so every Automorphism is invertible
/// by construction.
class Automorphism {
 public:
  static Automorphism identity(std::size_t rank) {
    Automorphism a(rank);
    for (std::size_t g = 1; g <= rank; ++g) a.images_.push_back(generator(rank, g));
    return a;
  }

  static Automorphism from(const ElementaryAut& f) {
    const std::size_t rank = std::visit([](const auto& x) { return aut_rank(x); }, f);
    Automorphism a = identity(rank);
    a.factors_.push_back(f);
    for (auto& img : a.images_) img = apply_factor(f, img);
    return a;
  }
  static Automorphism from(const WhiteheadAut& f) { return from(to_elementary(f)); }

  [[nodiscard]] std::size_t rank() const { return rank_; }
  [[nodiscard]] const std::vector<ElementaryAut>& factors() const { return factors_; }
  [[nodiscard]] const std::vector<Word>& images() const { return images_; }
  [[nodiscard]] const Word& image(std::size_t gen) const { return images_.at(gen - 1); }

  [[nodiscard]] Word apply(const Word& w) const {
    if (w.rank() != rank_) throw RankError("automorphism and word rank differ");
    std::vector<Letter> raw;
    for (Letter l : w) {
      const Word& img = images_[l.gen() - 1];
      if (l.sign() > 0) {
        raw.insert(raw.end(), img.begin(), img.end());
      } else {
        for (auto it = img.letters().rbegin(); it != img.letters().rend(); ++it) {
          raw.push_back(it->inverse());
        }
      }
    }
    return Word::reduce(raw, rank_);
  }

  /// Recomputes the generator images from the factor list alone.
  [[nodiscard]] std::vector<Word> replay_images() const {
    std::vector<Word> out;
    for (std::size_t g = 1; g <= rank_; ++g) {
      Word cur = generator(rank_, g);
      for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) cur = apply_factor(*it, cur);
      out.push_back(std::move(cur));
    }
    return out;
  }

  [[nodiscard]] bool audit() const { return replay_images() == images_; }

  /// Same images as `other`; factorizations may differ.
  [[nodiscard]] bool same_map(const Automorphism& other) const {
    return rank_ == other.rank_ && images_ == other.images_;
  }

  friend Automorphism compose(const Automorphism& phi, const Automorphism& psi);
  friend Automorphism inverse(const Automorphism& phi);

 private:
  explicit Automorphism(std::size_t rank) : rank_(rank) {
    if (rank == 0) throw RankError("rank must be at least 1");
  }

  static Word apply_factor(const ElementaryAut& f, const Word& w) {
    return std::visit([&](const auto& x) { return apply_elementary(x, w); }, f);
  }

  std::size_t rank_;
  std::vector<ElementaryAut> factors_;
  std::vector<Word> images_;
};

inline Automorphism compose(const Automorphism& phi, const Automorphism& psi) {
  if (phi.rank_ != psi.rank_) throw RankError("compose: rank mismatch");
  Automorphism out(phi.rank_);
  out.factors_ = phi.factors_;
  out.factors_.insert(out.factors_.end(), psi.factors_.begin(), psi.factors_.end());
  for (const Word& img : psi.images_) out.images_.push_back(phi.apply(img));
  return out;
}

/// compose(a, b, c, ...) = a after b after c ...
inline Automorphism compose(std::initializer_list<Automorphism> autos) {
  if (autos.size() == 0) throw PreconditionError("empty composition");
  auto it = autos.end();
  Automorphism out = *--it;
  while (it != autos.begin()) out = compose(*--it, out);
  return out;
}

inline Automorphism inverse(const Automorphism& phi) {
  Automorphism out(phi.rank_);
  for (auto it = phi.factors_.rbegin(); it != phi.factors_.rend(); ++it) {
    out.factors_.push_back(std::visit([](const auto& x) { return ElementaryAut(inverse(x)); }, *it));
  }
  out.images_ = out.replay_images();
  return out;
}

inline Word apply(const Automorphism& phi, const Word& w) { return phi.apply(w); }

/// Every generator to its inverse; agrees with theta() on words.
inline Automorphism theta_aut(std::size_t rank) {
  PermutationAut p;
  for (std::size_t g = 1; g <= rank; ++g) p.images.emplace_back(g, -1);
  return Automorphism::from(ElementaryAut(p));
}

/// The Nielsen map x1 -> x1, x2 -> x1 x2 on F_2, as the type-II pair
/// (x1^-1, {x1^-1, x2^-1}).
inline Automorphism nielsen_U() {
  return Automorphism::from(
      ElementaryAut(make_multiplier(2, Letter(1, -1), {Letter(1, -1), Letter(2, -1)})));
}

inline Automorphism tau(const Word& w) { return Automorphism::from(ElementaryAut(InnerAut{w})); }

/// The unique p with phi = tau(p), if phi is inner.
///
/// phi(x1) must be r x1 r^-1; then p = r x1^m, and m is read off as the
/// leading x1-exponent of r^-1 phi(x2) r. The answer is checked on every
/// generator. In rank 1 the identity is the only inner automorphism and the
/// empty word is returned for it.
inline std::optional<Word> extract_conjugator(const Automorphism& phi) {
  const std::size_t n = phi.rank();
  const Word x1 = generator(n, 1);
  const auto cr = cyclic_reduce(phi.image(1));
  if (!(cr.core == x1)) return std::nullopt;
  if (n == 1) return Word(1);
  const Word& r = cr.conjugator;
  const Word t = multiply({invert(r), phi.image(2), r});
  long m = 0;
  if (!t.empty() && t.front().gen() == 1) m = syllables(t).front().exponent;
  const Word p = multiply(r, generator(n, 1, m));
  const Word p_inv = invert(p);
  for (std::size_t g = 1; g <= n; ++g) {
    if (!(multiply({p, generator(n, g), p_inv}) == phi.image(g))) return std::nullopt;
  }
  return p;
}

/// The palindrome p(sigma) on F_2 with theta sigma theta sigma^-1 equal to
/// conjugation g -> p^-1 g p, so that p(U) = x1.
///
/// The composite acts trivially on the abelianization, hence is inner; a
/// failed extraction or a non-palindromic result means an Automorphism
/// invariant broke.
inline Word p_of_sigma(const Automorphism& sigma) {
  if (sigma.rank() != 2) throw PreconditionError("p_of_sigma is defined on F_2");
  const Automorphism th = theta_aut(2);
  const auto c = extract_conjugator(compose({th, sigma, th, inverse(sigma)}));
  if (!c) throw InternalError("theta sigma theta sigma^-1 is not inner");
  Word p = invert(*c);
  if (!is_palindrome(p)) throw InternalError("p(sigma) is not a palindrome");
  return p;
}

/// Random product of `factors` elementary automorphisms, each a non-identity
/// type-I or type-II Whitehead automorphism or an inner automorphism by a
/// short random word.
template <class Rng>
Automorphism random_automorphism(std::size_t rank, std::size_t factors, Rng& rng) {
  const auto whitehead = enumerate_whitehead_autos(rank);
  std::vector<const WhiteheadAut*> pool;
  for (const auto& a : whitehead) {
    if (!is_identity(a)) pool.push_back(&a);
  }
  std::uniform_int_distribution<std::size_t> kind(0, 4);
  std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
  std::uniform_int_distribution<std::size_t> len(1, 3);
  Automorphism out = Automorphism::identity(rank);
  for (std::size_t i = 0; i < factors; ++i) {
    Automorphism f = kind(rng) == 0 ? tau(random_word(rank, len(rng), rng))
                                    : Automorphism::from(*pool[pick(rng)]);
    out = compose(out, f);
  }
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_AUTOMORPHISM_HPP
