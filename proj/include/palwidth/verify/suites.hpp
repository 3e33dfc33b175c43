#ifndef PALWIDTH_VERIFY_SUITES_HPP
#define PALWIDTH_VERIFY_SUITES_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "palwidth/palwidth.hpp"
#include "palwidth/verify/oracles.hpp"

// Deterministic verification suites, one per acceptance property. Every
// randomized suite draws from std::mt19937_64 seeded with the caller's seed.

namespace palwidth::verify {

struct Outcome {
  bool ok = true;
  std::string detail;
};

struct Suite {
  int id;
  std::string name;
  double limit_seconds;
  std::function<Outcome(std::uint64_t seed)> run;
};

struct SuiteResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
  double limit_seconds = 0;
};

namespace detail {

using Rng = std::mt19937_64;

template <class Rng>
Word random_word_upto(std::size_t rank, std::size_t max_len, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  return random_word(rank, len(rng), rng);
}

// Reduced palindrome of length <= max_len: a random half mirrored around an
// optional middle letter.
template <class Rng>
Word random_palindrome(std::size_t rank, std::size_t max_len, Rng& rng) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  const std::size_t total = len(rng);
  const Word half = random_word(rank, total / 2, rng);
  std::vector<Letter> raw(half.begin(), half.end());
  if (total % 2) {
    std::uniform_int_distribution<std::size_t> pick(0, 2 * rank - 1);
    raw.push_back(Letter::from_index(pick(rng)));
  }
  raw.insert(raw.end(), half.letters().rbegin(), half.letters().rend());
  return Word::reduce(raw, rank);
}

inline std::string fmt_count(const char* what, std::size_t n) {
  return std::string(what) + "=" + std::to_string(n);
}

inline Outcome witness_family(std::uint64_t) {
  for (std::size_t n = 1; n <= 64; ++n) {
    const long d = delta(pal_witness(n));
    if (d != static_cast<long>(n) - 1) {
      return {false, "delta(w_" + std::to_string(n) + ") = " + std::to_string(d)};
    }
  }
  return {true, "n = 1..64"};
}

inline Outcome palindromes_vanish(std::uint64_t) {
  std::size_t count = 0;
  Outcome out;
  for_each_palindrome(2, 12, [&](const Word& p) {
    ++count;
    if (out.ok && delta(p) != 0) out = {false, "delta(" + print_word(p) + ") != 0"};
  });
  if (out.ok) out.detail = fmt_count("palindromes", count);
  return out;
}

inline Outcome antisymmetry(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 100'000; ++i) {
    const Word w = random_word_upto(3, 64, rng);
    if (delta(w) + delta(invert(w)) != 0) return {false, "fails on " + print_word(w)};
  }
  return {true, "trials=100000"};
}

inline Outcome defect(std::uint64_t seed) {
  Rng rng(seed);
  long worst = 0;
  for (int i = 0; i < 100'000; ++i) {
    const Word u = random_word_upto(3, 64, rng);
    const Word w = random_word_upto(3, 64, rng);
    const long d = delta_defect(u, w);
    worst = std::max(worst, std::labs(d));
    if (std::labs(d) > 6) return {false, "defect " + std::to_string(d) + " at " + print_word(u) +
                                              " / " + print_word(w)};
  }
  std::vector<Word> small;
  for_each_word(2, 5, [&](const Word& w) { small.push_back(w); });
  long worst_small = 0;
  for (const Word& u : small) {
    for (const Word& w : small) {
      const long d = delta_defect(u, w);
      worst_small = std::max(worst_small, std::labs(d));
      if (std::labs(d) > 6) return {false, "defect at " + print_word(u) + " / " + print_word(w)};
    }
  }
  return {true, "max |defect| random=" + std::to_string(worst) +
                    " exhaustive(len<=5)=" + std::to_string(worst_small)};
}

inline Outcome product_bound(std::uint64_t seed) {
  Rng rng(seed);
  for (int t = 0; t < 10'000; ++t) {
    const long k = t % 8 + 1;
    Word w(2);
    for (long i = 0; i < k; ++i) w = multiply(w, random_palindrome(2, 32, rng));
    if (std::labs(delta(w)) > 6 * k - 6) {
      return {false, "delta " + std::to_string(delta(w)) + " for k=" + std::to_string(k)};
    }
    if (pal_lower_bound_from_delta(w) > static_cast<std::size_t>(k) ||
        pal_lower_bound_from_delta(invert(w)) > static_cast<std::size_t>(k)) {
      return {false, "lower bound exceeds k=" + std::to_string(k)};
    }
  }
  return {true, "trials=10000"};
}

inline Outcome separation(std::uint64_t) {
  for (std::size_t m = 0; m <= 8; ++m) {
    const std::size_t lb = pal_lower_bound_from_delta(pal_witness(6 * m + 7));
    if (lb < m + 2) {
      return {false, "m=" + std::to_string(m) + " lower bound " + std::to_string(lb)};
    }
  }
  return {true, "m = 0..8"};
}

inline Outcome whitehead_soundness(std::uint64_t) {
  std::size_t checked = 0;
  for (auto [rank, len] : {std::pair<std::size_t, std::size_t>{2, 8}, {3, 6}}) {
    for (const Word& p : enumerate_primitives(rank, len)) {
      ++checked;
      if (nonprimitivity_certificate(p)) return {false, "fires on " + print_word(p)};
    }
  }
  return {true, fmt_count("primitives", checked)};
}

inline Outcome hamiltonian_u(std::uint64_t) {
  std::size_t windows = 0;
  for (std::size_t n = 2; n <= 5; ++n) {
    const Word u = u_word(n);
    const auto cycle = is_hamiltonian(whitehead_graph(u));
    if (!cycle) return {false, "WG(u(" + std::to_string(n) + ")) not Hamiltonian"};
    const std::size_t sl = syllable_length(u);
    for (std::size_t i = 0; i < sl; ++i) {
      ++windows;
      const WhiteheadGraph g = whitehead_graph(syllable_window(u, i, 2 * n, true));
      const auto c = is_hamiltonian(g);
      if (!c || !is_hamiltonian_cycle(g, *c)) {
        return {false, "window " + std::to_string(i) + " of u(" + std::to_string(n) + ")"};
      }
    }
  }
  return {true, fmt_count("windows", windows)};
}

inline Outcome ham_power(std::uint64_t) {
  for (std::size_t n : {2, 3}) {
    for (std::size_t k = 1; k <= 4; ++k) {
      HamPowerCert c;
      try {
        c = ham_power_cert(n, k);
      } catch (const CertificateRefused& e) {
        return {false, e.what()};
      }
      if (!check_ham_power_cert(c) || c.lower_bound() != k + 1) {
        return {false, "certificate (" + std::to_string(n) + "," + std::to_string(k) +
                           ") does not re-verify"};
      }
      if (k == 1 && is_primitive(power(u_word(n), 2))) {
        return {false, "u(" + std::to_string(n) + ")^2 reported primitive"};
      }
    }
  }
  return {true, "(n,k) in {2,3}x{1..4}"};
}

inline Outcome two_palindromes(std::uint64_t) {
  std::size_t n = 0;
  for (const Word& a : enumerate_primitives(2, 8)) {
    ++n;
    const auto [p1, p2] = prim_decompose_two_pals(a);
    if (!is_palindrome(p1) || !is_palindrome(p2) || !(multiply(p1, p2) == a)) {
      return {false, "bad decomposition of " + print_word(a)};
    }
  }
  return {true, fmt_count("primitives", n)};
}

inline Outcome p_palindrome(std::uint64_t seed) {
  if (!(p_of_sigma(nielsen_U()) == generator(2, 1))) return {false, "p(U) != x1"};
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> factors(1, 8);
  for (int i = 0; i < 500; ++i) {
    const Automorphism s = random_automorphism(2, factors(rng), rng);
    if (!is_palindrome(p_of_sigma(s))) return {false, "trial " + std::to_string(i)};
  }
  return {true, "p(U) = x1; trials=500"};
}

inline Outcome fresh_generator(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 1000; ++i) {
    const Word w = random_word_upto(2, 24, rng);
    const auto [a, b] = fresh_gen_decompose(w, 3);
    if (!(multiply(a, b) == w.with_rank(3))) return {false, "product differs for " + print_word(w)};
    if (i % 10 == 0 && !(is_primitive(a) && is_primitive(b))) {
      return {false, "non-primitive output for " + print_word(w)};
    }
  }
  return {true, "round-trips=1000 primitivity-checks=100"};
}

inline Outcome free_product(std::uint64_t seed) {
  for (std::size_t n = 1; n <= 64; ++n) {
    if (fp_delta(fp_witness(n)) != static_cast<long>(n) - 1) {
      return {false, "fp_delta(witness " + std::to_string(n) + ")"};
    }
  }
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> count(0, 16);
  long worst = 0;
  for (int i = 0; i < 10'000; ++i) {
    const FPWord g = random_fp_word(count(rng), 5, rng);
    const FPWord h = random_fp_word(count(rng), 5, rng);
    worst = std::max(worst, std::labs(fp_delta_defect(g, h)));
  }
  return {worst <= 6, "empirical max |defect|=" + std::to_string(worst)};
}

// Closure caps: words up to length 10, palindromic steps up to length 7.
inline constexpr std::size_t kClosureWordLen = 10;
inline constexpr std::size_t kClosurePalLen = 7;

inline Outcome oracle_agreement(std::uint64_t) {
  const oracle::Rank2Index ix(kClosureWordLen);
  const auto level = oracle::palindrome_closure(ix, kClosurePalLen, 4);
  std::size_t words = 0, exact = 0, agree = 0;
  std::vector<std::string> inexact;
  std::string mismatch;
  for_each_word(2, 6, [&](const Word& w) {
    ++words;
    const PalBracket b = pal_length_bounded(w, 4);
    const std::uint8_t o = level[*ix.index(w)];
    const bool sound =
        o == oracle::kUnreached ? true : b.lower <= o && (!b.upper || *b.upper <= o);
    if (!sound && mismatch.empty()) mismatch = print_compact(w);
    if (b.exact()) {
      ++exact;
      if (o == *b.upper) ++agree;
      else if (mismatch.empty()) mismatch = print_compact(w);
    } else {
      inexact.push_back(print_compact(w) + "[" + std::to_string(b.lower) + "," +
                        (b.upper ? std::to_string(*b.upper) : "?") + "]");
    }
  });

  const auto bfs = enumerate_primitives(2, 8);
  auto filt = oracle::primitives_by_filter(2, 8);
  std::sort(filt.begin(), filt.end(), shortlex_less);
  const bool prims_equal = bfs == filt;

  std::ostringstream d;
  d << "words=" << words << " exact=" << exact << " agree=" << agree
    << " primitives bfs=" << bfs.size() << " filter=" << filt.size();
  if (!mismatch.empty()) d << " mismatch at " << mismatch;
  if (!inexact.empty()) {
    d << " inexact:";
    for (const auto& s : inexact) d << ' ' << s;
  }
  return {mismatch.empty() && inexact.empty() && prims_equal, d.str()};
}

inline Outcome text_formats(std::uint64_t seed) {
  Rng rng(seed);
  for (int i = 0; i < 10'000; ++i) {
    const Word w = random_word_upto(3, 40, rng);
    if (!(parse_word(print_word(w), 3) == w) || !(parse_word(print_compact(w), 3) == w)) {
      return {false, "round-trip fails on " + print_word(w)};
    }
  }
  const Word ex = parse_word("x1^2 x2^-3 x3^4 x2^-3 x1^2", 3);
  if (std::to_string(delta(ex)) != "0") return {false, "worked example delta != 0"};
  const std::string dot = emit_dot(whitehead_graph(u_word(2)));
  std::size_t edges = 0;
  for (std::size_t pos = dot.find(" -- "); pos != std::string::npos; pos = dot.find(" -- ", pos + 1)) {
    ++edges;
  }
  if (edges != 4) return {false, "DOT for WG(u(2)) has " + std::to_string(edges) + " edges"};
  return {true, "round-trips=10000; worked example delta=0; WG(u(2)) edges=4"};
}

}  // namespace detail

/// The suites in criterion order.
inline const std::vector<Suite>& suites() {
  static const std::vector<Suite> all{
      {1, "witness-family", 1, detail::witness_family},
      {2, "palindromes-vanish", 30, detail::palindromes_vanish},
      {3, "antisymmetry", 10, detail::antisymmetry},
      {4, "defect", 60, detail::defect},
      {5, "product-bound", 30, detail::product_bound},
      {6, "separation", 1, detail::separation},
      {7, "whitehead-soundness", 300, detail::whitehead_soundness},
      {8, "hamiltonian-u", 30, detail::hamiltonian_u},
      {9, "ham-power", 60, detail::ham_power},
      {10, "two-palindromes", 300, detail::two_palindromes},
      {11, "p-palindrome", 30, detail::p_palindrome},
      {12, "fresh-generator", 60, detail::fresh_generator},
      {13, "free-product", 10, detail::free_product},
      {14, "oracle-agreement", 600, detail::oracle_agreement},
      {15, "text-formats", 900, detail::text_formats},
  };
  return all;
}

/// Runs a suite; it passes when the check holds within the time limit.
/// Exceptions count as failures.
inline SuiteResult run_suite(const Suite& s, std::uint64_t seed) {
  SuiteResult r{s.id, s.name, false, "", 0, s.limit_seconds};
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = s.run(seed);
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.detail = o.detail;
  r.pass = o.ok && r.seconds <= s.limit_seconds;
  if (o.ok && !r.pass) r.detail += " (time limit exceeded)";
  return r;
}

inline const Suite* find_suite(const std::string& key) {
  for (const Suite& s : suites()) {
    if (s.name == key || std::to_string(s.id) == key) return &s;
  }
  return nullptr;
}

}  // namespace palwidth::verify

#endif  // PALWIDTH_VERIFY_SUITES_HPP
