#ifndef PALWIDTH_TEXT_HPP
#define PALWIDTH_TEXT_HPP

#include <cctype>
#include <cstdlib>
#include <string>
#include <string_view>
#include <vector>

#include "palwidth/errors.hpp"
#include "palwidth/free_product.hpp"
#include "palwidth/whitehead_graph.hpp"
#include "palwidth/word.hpp"

namespace palwidth {

// Text formats.
//
// Factor grammar: `x<i>` or `x<i>^<e>` with e a nonzero integer, separated by
// optional whitespace, e.g. `x1^2 x2^-3`. Compact grammar (rank <= 26): a-z
// for x1..x26 and A-Z for their inverses, e.g. `aabbAB`. Input containing a
// digit is read with the factor grammar, anything else with the compact one.
// The identity prints as `1`; `1` and blank input parse to it.

namespace detail {

inline bool is_blank(std::string_view s) {
  for (char c : s) {
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

inline long read_int(std::string_view s, std::size_t& pos, bool allow_sign) {
  const std::size_t start = pos;
  bool neg = false;
  if (allow_sign && pos < s.size() && (s[pos] == '-' || s[pos] == '+')) {
    neg = s[pos] == '-';
    ++pos;
  }
  const std::size_t digits = pos;
  long v = 0;
  while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
    if (v > 100'000'000) throw ParseError(start, "number too large");
    v = v * 10 + (s[pos] - '0');
    ++pos;
  }
  if (pos == digits) throw ParseError(pos, "expected digits");
  return neg ? -v : v;
}

}  // namespace detail

inline Word parse_word(std::string_view text, std::size_t rank) {
  if (rank == 0) throw RankError("rank must be at least 1");
  std::size_t first = 0;
  while (first < text.size() && std::isspace(static_cast<unsigned char>(text[first]))) ++first;
  std::size_t last = text.size();
  while (last > first && std::isspace(static_cast<unsigned char>(text[last - 1]))) --last;
  const std::string_view body = text.substr(first, last - first);
  if (body.empty() || body == "1") return Word(rank);

  std::vector<Letter> raw;
  const bool factor_grammar =
      body.find_first_of("0123456789") != std::string_view::npos;
  if (!factor_grammar) {
    if (rank > 26) throw ParseError(first, "compact grammar needs rank <= 26");
    for (std::size_t i = 0; i < body.size(); ++i) {
      const char c = body[i];
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      std::size_t gen;
      int sign;
      if (c >= 'a' && c <= 'z') {
        gen = static_cast<std::size_t>(c - 'a') + 1;
        sign = 1;
      } else if (c >= 'A' && c <= 'Z') {
        gen = static_cast<std::size_t>(c - 'A') + 1;
        sign = -1;
      } else {
        throw ParseError(first + i, std::string("unexpected character '") + c + "'");
      }
      if (gen > rank) {
        throw ParseError(first + i, "generator " + std::string(1, c) + " exceeds rank " +
                                        std::to_string(rank));
      }
      raw.emplace_back(gen, sign);
    }
    return Word::reduce(raw, rank);
  }

  std::size_t pos = 0;
  while (pos < body.size()) {
    if (std::isspace(static_cast<unsigned char>(body[pos]))) {
      ++pos;
      continue;
    }
    if (body[pos] != 'x') throw ParseError(first + pos, "expected 'x'");
    const std::size_t token = pos;
    ++pos;
    long gen;
    try {
      gen = detail::read_int(body, pos, false);
    } catch (const ParseError& e) {
      throw ParseError(first + e.position(), "expected generator index after 'x'");
    }
    if (gen < 1 || static_cast<std::size_t>(gen) > rank) {
      throw ParseError(first + token, "generator x" + std::to_string(gen) +
                                          " outside rank " + std::to_string(rank));
    }
    long e = 1;
    if (pos < body.size() && body[pos] == '^') {
      ++pos;
      try {
        e = detail::read_int(body, pos, true);
      } catch (const ParseError& err) {
        throw ParseError(first + err.position(), "expected exponent after '^'");
      }
      if (e == 0) throw ParseError(first + token, "zero exponent");
    }
    if (pos < body.size() && !std::isspace(static_cast<unsigned char>(body[pos])) &&
        body[pos] != 'x') {
      throw ParseError(first + pos, std::string("unexpected character '") + body[pos] + "'");
    }
    raw.insert(raw.end(), static_cast<std::size_t>(std::labs(e)),
               Letter(static_cast<std::size_t>(gen), e < 0 ? -1 : 1));
  }
  return Word::reduce(raw, rank);
}

/// Canonical factor-grammar form; parse_word(print_word(w), w.rank()) == w.
inline std::string print_word(const Word& w) {
  if (w.empty()) return "1";
  std::string out;
  for (const Syllable& s : syllables(w)) {
    if (!out.empty()) out += ' ';
    out += 'x';
    out += std::to_string(s.gen);
    if (s.exponent != 1) {
      out += '^';
      out += std::to_string(s.exponent);
    }
  }
  return out;
}

inline std::string print_compact(const Word& w) {
  if (w.rank() > 26) throw RankError("compact form needs rank <= 26");
  if (w.empty()) return "1";
  std::string out;
  for (Letter l : w) {
    out += static_cast<char>((l.sign() > 0 ? 'a' : 'A') + static_cast<int>(l.gen() - 1));
  }
  return out;
}

/// `x3` for x3, `x3'` for its inverse.
inline std::string vertex_label(std::size_t index) {
  const Letter l = Letter::from_index(index);
  return "x" + std::to_string(l.gen()) + (l.sign() < 0 ? "'" : "");
}

/// DOT text: every vertex on its own line, then one line per edge in sorted
/// order. Identifiers are quoted since the prime is not a DOT name character.
inline std::string emit_dot(const WhiteheadGraph& g, std::string_view name = "WG") {
  std::string out = "graph " + std::string(name) + " {\n";
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    out += "  \"" + vertex_label(v) + "\";\n";
  }
  for (const auto& [u, v] : g.edges()) {
    out += "  \"" + vertex_label(u) + "\" -- \"" + vertex_label(v) + "\";\n";
  }
  out += "}\n";
  return out;
}

/// Free-product words: `a^3 b^-2 a`, factor letter then optional exponent.
inline FPWord parse_fp_word(std::string_view text) {
  std::vector<FPSyllable> raw;
  std::size_t pos = 0;
  if (detail::is_blank(text)) return FPWord();
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c != 'a' && c != 'b') throw ParseError(pos, "expected factor letter 'a' or 'b'");
    ++pos;
    long e = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      e = detail::read_int(text, pos, true);
      if (e == 0) throw ParseError(pos, "zero exponent");
    }
    raw.push_back({c == 'a' ? Factor::A : Factor::B, e});
  }
  FPWord out;
  for (const auto& s : raw) out = fp_multiply(out, FPWord({s}));
  return out;
}

inline std::string print_fp_word(const FPWord& g) {
  if (g.empty()) return "1";
  std::string out;
  for (const auto& s : g.syllables()) {
    if (!out.empty()) out += ' ';
    out += s.factor == Factor::A ? 'a' : 'b';
    if (s.element != 1) out += "^" + std::to_string(s.element);
  }
  return out;
}

}  // namespace palwidth

#endif  // PALWIDTH_TEXT_HPP
