#ifndef PALWIDTH_TOOLS_CLI_HPP
#define PALWIDTH_TOOLS_CLI_HPP

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "palwidth/palwidth.hpp"
#include "palwidth/verify/suites.hpp"

namespace palwidth::cli {

inline constexpr const char* kVersion = "0.1.0";
inline constexpr const char* kSchema = "palwidth.run/1";

using nlohmann::json;

/// What a command produced: text for humans, structured fields for JSONL.
struct Report {
  std::string text;
  json inputs = json::object();
  json outputs = json::object();
  json certificates = json::object();
  int exit_code = 0;
};

struct Globals {
  std::optional<std::size_t> rank;
  std::uint64_t seed = 1;
  std::size_t max_k = 3;
  std::size_t len_cap = 0;  // 0: library default
  std::size_t k = 1;
  std::string format = "text";
  std::string out_path;
};

namespace detail {

inline std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return "";
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Highest generator index mentioned in factor or compact text.
inline std::size_t mentioned_rank(const std::string& text) {
  std::size_t best = 0;
  if (text.find_first_of("0123456789") != std::string::npos) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] != 'x') continue;
      std::size_t j = i + 1, v = 0;
      while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 1'000'000) {
        v = v * 10 + static_cast<std::size_t>(text[j++] - '0');
      }
      best = std::max(best, v);
    }
  } else {
    for (char c : text) {
      if (c >= 'a' && c <= 'z') best = std::max<std::size_t>(best, static_cast<std::size_t>(c - 'a') + 1);
      if (c >= 'A' && c <= 'Z') best = std::max<std::size_t>(best, static_cast<std::size_t>(c - 'A') + 1);
    }
  }
  return best;
}

inline json bracket_json(const Bracket& b) {
  json j;
  j["lower"] = b.lower;
  j["upper"] = b.upper ? json(*b.upper) : json(nullptr);
  j["exact"] = b.exact();
  j["lower_provenance"] = std::string(to_string(b.lower_provenance));
  j["upper_provenance"] = std::string(to_string(b.upper_provenance));
  j["factor_len_cap"] = b.factor_len_cap;
  j["budget_exhausted"] = b.budget_exhausted;
  j["witness"] = json::array();
  for (const Word& f : b.witness) j["witness"].push_back(print_word(f));
  return j;
}

inline std::string bracket_text(const Bracket& b) {
  std::ostringstream s;
  s << "lower " << b.lower << " (" << to_string(b.lower_provenance) << ")\n";
  s << "upper " << (b.upper ? std::to_string(*b.upper) : "unknown");
  if (b.upper) s << " (" << to_string(b.upper_provenance) << ")";
  s << "\nexact " << (b.exact() ? "yes" : "no") << "\n";
  s << "factor_len_cap " << b.factor_len_cap << (b.budget_exhausted ? " (budget exhausted)" : "")
    << "\n";
  if (!b.witness.empty()) {
    s << "witness";
    for (const Word& f : b.witness) s << " [" << print_word(f) << "]";
    s << "\n";
  }
  return s.str();
}

inline json labels(const std::vector<std::size_t>& vs) {
  json j = json::array();
  for (std::size_t v : vs) j.push_back(vertex_label(v));
  return j;
}

inline std::string join_labels(const std::vector<std::size_t>& vs) {
  std::string s;
  for (std::size_t v : vs) s += (s.empty() ? "" : " ") + vertex_label(v);
  return s;
}

}  // namespace detail

/// Runs the command line `args` (without the program name). Output goes to
/// `out`, or to --out when given; diagnostics to `err`. Returns the exit code:
/// 0 success, 1 a verification suite failed, 2 usage or parse error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                   std::istream& in) {
  CLI::App app{"Palindromic and primitive widths in free groups", "palwidth"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  Globals g;
  std::size_t rank_value = 0;
  app.add_option("--rank", rank_value, "rank of the free group (default: from the word, min 2)");
  app.add_option("--seed", g.seed, "seed for randomized suites")->capture_default_str();
  app.add_option("--max-k", g.max_k, "largest factor count the searches try")->capture_default_str();
  app.add_option("--len-cap", g.len_cap, "factor length cap (default 2*len+2)");
  app.add_option("-k", g.k, "power parameter for certificates")->capture_default_str();
  app.add_option("--format", g.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--out", g.out_path, "write the result to this file");

  std::string word_text;
  std::string fp_text;
  std::size_t number = 0;
  std::size_t fresh = 0;
  std::string suite_name;
  std::function<Report()> action;
  bool k_given = false;
  std::string command;

  auto word_opt = [&](CLI::App* sc) {
    sc->add_option("word", word_text, "word; read from stdin when omitted");
  };

  // Reads the word argument (or stdin) and fixes the rank.
  auto read_word = [&](Report& r) -> Word {
    std::string text = word_text;
    if (text.empty()) {
      std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      text = detail::trim(all);
    }
    const std::size_t rank = g.rank ? *g.rank : std::max<std::size_t>(2, detail::mentioned_rank(text));
    Word w = parse_word(text, rank);
    r.inputs["word"] = print_word(w);
    r.inputs["rank"] = rank;
    return w;
  };

  auto sub = [&](CLI::App* parent, const std::string& name, const std::string& desc,
                 std::function<Report()> f) {
    CLI::App* sc = parent->add_subcommand(name, desc);
    sc->fallthrough();
    const std::string full = parent == &app ? name : parent->get_name() + " " + name;
    sc->callback([&, full, f] {
      command = full;
      action = f;
    });
    return sc;
  };

  word_opt(sub(&app, "reduce", "freely reduce a word", [&] {
    Report r;
    const Word w = read_word(r);
    r.outputs["word"] = print_word(w);
    r.outputs["length"] = w.size();
    r.text = print_word(w) + "\n";
    return r;
  }));

  word_opt(sub(&app, "delta", "quasi-homomorphism value", [&] {
    Report r;
    const Word w = read_word(r);
    const long d = delta(w);
    r.outputs["delta"] = d;
    r.outputs["pal_lower_bound"] = pal_lower_bound_from_delta(w);
    r.text = std::to_string(d) + "\n";
    return r;
  }));

  CLI::App* pal = app.add_subcommand("pal", "palindromes");
  pal->fallthrough();
  pal->require_subcommand(1);
  word_opt(sub(pal, "is", "is the word a palindrome", [&] {
    Report r;
    const Word w = read_word(r);
    r.outputs["palindrome"] = is_palindrome(w);
    r.text = is_palindrome(w) ? "true\n" : "false\n";
    return r;
  }));
  word_opt(sub(pal, "length", "bracket for the palindromic length", [&] {
    Report r;
    const Word w = read_word(r);
    const std::size_t cap = g.len_cap ? g.len_cap : default_factor_len_cap(w);
    const PalBracket b = pal_length_bounded(w, g.max_k, cap);
    r.inputs["max_k"] = g.max_k;
    r.inputs["len_cap"] = cap;
    r.outputs = detail::bracket_json(b);
    r.text = detail::bracket_text(b);
    return r;
  }));
  sub(pal, "witness", "the word x1 x2 x1^2 x2^2 ... x1^n x2^n", [&] {
    Report r;
    const Word w = pal_witness(number, g.rank ? *g.rank : 2);
    r.inputs["n"] = number;
    r.outputs["word"] = print_word(w);
    r.outputs["delta"] = delta(w);
    r.text = print_word(w) + "\n";
    return r;
  })->add_option("n", number, "index n >= 1")->required();

  CLI::App* wg = app.add_subcommand("wg", "Whitehead graphs");
  wg->fallthrough();
  wg->require_subcommand(1);
  word_opt(sub(wg, "dot", "Whitehead graph as DOT", [&] {
    Report r;
    const Word w = read_word(r);
    const WhiteheadGraph gr = whitehead_graph(w);
    r.outputs["dot"] = emit_dot(gr);
    r.outputs["edges"] = gr.edges().size();
    r.text = emit_dot(gr);
    return r;
  }));
  word_opt(sub(wg, "cut", "cut vertices", [&] {
    Report r;
    const Word w = read_word(r);
    const WhiteheadGraph gr = whitehead_graph(w);
    const auto cuts = cut_vertices(gr);
    r.outputs["cut_vertices"] = detail::labels(cuts);
    r.outputs["connected"] = is_connected(gr);
    r.text = cuts.empty() ? "none\n" : detail::join_labels(cuts) + "\n";
    return r;
  }));
  word_opt(sub(wg, "ham", "Hamiltonian cycle", [&] {
    Report r;
    const Word w = read_word(r);
    const auto c = is_hamiltonian(whitehead_graph(w));
    r.outputs["hamiltonian"] = c.has_value();
    r.outputs["cycle"] = c ? detail::labels(*c) : json(nullptr);
    r.text = c ? detail::join_labels(*c) + "\n" : "none\n";
    return r;
  }));

  CLI::App* prim = app.add_subcommand("prim", "primitive elements");
  prim->fallthrough();
  prim->require_subcommand(1);
  word_opt(sub(prim, "is", "is the word primitive", [&] {
    Report r;
    const Word w = read_word(r);
    const auto m = minimize(w);
    const bool p = !w.empty() && m.minword.size() == 1;
    r.outputs["primitive"] = p;
    r.outputs["minimal_word"] = print_word(m.minword);
    r.outputs["steps"] = m.trace.size();
    r.text = p ? "true\n" : "false\n";
    return r;
  }));
  word_opt(sub(prim, "length", "bracket for the primitive length", [&] {
    Report r;
    const Word w = read_word(r);
    const std::size_t cap = g.len_cap ? g.len_cap : default_factor_len_cap(w);
    const PrimBracket b = prim_length_bounded(w, g.max_k, cap);
    r.inputs["max_k"] = g.max_k;
    r.inputs["len_cap"] = cap;
    r.outputs = detail::bracket_json(b);
    r.text = detail::bracket_text(b);
    return r;
  }));
  word_opt(sub(prim, "cert", "Whitehead certificate for a word; with -k and no word, the u^(2k) certificate for n = --rank", [&] {
    Report r;
    if (word_text.empty() && k_given) {
      const std::size_t n = g.rank ? *g.rank : 2;
      r.inputs["n"] = n;
      r.inputs["k"] = g.k;
      const HamPowerCert c = ham_power_cert(n, g.k);
      json j;
      j["u"] = print_word(u_word(n));
      j["sl_u"] = c.sl_u;
      j["sl_power"] = c.sl_power;
      j["windows"] = c.windows.size();
      j["transcript"] = c.transcript;
      j["verified"] = check_ham_power_cert(c);
      r.certificates["ham_power"] = j;
      r.outputs["lower_bound"] = c.lower_bound();
      std::ostringstream s;
      s << "u(" << n << ")^" << 2 * g.k << " is not a product of " << g.k
        << " or fewer primitive elements\n";
      for (const auto& line : c.transcript) s << "  " << line << "\n";
      s << "lower bound " << c.lower_bound() << "\n";
      r.text = s.str();
      return r;
    }
    const Word w = read_word(r);
    const auto c = nonprimitivity_certificate(w);
    r.outputs["certified_non_primitive"] = c.has_value();
    if (c) {
      json j;
      j["core"] = print_word(c->core);
      j["hamiltonian_cycle"] = c->hamiltonian_cycle ? detail::labels(*c->hamiltonian_cycle) : json(nullptr);
      j["connected"] = c->connected;
      j["cut_vertex_free"] = c->cut_vertex_free;
      j["verified"] = check_certificate(*c);
      r.certificates["whitehead"] = j;
      r.text = "not primitive: Whitehead graph of " + print_word(c->core) +
               " is connected without cut vertex\n";
    } else {
      r.text = "no certificate\n";
    }
    return r;
  }));
  word_opt(sub(prim, "decompose2pal", "two palindromes with product the primitive word", [&] {
    Report r;
    const Word w = read_word(r);
    const auto [p1, p2] = prim_decompose_two_pals(w);
    r.outputs["p1"] = print_word(p1);
    r.outputs["p2"] = print_word(p2);
    r.text = print_word(p1) + "\n" + print_word(p2) + "\n";
    return r;
  }));
  {
    CLI::App* f = sub(prim, "fresh", "w = x^-1 (x w) with a fresh generator x", [&] {
      Report r;
      const Word w = read_word(r);
      const std::size_t x = fresh ? fresh : w.rank() + 1;
      const auto [a, b] = fresh_gen_decompose(w, x);
      r.inputs["fresh"] = x;
      r.outputs["first"] = print_word(a);
      r.outputs["second"] = print_word(b);
      r.text = print_word(a) + "\n" + print_word(b) + "\n";
      return r;
    });
    word_opt(f);
    f->add_option("--fresh", fresh, "index of the fresh generator (default rank+1)");
  }

  CLI::App* fp = app.add_subcommand("fp", "free product of two infinite cyclic groups");
  fp->fallthrough();
  fp->require_subcommand(1);
  sub(fp, "delta", "quasi-homomorphism on A*B", [&] {
    Report r;
    std::string text = fp_text;
    if (text.empty()) {
      std::string all((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
      text = detail::trim(all);
    }
    const FPWord x = parse_fp_word(text);
    r.inputs["word"] = print_fp_word(x);
    r.outputs["delta"] = fp_delta(x);
    r.text = std::to_string(fp_delta(x)) + "\n";
    return r;
  })->add_option("word", fp_text, "word such as 'a^3 b^-2 a'");
  sub(fp, "witness", "a b a^2 b^2 ... a^n b^n", [&] {
    Report r;
    const FPWord x = fp_witness(number);
    r.inputs["n"] = number;
    r.outputs["word"] = print_fp_word(x);
    r.outputs["delta"] = fp_delta(x);
    r.text = print_fp_word(x) + "\n";
    return r;
  })->add_option("n", number, "index n >= 1")->required();

  CLI::App* en = app.add_subcommand("enum", "enumerations");
  en->fallthrough();
  en->require_subcommand(1);
  sub(en, "pals", "palindromes up to a length, shortlex", [&] {
    Report r;
    const std::size_t rank = g.rank ? *g.rank : 2;
    r.inputs["rank"] = rank;
    r.inputs["max_len"] = number;
    json list = json::array();
    for_each_palindrome(rank, number, [&](const Word& p) {
      list.push_back(print_word(p));
      r.text += print_word(p) + "\n";
    });
    r.outputs["count"] = list.size();
    r.outputs["words"] = std::move(list);
    return r;
  })->add_option("max_len", number, "maximum length")->required();
  sub(en, "prims", "primitive elements up to a length, shortlex", [&] {
    Report r;
    const std::size_t rank = g.rank ? *g.rank : 2;
    r.inputs["rank"] = rank;
    r.inputs["max_len"] = number;
    json list = json::array();
    for (const Word& p : enumerate_primitives(rank, number)) {
      list.push_back(print_word(p));
      r.text += print_word(p) + "\n";
    }
    r.outputs["count"] = list.size();
    r.outputs["words"] = std::move(list);
    return r;
  })->add_option("max_len", number, "maximum length")->required();

  {
    CLI::App* v = sub(&app, "verify", "run a verification suite, or all of them", [&] {
      Report r;
      r.inputs["suite"] = suite_name;
      std::vector<const verify::Suite*> chosen;
      if (suite_name == "all") {
        for (const auto& s : verify::suites()) chosen.push_back(&s);
      } else if (const auto* s = verify::find_suite(suite_name)) {
        chosen.push_back(s);
      } else {
        throw CLI::ValidationError("suite", "unknown suite '" + suite_name + "'");
      }
      json results = json::array();
      std::ostringstream s;
      bool all_pass = true;
      for (const auto* suite : chosen) {
        const auto res = verify::run_suite(*suite, g.seed);
        all_pass = all_pass && res.pass;
        s << (res.pass ? "PASS" : "FAIL") << " " << res.id << " " << res.name << " ("
          << static_cast<long>(res.seconds * 1000) << " ms) " << res.detail << "\n";
        results.push_back({{"id", res.id},
                           {"name", res.name},
                           {"pass", res.pass},
                           {"seconds", res.seconds},
                           {"limit_seconds", res.limit_seconds},
                           {"detail", res.detail}});
      }
      r.outputs["suites"] = std::move(results);
      r.outputs["pass"] = all_pass;
      r.text = s.str();
      r.exit_code = all_pass ? 0 : 1;
      return r;
    });
    v->add_option("suite", suite_name, "suite name or number, or 'all'")->required();
  }

  std::vector<std::string> argv_store{"palwidth"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (auto& a : argv_store) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (app.count("--rank")) g.rank = rank_value;
  k_given = app.count("-k") > 0;
  if (!action) {
    err << "error: no command\n";
    return 2;
  }

  const auto t0 = std::chrono::steady_clock::now();
  Report r;
  try {
    r = action();
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    // ParseError, RankError and PreconditionError
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const CertificateRefused& e) {
    err << "certificate refused: " << e.what() << "\n";
    return 1;
  }
  const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

  std::string payload;
  if (g.format == "json") {
    json rec;
    rec["schema"] = kSchema;
    rec["command"] = command;
    rec["inputs"] = r.inputs;
    rec["outputs"] = r.outputs;
    rec["certificates"] = r.certificates;
    rec["seed"] = g.seed;
    rec["version"] = kVersion;
    rec["wall_time_ms"] = ms;
    payload = rec.dump() + "\n";
  } else {
    payload = r.text;
  }
  if (!g.out_path.empty()) {
    std::ofstream f(g.out_path);
    if (!f) {
      err << "error: cannot open " << g.out_path << "\n";
      return 2;
    }
    f << payload;
  } else {
    out << payload;
  }
  return r.exit_code;
}

}  // namespace palwidth::cli

#endif  // PALWIDTH_TOOLS_CLI_HPP
