// A short walk through the library.

#include <iostream>

#include "palwidth/palwidth.hpp"

using namespace palwidth;

int main() {
  // Words: parse, multiply, print.
  const Word w = parse_word("x1^2 x2^-3 x3^4 x2^-3 x1^2", 3);
  std::cout << "w = " << print_word(w) << ", delta " << delta(w) << "\n";

  // The witness family needs ever more palindromes.
  for (std::size_t n : {1, 7, 13, 25}) {
    const Word v = pal_witness(n);
    std::cout << "pal_witness(" << n << "): delta " << delta(v) << ", at least "
              << pal_lower_bound_from_delta(v) << " palindromes\n";
  }

  // Bounded palindromic length with a verified witness.
  const Word ab = parse_word("ab", 2);
  const PalBracket b = pal_length_bounded(ab, 3);
  std::cout << "pal length of ab in [" << b.lower << ", " << *b.upper << "]:";
  for (const Word& f : b.witness) std::cout << " [" << print_word(f) << "]";
  std::cout << "\n";

  // A primitive element of F_2 as a product of two palindromes.
  const Word a = parse_word("x1 x2^2 x1 x2", 2);
  if (is_primitive(a)) {
    const auto [p1, p2] = prim_decompose_two_pals(a);
    std::cout << print_word(a) << " = [" << print_word(p1) << "] [" << print_word(p2) << "]\n";
  }

  // Whitehead graph of u(2) and the u^(2k) certificate.
  const Word u = u_word(2);
  std::cout << emit_dot(whitehead_graph(u));
  const HamPowerCert c = ham_power_cert(2, 3);
  for (const auto& line : c.transcript) std::cout << line << "\n";
  std::cout << "u(2)^6 needs at least " << c.lower_bound() << " primitive factors\n";
}
