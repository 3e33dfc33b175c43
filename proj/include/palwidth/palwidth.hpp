#ifndef PALWIDTH_PALWIDTH_HPP
#define PALWIDTH_PALWIDTH_HPP

// Umbrella header.

#include "palwidth/automorphism.hpp"
#include "palwidth/bracket.hpp"
#include "palwidth/cyclic.hpp"
#include "palwidth/errors.hpp"
#include "palwidth/free_product.hpp"
#include "palwidth/palindromes.hpp"
#include "palwidth/primitivity.hpp"
#include "palwidth/quasihom.hpp"
#include "palwidth/text.hpp"
#include "palwidth/whitehead_aut.hpp"
#include "palwidth/whitehead_graph.hpp"
#include "palwidth/widths.hpp"
#include "palwidth/word.hpp"

#endif  // PALWIDTH_PALWIDTH_HPP
