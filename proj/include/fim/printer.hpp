#pragma once

#include <string>

#include "fim/syntax.hpp"

namespace fim {

/// Renders in the ASCII concrete grammar accepted by parse_formula. Closed
/// numerals S(...S(0)...) print as decimal literals; parentheses are emitted
/// only where precedence or quantifier scope needs them.
std::string print_formula(const Formula& f);
std::string print_term(const Term& t);
std::string print_functor(const Functor& f);

}  // namespace fim
