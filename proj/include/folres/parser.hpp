#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "folres/polynomial.hpp"

namespace folres {

/// Parses a polynomial over the declared variables.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary ('*' unary)*
///   unary   := ('+' | '-') unary | power
///   power   := primary ('^' integer)?
///   primary := integer ('/' integer)? | name | '(' expr ')'
///
/// Multiplication must be explicit. Errors: SyntaxError (with the 1-based column),
/// UnknownVariable.
Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables);

}  // namespace folres
