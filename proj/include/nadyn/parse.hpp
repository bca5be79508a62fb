#pragma once

#include <string_view>

#include "nadyn/polynomial.hpp"

namespace nadyn {

// Grammar (whitespace insignificant, repeated powers summed):
//   expr  := ['+'|'-'] term (('+'|'-') term)*
//   term  := coeff | coeff ['*'] var | var
//   var   := 'X' ['^' nat]
//   coeff := int ['/' nat]
// Throws ParseError carrying the byte offset of the problem.
RationalPoly parse_polynomial(std::string_view text);

}  // namespace nadyn
