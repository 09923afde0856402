#pragma once

#include <string>
#include <string_view>

#include "cotame/polynomial.hpp"

namespace cotame {

// Canonical ASCII syntax:
//   poly   := ['+'|'-'] term (('+'|'-') term)*
//   term   := coeff ('*' factor)* | factor ('*' factor)*
//   factor := var ('^' nat)?
//   var    := 't' | 'x' nat
//   coeff  := int ('/' posint)?
// Whitespace is ignored. Zero exponents and zero coefficients are accepted
// and normalized away.

/// Throws ParseError (with offset and expected tokens) on malformed input or
/// on a variable that does not exist in `space`.
Polynomial parse_poly(std::string_view text, VarSpace space);

/// Terms in descending lex order, reduced fractions, "0" for zero.
std::string format_poly(const Polynomial& p);

std::string format_rational_vector(std::span<const Rational> v);

}  // namespace cotame
