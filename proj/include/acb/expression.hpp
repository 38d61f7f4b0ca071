#pragma once

#include "acb/scalar.hpp"

#include <string_view>

namespace acb {

/// Parses a polynomial expression over `params`.
///
/// Grammar: integer and rational literals (`-3`, `1/2`), parameter names
/// matching `[a-zA-Z][a-zA-Z0-9_]*`, binary `+ - *`, `^` with a non-negative
/// integer exponent, unary minus and parentheses. `/` is only legal inside a
/// numeric literal. Throws ParseError with the column of the offending token.
Scalar parse_expression(std::string_view text, const ParameterSet& params);

} // namespace acb
