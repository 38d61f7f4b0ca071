#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>

namespace acb {

/// Arbitrary-precision rational number, always kept in lowest terms.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string to_string(const Rational& r)
{
    return r.get_str();
}

/// Parses `-3`, `7` or `1/2`. Throws ParseError on anything else.
Rational parse_rational(std::string_view text);

/// Exact square root when `r` is the square of a rational, nothing otherwise.
std::optional<Rational> rational_sqrt(const Rational& r);

} // namespace acb
