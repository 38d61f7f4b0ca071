#include "acb/rational.hpp"

#include "acb/errors.hpp"

#include <cctype>

namespace acb {

namespace {

bool is_integer_literal(std::string_view s)
{
    if (!s.empty() && (s.front() == '-' || s.front() == '+'))
        s.remove_prefix(1);
    if (s.empty())
        return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            return false;
    return true;
}

Integer parse_integer(std::string_view s)
{
    if (!s.empty() && s.front() == '+')
        s.remove_prefix(1);
    return Integer(std::string(s), 10);
}

} // namespace

Rational parse_rational(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
    if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+')
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    Rational r(parse_integer(num), parse_integer(den));
    if (r.get_den() == 0)
        throw ParseError("zero denominator in '" + std::string(text) + "'");
    r.canonicalize();
    return r;
}

std::optional<Rational> rational_sqrt(const Rational& r)
{
    if (sgn(r) < 0)
        return std::nullopt;
    const Integer& num = r.get_num();
    const Integer& den = r.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Rational root(sqrt(num), sqrt(den));
    root.canonicalize();
    return root;
}

} // namespace acb
