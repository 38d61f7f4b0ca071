#pragma once

#include "acb/expression.hpp"
#include "acb/structure.hpp"

#include <string_view>

namespace acb::test {

inline Scalar expr(const ParameterSet& params, std::string_view text)
{
    return parse_expression(text, params);
}

inline Scalar expr(const Manifold& m, std::string_view text)
{
    return parse_expression(text, m.params);
}

} // namespace acb::test
