#pragma once

#include "acb/structure.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace acb {

/// Names accepted by builtin_example, in listing order.
const std::vector<std::string>& builtin_example_names();

/// "sasaki5": 5-dimensional Sasaki-like Lie group with parameters p, q.
/// "f5dim3": 3-dimensional Lie group with torse-forming Reeb field, parameter p.
/// "flat3": abelian 3-dimensional cosymplectic control case.
/// Throws UsageError for any other name.
Manifold builtin_example(std::string_view name);

} // namespace acb
