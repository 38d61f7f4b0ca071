#pragma once

#include "acb/errors.hpp"
#include "acb/structure.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace acb {

/// Raised when a parsed manifold fails validation; carries every witness.
class InvalidManifold : public StructuralError {
public:
    explicit InvalidManifold(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    ValidationReport report_;
};

/// Reads a manifold document without validating it.
///
/// {
///   "dim": 3, "params": ["p"],
///   "brackets": [{"i": 0, "j": 1, "coefficients": {"1": "p"}}],
///   "metric": [["1","0","0"],["0","1","0"],["0","0","-1"]],
///   "phi":    [["0","0","0"],["0","0","-1"],["0","1","0"]],
///   "xi": ["1","0","0"],
///   "eta": ["1","0","0"]
/// }
///
/// phi[k][j] is the e_k component of φe_j. The metric may be given as its
/// upper triangle (row i lists columns i..dim-1). A bracket entry (i, j)
/// also defines (j, i) unless that pair is listed too. Missing "eta" is
/// derived as g(·, ξ). Entries are expression strings or integers.
/// Throws ParseError naming the offending field.
Manifold parse_document(std::string_view text);

/// parse_document followed by full validation; throws InvalidManifold.
Manifold parse_manifold(std::string_view text);

/// Canonical document for a manifold (full metric, brackets with i < j).
nlohmann::ordered_json to_document(const Manifold& m);
std::string serialize_manifold(const Manifold& m);

} // namespace acb
