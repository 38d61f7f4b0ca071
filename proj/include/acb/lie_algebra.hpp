#pragma once

#include "acb/polynomial.hpp"
#include "acb/scalar.hpp"
#include "acb/tensor.hpp"

#include <string>
#include <vector>

namespace acb {

using Vec = std::vector<Scalar>;

/// One failed identity, with the basis indices where it fails and the
/// non-zero residual left over.
struct ValidationIssue {
    std::string relation;
    std::vector<std::size_t> index;
    std::string residual;
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;

    bool ok() const { return issues.empty(); }
    void add(std::string relation, std::vector<std::size_t> index, const Scalar& residual)
    {
        issues.push_back({std::move(relation), std::move(index), residual.to_string()});
    }
    void append(const ValidationReport& other)
    {
        issues.insert(issues.end(), other.issues.begin(), other.issues.end());
    }
};

/// Lie algebra of left-invariant fields: structure(i, j, k) is the
/// coefficient of e_k in [e_i, e_j].
struct LieAlgebra {
    std::size_t dim = 0;
    ParameterSet params;
    Tensor structure;

    LieAlgebra() = default;
    /// All brackets zero.
    LieAlgebra(std::size_t dim, ParameterSet params);

    /// Sets [e_i, e_j] = Σ_k coefficients[k] e_k and [e_j, e_i] to its negative.
    void set_bracket(std::size_t i, std::size_t j, const Vec& coefficients);
    Vec bracket(std::size_t i, std::size_t j) const;
};

/// Antisymmetry c_ij^k = -c_ji^k and the componentwise Jacobi identity.
ValidationReport validate_lie_algebra(const LieAlgebra& alg);

} // namespace acb
