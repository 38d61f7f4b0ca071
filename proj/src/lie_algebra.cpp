#include "acb/lie_algebra.hpp"

#include "acb/errors.hpp"

namespace acb {

LieAlgebra::LieAlgebra(std::size_t dim_, ParameterSet params_)
    : dim(dim_)
    , params(std::move(params_))
    , structure(dim_, Variance{1, 2})
{
}

void LieAlgebra::set_bracket(std::size_t i, std::size_t j, const Vec& coefficients)
{
    if (i >= dim || j >= dim || coefficients.size() != dim)
        throw StructuralError("bracket index or length out of range");
    for (std::size_t k = 0; k < dim; ++k) {
        structure(i, j, k) = coefficients[k];
        structure(j, i, k) = -coefficients[k];
    }
}

Vec LieAlgebra::bracket(std::size_t i, std::size_t j) const
{
    Vec out(dim);
    for (std::size_t k = 0; k < dim; ++k)
        out[k] = structure(i, j, k);
    return out;
}

ValidationReport validate_lie_algebra(const LieAlgebra& alg)
{
    const std::size_t n = alg.dim;
    if (alg.structure.dim() != n || alg.structure.rank() != 3)
        throw StructuralError("structure constants must have shape dim x dim x dim");
    const Tensor& c = alg.structure;

    ValidationReport report;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                const Scalar r = c(i, j, k) + c(j, i, k);
                if (!r.is_zero())
                    report.add("antisymmetry [e_i,e_j] = -[e_j,e_i]", {i, j, k}, r);
            }

    // [e_a,[e_b,e_d]] = Σ_l c_bd^l c_al^m e_m
    const auto nested = [&](std::size_t a, std::size_t b, std::size_t d, std::size_t m) {
        Scalar s;
        for (std::size_t l = 0; l < n; ++l)
            if (!c(b, d, l).is_zero() && !c(a, l, m).is_zero())
                s += c(b, d, l) * c(a, l, m);
        return s;
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t k = j + 1; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m) {
                    const Scalar r = nested(i, j, k, m) + nested(j, k, i, m) + nested(k, i, j, m);
                    if (!r.is_zero())
                        report.add("Jacobi identity", {i, j, k, m}, r);
                }
    return report;
}

} // namespace acb
