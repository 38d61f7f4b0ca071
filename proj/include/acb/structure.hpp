#pragma once

#include "acb/lie_algebra.hpp"
#include "acb/linear_algebra.hpp"

#include <optional>

namespace acb {

/// Almost contact B-metric data in the left-invariant frame {e_0, ..., e_2n}.
/// phi(k, j) is the e_k component of φ e_j.
struct AcbStructure {
    Matrix phi;
    Vec xi;
    Vec eta;
    Matrix g;
};

struct Manifold {
    ParameterSet params;
    LieAlgebra algebra;
    AcbStructure structure;

    std::size_t dim() const { return algebra.dim; }
    /// dim = 2n + 1
    std::size_t n() const { return (algebra.dim - 1) / 2; }
};

Vec basis_vector(std::size_t dim, std::size_t i);
Vec apply_matrix(const Matrix& m, const Vec& v);
Vec column(const Matrix& m, std::size_t c);
/// b(x, y) = x^T b y
Scalar bilinear(const Matrix& b, const Vec& x, const Vec& y);
Scalar pair(const Vec& covector, const Vec& v);
/// g(·, ξ)
Vec lower_xi(const AcbStructure& s);

/// Checks every relation of the structure: φξ = 0, φ² = -Id + η⊗ξ, η∘φ = 0,
/// η(ξ) = 1, g(φx,φy) = -g(x,y) + η(x)η(y), g symmetric and η = g(·,ξ).
/// Throws StructuralError for a dimension that is not 2n+1 with n >= 1,
/// mismatched shapes or a singular g.
ValidationReport validate_structure(const Manifold& m);

/// Lie algebra and structure checks together.
ValidationReport validate_manifold(const Manifold& m);

/// g̃(x,y) = g(x,φy) + η(x)η(y)
Matrix associated_metric(const Manifold& m);

/// Inverse of g̃ by the closed form g̃^{ij} = -φ^i_k g^{kj} + ξ^i ξ^j,
/// cross-checked against the defining property g̃ g̃^{-1} = Id.
Matrix g_tilde_inverse(const Manifold& m);

/// Numeric signature check (p, q) = (n+1, n) of g; only meaningful when
/// every entry of g is parameter-free.
struct SignatureCheck {
    Inertia g;
    Inertia g_tilde;
    bool g_ok = false;
    bool g_tilde_ok = false;
};
SignatureCheck check_signature(const Manifold& m);

/// The same manifold with every parameter replaced by its value.
Manifold substitute(const Manifold& m, const Assignment& assignment);

} // namespace acb
