#pragma once

#include "acb/structure.hpp"
#include "acb/tensor.hpp"

namespace acb {

// Conventions:
//   R(x,y)z = ∇_x∇_y z - ∇_y∇_x z - ∇_[x,y] z,  R(x,y,z,w) = g(R(x,y)z, w)
//   ρ(y,z)  = g^{il} R(e_i, y, z, e_l),          τ = g^{ij} ρ_ij
// All fields are left-invariant, so covariant derivatives of constant-component
// tensors reduce to algebra on Γ.

/// gamma(i, j, k) = Γ_ij^k, the e_k component of ∇_{e_i} e_j.
struct Connection {
    Tensor gamma;
};

/// Koszul formula 2g(∇_x y, z) = g([x,y],z) - g([y,z],x) + g([z,x],y).
Connection levi_civita(const Manifold& m);

/// Torsion-free Γ_ij^k - Γ_ji^k = c_ij^k and g(∇_i e_j, e_k) + g(e_j, ∇_i e_k) = 0.
ValidationReport check_connection(const Manifold& m, const Connection& conn);

/// (0,4) tensor R(i,j,k,l) = R(e_i,e_j,e_k,e_l).
Tensor riemann(const Manifold& m, const Connection& conn);

/// Symmetries R_ijkl = -R_jikl = -R_ijlk = R_klij and the first Bianchi identity.
ValidationReport check_riemann_symmetries(const Tensor& riemann);

Matrix ricci(const Manifold& m, const Tensor& riemann);
Scalar scalar_curvature(const Manifold& m, const Matrix& ricci);

/// k(x,y) = R(x,y,y,x) / (g(x,x)g(y,y) - g(x,y)^2). Throws DomainError when
/// the plane is degenerate, i.e. the denominator is the zero Scalar.
Scalar sectional_curvature(const Manifold& m, const Tensor& riemann, const Vec& x, const Vec& y);
Scalar sectional_curvature(const Manifold& m, const Tensor& riemann, std::size_t x, std::size_t y);

/// R(x,y)z as a vector, raised with the given g^{-1}.
Vec curvature_operator(const Matrix& g_inverse, const Tensor& riemann, const Vec& x, const Vec& y, const Vec& z);

/// R(x,y,z,w) for arbitrary vectors.
Scalar riemann_at(const Tensor& riemann, const Vec& x, const Vec& y, const Vec& z, const Vec& w);

/// nabla_xi(k, i) is the e_k component of ∇_{e_i} ξ, i.e. the matrix of x -> ∇_x ξ.
Matrix nabla_xi(const Manifold& m, const Connection& conn);

/// (L_ξ g)(x,y) = g(∇_x ξ, y) + g(x, ∇_y ξ)
Matrix lie_derivative_g_xi(const Manifold& m, const Connection& conn);

/// nabla_phi(i, j, k) is the e_k component of (∇_{e_i} φ) e_j.
Tensor nabla_phi(const Manifold& m, const Connection& conn);

/// F(i,j,k) = g((∇_{e_i} φ) e_j, e_k)
Tensor fundamental_tensor(const Manifold& m, const Connection& conn);

/// Identities every F must satisfy: F(x,y,z) = F(x,z,y),
/// F(x,y,z) = F(x,φy,φz) + η(y)F(x,ξ,z) + η(z)F(x,y,ξ) and
/// F(x,φy,ξ) = g(∇_x ξ, y).
ValidationReport check_fundamental_identities(const Manifold& m, const Connection& conn, const Tensor& F);

struct LeeForms {
    Vec theta;
    Vec theta_star;
    Vec omega;
};

/// Traces over the contact distribution ker η (inverse metric g^{ij} - ξ^iξ^j):
/// θ(z) = g^{ij}F(e_i,e_j,z), θ*(z) = g^{ij}F(e_i,φe_j,z); ω(z) = F(ξ,ξ,z).
LeeForms lee_forms(const Manifold& m, const Tensor& F);

/// ω(ξ) = 0 and θ*∘φ = -θ∘φ².
ValidationReport check_lee_identities(const Manifold& m, const LeeForms& forms);

/// (∇_x ρ)(y,z) = -ρ(∇_x y, z) - ρ(y, ∇_x z), stored at (x, y, z).
Tensor nabla_ricci(const Manifold& m, const Connection& conn, const Matrix& ricci);

struct Divergences {
    Vec div_rho;      ///< (Div ρ)(z) = g^{ij} (∇_{e_i} ρ)(e_j, z)
    Vec div_star_rho; ///< same with g̃^{ij}
    Scalar div_rho_xi;
    Scalar div_star_rho_xi;
    Scalar div_xi; ///< g^{ij} g(∇_{e_i} ξ, e_j)
};

Divergences divergences(const Manifold& m, const Connection& conn, const Tensor& nabla_rho);

/// Everything downstream code needs, computed once per manifold.
struct CurvaturePack {
    Matrix g_inverse;
    Matrix g_tilde;
    Matrix g_tilde_inverse;
    Connection connection;
    Tensor riemann;
    Matrix ricci;
    Scalar tau;
    Matrix nabla_xi;
    Matrix lie_xi_g;
    Tensor nabla_phi;
    Tensor F;
    LeeForms lee;
    Tensor nabla_ricci;
    Divergences div;
};

CurvaturePack compute_curvature(const Manifold& m);

} // namespace acb
