#pragma once

#include "acb/curvature.hpp"
#include "acb/linear_algebra.hpp"

#include <array>
#include <optional>
#include <string>

namespace acb {

/// F = 0
bool is_cosymplectic(const Tensor& F);

struct SasakiLikeResult {
    bool holds = false;
    /// (∇_{e_x}φ)e_y - (-g(x,y)ξ - η(y)x + 2η(x)η(y)ξ), component s at (x, y, s).
    Tensor residual;
};

SasakiLikeResult is_sasaki_like(const Manifold& m, const Connection& conn);

/// ∇_x ξ = -f φ² x for a single Scalar f.
struct TorseForming {
    bool present = false;
    Scalar f;
    /// f is identically zero: ξ is parallel.
    bool parallel = false;
    /// When absent: the component (k, i) of ∇_{e_i}ξ that contradicts the fit.
    std::optional<std::array<std::size_t, 2>> witness;
};

TorseForming detect_torse_forming_xi(const Manifold& m, const Connection& conn);

/// (∇_x φ)y = -f{g(x,φy)ξ + η(y)φx} componentwise.
bool check_f5_condition(const Manifold& m, const Connection& conn, const Scalar& f);

/// A fitted triple of constants for a bilinear form expanded in the basis
/// {g, g̃, η⊗η}.
struct ConstantFit {
    SolveOutcome outcome;
    /// Component (i, j) of the first contradicting equation.
    std::optional<std::array<std::size_t, 2>> witness;

    bool ok() const { return outcome.status == SolveStatus::unique; }
    const Scalar& operator[](std::size_t i) const { return outcome.solution.at(i); }
};

/// ρ = a g + b g̃ + c η⊗η
struct EinsteinLikeFit : ConstantFit {
    /// (2n+1)a + b + c, compared with the directly contracted τ.
    Scalar tau_from_constants;
    bool tau_consistent = false;
    /// "Einstein" (b = c = 0), "eta-Einstein" (b = 0) or "Einstein-like".
    std::string label;

    const Scalar& a() const { return (*this)[0]; }
    const Scalar& b() const { return (*this)[1]; }
    const Scalar& c() const { return (*this)[2]; }
};

/// ½ L_ξ g + ρ + λ g + μ g̃ + ν η⊗η = 0
struct SolitonFit : ConstantFit {
    /// -Div ξ - (2n+1)λ - μ - ν, compared with τ.
    Scalar tau_from_constants;
    bool tau_consistent = false;
    /// "Ricci soliton" (μ = ν = 0), "eta-Ricci soliton" (μ = 0) or "Ricci-like soliton".
    std::string label;

    const Scalar& lambda() const { return (*this)[0]; }
    const Scalar& mu() const { return (*this)[1]; }
    const Scalar& nu() const { return (*this)[2]; }
};

/// Solves the (2n+1)^2 x 3 system target = x0 g + x1 g̃ + x2 η⊗η exactly.
ConstantFit fit_constants(const Manifold& m, const Matrix& target, const Matrix& g_tilde);

EinsteinLikeFit fit_einstein_like(const Manifold& m, const Matrix& ricci, const Matrix& g_tilde);
SolitonFit fit_ricci_like_soliton(const Manifold& m, const Matrix& lie_xi_g, const Matrix& ricci, const Matrix& g_tilde);

/// a g + b g̃ + c η⊗η
Matrix einstein_like_form(const Manifold& m, const Matrix& g_tilde, const Scalar& a, const Scalar& b, const Scalar& c);

/// Soliton constants a Sasaki-like manifold with Einstein-like constants
/// (a, b, c) must carry: (-a, 1 - b, -1 - c).
std::array<Scalar, 3> sasaki_soliton_constants(const Scalar& a, const Scalar& b, const Scalar& c);

/// η-Ricci soliton constants of an Einstein manifold with torse-forming ξ
/// and negative scalar curvature τ, one branch per sign ε of f.
struct EtaRicciBranches {
    unsigned n = 0;
    Rational tau;
    /// f² = -τ / (2n(2n+1))
    Rational f_squared;
    /// λ = lambda_offset - f with lambda_offset = -τ/(2n+1); ν = f.
    Rational lambda_offset;
    /// f² is the square of a rational, so the branches are exact.
    bool exact = false;

    struct Branch {
        int epsilon;
        Rational f;
        Rational lambda;
        Rational nu;
    };
    /// ε = +1 then ε = -1; empty when not exact.
    std::vector<Branch> branches;

    /// 1: τ < -1 - 1/(2n); 2: τ = -1 - 1/(2n); 3: -1 - 1/(2n) < τ < 0.
    int case_label = 0;
};

/// Throws DomainError when τ >= 0 or n == 0.
EtaRicciBranches eta_ricci_from_tau(const Rational& tau, unsigned n);

} // namespace acb
