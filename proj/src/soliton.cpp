#include "acb/soliton.hpp"

#include "acb/errors.hpp"

namespace acb {

bool is_cosymplectic(const Tensor& F)
{
    return F.is_zero();
}

SasakiLikeResult is_sasaki_like(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    const Tensor np = nabla_phi(m, conn);
    SasakiLikeResult out{true, Tensor(d, Variance{1, 2})};
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar rhs = -s.g(x, y) * s.xi[k] - s.eta[y] * (x == k ? Scalar(1) : Scalar(0))
                    + Scalar(2) * s.eta[x] * s.eta[y] * s.xi[k];
                out.residual(x, y, k) = np(x, y, k) - rhs;
                if (!out.residual(x, y, k).is_zero())
                    out.holds = false;
            }
    return out;
}

TorseForming detect_torse_forming_xi(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Matrix nxi = nabla_xi(m, conn);
    const Matrix phi2 = m.structure.phi * m.structure.phi;

    Matrix a(d * d, 1);
    std::vector<Scalar> b(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            a(i * d + k, 0) = -phi2(k, i);
            b[i * d + k] = nxi(k, i);
        }
    const SolveOutcome sol = solve_linear_system(a, b);

    TorseForming out;
    if (sol.status == SolveStatus::inconsistent) {
        const std::size_t row = *sol.witness_row;
        out.witness = std::array<std::size_t, 2>{row % d, row / d};
        return out;
    }
    out.present = true;
    out.f = sol.solution.at(0);
    out.parallel = out.f.is_zero();
    return out;
}

bool check_f5_condition(const Manifold& m, const Connection& conn, const Scalar& f)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    const Tensor np = nabla_phi(m, conn);
    const Matrix gphi = s.g * s.phi; // g(x, φy)
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar rhs = -f * (gphi(x, y) * s.xi[k] + s.eta[y] * s.phi(k, x));
                if (!(np(x, y, k) - rhs).is_zero())
                    return false;
            }
    return true;
}

ConstantFit fit_constants(const Manifold& m, const Matrix& target, const Matrix& g_tilde)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    Matrix a(d * d, 3);
    std::vector<Scalar> b(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const std::size_t row = i * d + j;
            a(row, 0) = s.g(i, j);
            a(row, 1) = g_tilde(i, j);
            a(row, 2) = s.eta[i] * s.eta[j];
            b[row] = target(i, j);
        }
    ConstantFit fit;
    fit.outcome = solve_linear_system(a, b);
    if (fit.outcome.witness_row)
        fit.witness = std::array<std::size_t, 2>{*fit.outcome.witness_row / d, *fit.outcome.witness_row % d};
    return fit;
}

Matrix einstein_like_form(const Manifold& m, const Matrix& g_tilde, const Scalar& a, const Scalar& b, const Scalar& c)
{
    const auto& s = m.structure;
    Matrix out(m.dim(), m.dim());
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            out(i, j) = a * s.g(i, j) + b * g_tilde(i, j) + c * s.eta[i] * s.eta[j];
    return out;
}

EinsteinLikeFit fit_einstein_like(const Manifold& m, const Matrix& ricci, const Matrix& g_tilde)
{
    EinsteinLikeFit fit;
    static_cast<ConstantFit&>(fit) = fit_constants(m, ricci, g_tilde);
    if (!fit.ok())
        return fit;
    const Scalar dim(static_cast<long>(m.dim()));
    fit.tau_from_constants = dim * fit.a() + fit.b() + fit.c();
    fit.tau_consistent = fit.tau_from_constants == scalar_curvature(m, ricci);
    if (fit.b().is_zero() && fit.c().is_zero())
        fit.label = "Einstein";
    else if (fit.b().is_zero())
        fit.label = "eta-Einstein";
    else
        fit.label = "Einstein-like";
    return fit;
}

SolitonFit fit_ricci_like_soliton(const Manifold& m, const Matrix& lie_xi_g, const Matrix& ricci, const Matrix& g_tilde)
{
    const Scalar half = Scalar(Rational(1, 2));
    const Matrix target = Scalar(-1) * (half * lie_xi_g + ricci);
    SolitonFit fit;
    static_cast<ConstantFit&>(fit) = fit_constants(m, target, g_tilde);
    if (!fit.ok())
        return fit;

    // Div ξ = ½ tr_g L_ξ g
    const Matrix g_inv = inverse(m.structure.g);
    Scalar div_xi;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            div_xi += half * g_inv(i, j) * lie_xi_g(i, j);
    const Scalar dim(static_cast<long>(m.dim()));
    fit.tau_from_constants = -div_xi - dim * fit.lambda() - fit.mu() - fit.nu();
    fit.tau_consistent = fit.tau_from_constants == scalar_curvature(m, ricci);
    if (fit.mu().is_zero() && fit.nu().is_zero())
        fit.label = "Ricci soliton";
    else if (fit.mu().is_zero())
        fit.label = "eta-Ricci soliton";
    else
        fit.label = "Ricci-like soliton";
    return fit;
}

std::array<Scalar, 3> sasaki_soliton_constants(const Scalar& a, const Scalar& b, const Scalar& c)
{
    return {-a, Scalar(1) - b, Scalar(-1) - c};
}

EtaRicciBranches eta_ricci_from_tau(const Rational& tau, unsigned n)
{
    if (n == 0)
        throw DomainError("dimension 2n+1 requires n >= 1");
    if (sgn(tau) >= 0)
        throw DomainError("an Einstein manifold with torse-forming xi needs negative scalar curvature, got tau = "
                          + tau.get_str());
    EtaRicciBranches out;
    out.n = n;
    out.tau = tau;
    const Rational dim(2 * n + 1);
    out.f_squared = -tau / (Rational(2 * n) * dim);
    out.lambda_offset = -tau / dim;

    const Rational threshold = Rational(-1) - Rational(1, 2 * n);
    out.case_label = tau < threshold ? 1 : (tau == threshold ? 2 : 3);

    if (const auto root = rational_sqrt(out.f_squared)) {
        out.exact = true;
        for (int eps : {1, -1}) {
            const Rational f = eps * *root;
            out.branches.push_back({eps, f, out.lambda_offset - f, f});
        }
    }
    return out;
}

} // namespace acb
