#include "acb/curvature.hpp"

#include "acb/errors.hpp"

namespace acb {

Connection levi_civita(const Manifold& m)
{
    const std::size_t d = m.dim();
    const Tensor& c = m.algebra.structure;
    const Matrix& g = m.structure.g;
    const Matrix g_inv = inverse(g);

    // g([e_a,e_b], e_k)
    Tensor lowered_bracket(d, Variance{0, 3});
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar s;
                for (std::size_t l = 0; l < d; ++l)
                    if (!c(a, b, l).is_zero() && !g(l, k).is_zero())
                        s += c(a, b, l) * g(l, k);
                lowered_bracket(a, b, k) = s;
            }

    const Scalar half = Scalar(Rational(1, 2));
    Tensor koszul(d, Variance{0, 3});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                koszul(i, j, k) = half * (lowered_bracket(i, j, k) - lowered_bracket(j, k, i) + lowered_bracket(k, i, j));

    Connection conn{Tensor(d, Variance{1, 2})};
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar s;
                for (std::size_t l = 0; l < d; ++l)
                    if (!g_inv(k, l).is_zero() && !koszul(i, j, l).is_zero())
                        s += g_inv(k, l) * koszul(i, j, l);
                conn.gamma(i, j, k) = s;
            }
    return conn;
}

ValidationReport check_connection(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Tensor& c = m.algebra.structure;
    const Tensor& gam = conn.gamma;
    const Matrix& g = m.structure.g;
    ValidationReport report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                const Scalar torsion = gam(i, j, k) - gam(j, i, k) - c(i, j, k);
                if (!torsion.is_zero())
                    report.add("torsion-free", {i, j, k}, torsion);
                Scalar metric;
                for (std::size_t l = 0; l < d; ++l)
                    metric += gam(i, j, l) * g(l, k) + g(j, l) * gam(i, k, l);
                if (!metric.is_zero())
                    report.add("metric-compatible", {i, j, k}, metric);
            }
    return report;
}

Tensor riemann(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Tensor& c = m.algebra.structure;
    const Tensor& gam = conn.gamma;
    const Matrix& g = m.structure.g;

    Tensor up(d, Variance{1, 3}); // up(i,j,k,s) = e_s component of R(e_i,e_j)e_k
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t s = 0; s < d; ++s) {
                    Scalar v;
                    for (std::size_t l = 0; l < d; ++l) {
                        if (!gam(j, k, l).is_zero() && !gam(i, l, s).is_zero())
                            v += gam(j, k, l) * gam(i, l, s);
                        if (!gam(i, k, l).is_zero() && !gam(j, l, s).is_zero())
                            v -= gam(i, k, l) * gam(j, l, s);
                        if (!c(i, j, l).is_zero() && !gam(l, k, s).is_zero())
                            v -= c(i, j, l) * gam(l, k, s);
                    }
                    up(i, j, k, s) = v;
                }

    Tensor r(d, Variance{0, 4});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    Scalar v;
                    for (std::size_t s = 0; s < d; ++s)
                        if (!up(i, j, k, s).is_zero() && !g(s, l).is_zero())
                            v += up(i, j, k, s) * g(s, l);
                    r(i, j, k, l) = v;
                }
    return r;
}

ValidationReport check_riemann_symmetries(const Tensor& r)
{
    const std::size_t d = r.dim();
    ValidationReport report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                for (std::size_t l = 0; l < d; ++l) {
                    if (const Scalar x = r(i, j, k, l) + r(j, i, k, l); !x.is_zero())
                        report.add("R_ijkl = -R_jikl", {i, j, k, l}, x);
                    if (const Scalar x = r(i, j, k, l) + r(i, j, l, k); !x.is_zero())
                        report.add("R_ijkl = -R_ijlk", {i, j, k, l}, x);
                    if (const Scalar x = r(i, j, k, l) - r(k, l, i, j); !x.is_zero())
                        report.add("R_ijkl = R_klij", {i, j, k, l}, x);
                    if (const Scalar x = r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l); !x.is_zero())
                        report.add("first Bianchi identity", {i, j, k, l}, x);
                }
    return report;
}

Matrix ricci(const Manifold& m, const Tensor& r)
{
    const std::size_t d = m.dim();
    const Matrix g_inv = inverse(m.structure.g);
    Matrix rho(d, d);
    for (std::size_t y = 0; y < d; ++y)
        for (std::size_t z = 0; z < d; ++z) {
            Scalar s;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t l = 0; l < d; ++l)
                    if (!g_inv(i, l).is_zero() && !r(i, y, z, l).is_zero())
                        s += g_inv(i, l) * r(i, y, z, l);
            rho(y, z) = s;
        }
    return rho;
}

Scalar scalar_curvature(const Manifold& m, const Matrix& rho)
{
    const Matrix g_inv = inverse(m.structure.g);
    Scalar tau;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            if (!g_inv(i, j).is_zero())
                tau += g_inv(i, j) * rho(i, j);
    return tau;
}

Scalar riemann_at(const Tensor& r, const Vec& x, const Vec& y, const Vec& z, const Vec& w)
{
    const std::size_t d = r.dim();
    Scalar s;
    for (std::size_t i = 0; i < d; ++i) {
        if (x[i].is_zero())
            continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (y[j].is_zero())
                continue;
            for (std::size_t k = 0; k < d; ++k) {
                if (z[k].is_zero())
                    continue;
                for (std::size_t l = 0; l < d; ++l)
                    if (!w[l].is_zero() && !r(i, j, k, l).is_zero())
                        s += x[i] * y[j] * z[k] * w[l] * r(i, j, k, l);
            }
        }
    }
    return s;
}

Scalar sectional_curvature(const Manifold& m, const Tensor& r, const Vec& x, const Vec& y)
{
    const Matrix& g = m.structure.g;
    const Scalar gxy = bilinear(g, x, y);
    const Scalar area = bilinear(g, x, x) * bilinear(g, y, y) - gxy * gxy;
    if (area.is_zero())
        throw DomainError("sectional curvature of a degenerate plane");
    return riemann_at(r, x, y, y, x) / area;
}

Scalar sectional_curvature(const Manifold& m, const Tensor& r, std::size_t x, std::size_t y)
{
    return sectional_curvature(m, r, basis_vector(m.dim(), x), basis_vector(m.dim(), y));
}

Vec curvature_operator(const Matrix& g_inverse, const Tensor& r, const Vec& x, const Vec& y, const Vec& z)
{
    const std::size_t d = r.dim();
    Vec lowered(d);
    for (std::size_t l = 0; l < d; ++l)
        lowered[l] = riemann_at(r, x, y, z, basis_vector(d, l));
    return apply_matrix(g_inverse, lowered);
}

Matrix nabla_xi(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Vec& xi = m.structure.xi;
    Matrix out(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t k = 0; k < d; ++k) {
            Scalar s;
            for (std::size_t j = 0; j < d; ++j)
                if (!xi[j].is_zero() && !conn.gamma(i, j, k).is_zero())
                    s += xi[j] * conn.gamma(i, j, k);
            out(k, i) = s;
        }
    return out;
}

Matrix lie_derivative_g_xi(const Manifold& m, const Connection& conn)
{
    const Matrix n = nabla_xi(m, conn);
    const Matrix& g = m.structure.g;
    return n.transposed() * g + g * n;
}

Tensor nabla_phi(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Matrix& phi = m.structure.phi;
    const Tensor& gam = conn.gamma;
    Tensor out(d, Variance{1, 2});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t s = 0; s < d; ++s) {
                Scalar v;
                for (std::size_t l = 0; l < d; ++l) {
                    if (!phi(l, j).is_zero() && !gam(i, l, s).is_zero())
                        v += phi(l, j) * gam(i, l, s);
                    if (!gam(i, j, l).is_zero() && !phi(s, l).is_zero())
                        v -= gam(i, j, l) * phi(s, l);
                }
                out(i, j, s) = v;
            }
    return out;
}

Tensor fundamental_tensor(const Manifold& m, const Connection& conn)
{
    const std::size_t d = m.dim();
    const Tensor np = nabla_phi(m, conn);
    const Matrix& g = m.structure.g;
    Tensor F(d, Variance{0, 3});
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Scalar v;
                for (std::size_t s = 0; s < d; ++s)
                    if (!np(i, j, s).is_zero() && !g(s, k).is_zero())
                        v += np(i, j, s) * g(s, k);
                F(i, j, k) = v;
            }
    return F;
}

namespace {

/// F(e_x, v, w) extended bilinearly in the last two slots.
Scalar f_at(const Tensor& F, std::size_t x, const Vec& v, const Vec& w)
{
    Scalar s;
    for (std::size_t a = 0; a < v.size(); ++a) {
        if (v[a].is_zero())
            continue;
        for (std::size_t b = 0; b < w.size(); ++b)
            if (!w[b].is_zero() && !F(x, a, b).is_zero())
                s += v[a] * w[b] * F(x, a, b);
    }
    return s;
}

} // namespace

ValidationReport check_fundamental_identities(const Manifold& m, const Connection& conn, const Tensor& F)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    const Matrix nxi = nabla_xi(m, conn);
    ValidationReport report;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Vec ej = basis_vector(d, j);
            const Vec phi_ej = column(s.phi, j);
            for (std::size_t k = 0; k < d; ++k) {
                const Vec ek = basis_vector(d, k);
                if (const Scalar r = F(i, j, k) - F(i, k, j); !r.is_zero())
                    report.add("F(x,y,z) = F(x,z,y)", {i, j, k}, r);
                const Scalar rhs = f_at(F, i, phi_ej, column(s.phi, k)) + s.eta[j] * f_at(F, i, s.xi, ek)
                    + s.eta[k] * f_at(F, i, ej, s.xi);
                if (const Scalar r = F(i, j, k) - rhs; !r.is_zero())
                    report.add("F(x,y,z) = F(x,phi y,phi z) + eta(y)F(x,xi,z) + eta(z)F(x,y,xi)", {i, j, k}, r);
            }
            const Scalar r = f_at(F, i, phi_ej, s.xi) - bilinear(s.g, column(nxi, i), ej);
            if (!r.is_zero())
                report.add("F(x,phi y,xi) = g(nabla_x xi, y)", {i, j}, r);
        }
    return report;
}

LeeForms lee_forms(const Manifold& m, const Tensor& F)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    // g^{-1} - ξ⊗ξ is the inverse metric of ker η
    Matrix h_inv = inverse(s.g);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            h_inv(i, j) -= s.xi[i] * s.xi[j];
    LeeForms out{Vec(d), Vec(d), Vec(d)};
    for (std::size_t z = 0; z < d; ++z) {
        const Vec ez = basis_vector(d, z);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (h_inv(i, j).is_zero())
                    continue;
                out.theta[z] += h_inv(i, j) * F(i, j, z);
                out.theta_star[z] += h_inv(i, j) * f_at(F, i, column(s.phi, j), ez);
            }
        for (std::size_t a = 0; a < d; ++a)
            if (!s.xi[a].is_zero())
                out.omega[z] += s.xi[a] * f_at(F, a, s.xi, ez);
    }
    return out;
}

ValidationReport check_lee_identities(const Manifold& m, const LeeForms& forms)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    ValidationReport report;
    if (const Scalar r = pair(forms.omega, s.xi); !r.is_zero())
        report.add("omega(xi) = 0", {}, r);
    const Matrix phi2 = s.phi * s.phi;
    for (std::size_t j = 0; j < d; ++j) {
        const Scalar r = pair(forms.theta_star, column(s.phi, j)) + pair(forms.theta, column(phi2, j));
        if (!r.is_zero())
            report.add("theta* o phi = -theta o phi^2", {j}, r);
    }
    return report;
}

Tensor nabla_ricci(const Manifold& m, const Connection& conn, const Matrix& rho)
{
    const std::size_t d = m.dim();
    const Tensor& gam = conn.gamma;
    Tensor out(d, Variance{0, 3});
    for (std::size_t x = 0; x < d; ++x)
        for (std::size_t y = 0; y < d; ++y)
            for (std::size_t z = 0; z < d; ++z) {
                Scalar v;
                for (std::size_t l = 0; l < d; ++l) {
                    if (!gam(x, y, l).is_zero())
                        v -= gam(x, y, l) * rho(l, z);
                    if (!gam(x, z, l).is_zero())
                        v -= gam(x, z, l) * rho(y, l);
                }
                out(x, y, z) = v;
            }
    return out;
}

Divergences divergences(const Manifold& m, const Connection& conn, const Tensor& nabla_rho)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    const Matrix g_inv = inverse(s.g);
    const Matrix gt_inv = g_tilde_inverse(m);
    Divergences out{Vec(d), Vec(d), Scalar(), Scalar(), Scalar()};
    for (std::size_t z = 0; z < d; ++z)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                if (!g_inv(i, j).is_zero())
                    out.div_rho[z] += g_inv(i, j) * nabla_rho(i, j, z);
                if (!gt_inv(i, j).is_zero())
                    out.div_star_rho[z] += gt_inv(i, j) * nabla_rho(i, j, z);
            }
    out.div_rho_xi = pair(out.div_rho, s.xi);
    out.div_star_rho_xi = pair(out.div_star_rho, s.xi);

    const Matrix nxi = nabla_xi(m, conn);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            if (!g_inv(i, j).is_zero())
                out.div_xi += g_inv(i, j) * bilinear(s.g, column(nxi, i), basis_vector(d, j));
    return out;
}

CurvaturePack compute_curvature(const Manifold& m)
{
    CurvaturePack pack;
    pack.g_inverse = inverse(m.structure.g);
    pack.g_tilde = associated_metric(m);
    pack.g_tilde_inverse = g_tilde_inverse(m);
    pack.connection = levi_civita(m);
    pack.riemann = riemann(m, pack.connection);
    pack.ricci = ricci(m, pack.riemann);
    pack.tau = scalar_curvature(m, pack.ricci);
    pack.nabla_xi = nabla_xi(m, pack.connection);
    pack.lie_xi_g = lie_derivative_g_xi(m, pack.connection);
    pack.nabla_phi = nabla_phi(m, pack.connection);
    pack.F = fundamental_tensor(m, pack.connection);
    pack.lee = lee_forms(m, pack.F);
    pack.nabla_ricci = nabla_ricci(m, pack.connection, pack.ricci);
    pack.div = divergences(m, pack.connection, pack.nabla_ricci);
    return pack;
}

} // namespace acb
