#include "acb/structure.hpp"

#include "acb/errors.hpp"

namespace acb {

Vec basis_vector(std::size_t dim, std::size_t i)
{
    Vec v(dim);
    v[i] = Scalar(1);
    return v;
}

Vec apply_matrix(const Matrix& m, const Vec& v)
{
    Vec out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (!m(r, c).is_zero() && !v[c].is_zero())
                out[r] += m(r, c) * v[c];
    return out;
}

Vec column(const Matrix& m, std::size_t c)
{
    Vec v(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        v[r] = m(r, c);
    return v;
}

Scalar bilinear(const Matrix& b, const Vec& x, const Vec& y)
{
    Scalar s;
    for (std::size_t r = 0; r < b.rows(); ++r) {
        if (x[r].is_zero())
            continue;
        for (std::size_t c = 0; c < b.cols(); ++c)
            if (!b(r, c).is_zero() && !y[c].is_zero())
                s += x[r] * b(r, c) * y[c];
    }
    return s;
}

Scalar pair(const Vec& covector, const Vec& v)
{
    Scalar s;
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!covector[i].is_zero() && !v[i].is_zero())
            s += covector[i] * v[i];
    return s;
}

Vec lower_xi(const AcbStructure& s)
{
    return apply_matrix(s.g, s.xi);
}

namespace {

void check_shapes(const Manifold& m)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    if (d < 3 || d % 2 == 0)
        throw StructuralError("dimension must be odd and at least 3, got " + std::to_string(d));
    if (s.phi.rows() != d || s.phi.cols() != d || s.g.rows() != d || s.g.cols() != d || s.xi.size() != d
        || s.eta.size() != d)
        throw StructuralError("structure shapes do not match dimension " + std::to_string(d));
}

} // namespace

ValidationReport validate_structure(const Manifold& m)
{
    check_shapes(m);
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    ValidationReport report;

    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const Scalar r = s.g(i, j) - s.g(j, i);
            if (!r.is_zero())
                report.add("g symmetric", {i, j}, r);
        }
    try {
        (void)inverse(s.g);
    } catch (const StructuralError&) {
        throw StructuralError("metric g is singular over the Scalar field");
    }

    const Vec phi_xi = apply_matrix(s.phi, s.xi);
    for (std::size_t k = 0; k < d; ++k)
        if (!phi_xi[k].is_zero())
            report.add("phi xi = 0", {k}, phi_xi[k]);

    const Matrix phi2 = s.phi * s.phi;
    for (std::size_t k = 0; k < d; ++k)
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar expected = (k == j ? Scalar(-1) : Scalar(0)) + s.xi[k] * s.eta[j];
            const Scalar r = phi2(k, j) - expected;
            if (!r.is_zero())
                report.add("phi^2 = -Id + eta (x) xi", {k, j}, r);
        }

    for (std::size_t j = 0; j < d; ++j) {
        Scalar r;
        for (std::size_t k = 0; k < d; ++k)
            r += s.eta[k] * s.phi(k, j);
        if (!r.is_zero())
            report.add("eta o phi = 0", {j}, r);
    }

    if (const Scalar r = pair(s.eta, s.xi) - Scalar(1); !r.is_zero())
        report.add("eta(xi) = 1", {}, r);

    const Matrix gphi = s.phi.transposed() * s.g * s.phi;
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const Scalar r = gphi(i, j) + s.g(i, j) - s.eta[i] * s.eta[j];
            if (!r.is_zero())
                report.add("g(phi x, phi y) = -g(x,y) + eta(x)eta(y)", {i, j}, r);
        }

    const Vec gxi = lower_xi(s);
    for (std::size_t i = 0; i < d; ++i)
        if (const Scalar r = gxi[i] - s.eta[i]; !r.is_zero())
            report.add("eta = g(., xi)", {i}, r);
    return report;
}

ValidationReport validate_manifold(const Manifold& m)
{
    ValidationReport report = validate_lie_algebra(m.algebra);
    report.append(validate_structure(m));
    return report;
}

Matrix associated_metric(const Manifold& m)
{
    const auto& s = m.structure;
    Matrix gt = s.g * s.phi;
    for (std::size_t i = 0; i < m.dim(); ++i)
        for (std::size_t j = 0; j < m.dim(); ++j)
            gt(i, j) += s.eta[i] * s.eta[j];
    return gt;
}

Matrix g_tilde_inverse(const Manifold& m)
{
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    Matrix closed = Scalar(-1) * (s.phi * inverse(s.g));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            closed(i, j) += s.xi[i] * s.xi[j];
    if (!(associated_metric(m) * closed == Matrix::identity(d)))
        throw StructuralError("associated metric is singular or the structure is invalid");
    return closed;
}

SignatureCheck check_signature(const Manifold& m)
{
    SignatureCheck out;
    const std::size_t n = m.n();
    const auto expected = [n](const Inertia& in) { return in.positive == n + 1 && in.negative == n && in.zero == 0; };
    out.g = inertia(m.structure.g);
    out.g_ok = expected(out.g);
    // g̃ is only symmetric for a valid structure
    const Matrix gt = associated_metric(m);
    if (gt.is_symmetric()) {
        out.g_tilde = inertia(gt);
        out.g_tilde_ok = expected(out.g_tilde);
    }
    return out;
}

namespace {

Scalar value_at(const Scalar& s, const Assignment& a)
{
    return Scalar(substitute(s, a));
}

Matrix value_at(const Matrix& m, const Assignment& a)
{
    Matrix out(m.rows(), m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            out(r, c) = value_at(m(r, c), a);
    return out;
}

Vec value_at(const Vec& v, const Assignment& a)
{
    Vec out;
    out.reserve(v.size());
    for (const auto& x : v)
        out.push_back(value_at(x, a));
    return out;
}

} // namespace

Manifold substitute(const Manifold& m, const Assignment& assignment)
{
    for (const auto& name : m.params.names())
        if (!assignment.contains(name))
            throw UsageError("no value assigned to parameter '" + name + "'");
    for (const auto& [name, value] : assignment)
        if (!m.params.index_of(name))
            throw UsageError("unknown parameter '" + name + "'");

    Manifold out;
    out.algebra = LieAlgebra(m.dim(), out.params);
    for (std::size_t i = 0; i < out.algebra.structure.size(); ++i)
        out.algebra.structure.flat(i) = value_at(m.algebra.structure.flat(i), assignment);
    out.structure.phi = value_at(m.structure.phi, assignment);
    out.structure.g = value_at(m.structure.g, assignment);
    out.structure.xi = value_at(m.structure.xi, assignment);
    out.structure.eta = value_at(m.structure.eta, assignment);
    return out;
}

} // namespace acb
