#include "acb/verifiers.hpp"

#include <algorithm>
#include <functional>

namespace acb {

std::string to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass:
        return "pass";
    case CheckStatus::fail:
        return "fail";
    case CheckStatus::not_applicable:
        return "not applicable";
    case CheckStatus::unverifiable:
        return "unverifiable";
    }
    return "?";
}

bool CheckList::passed() const
{
    return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::fail; });
}

const Check* CheckList::find(std::string_view name) const
{
    const auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.name == name; });
    return it == checks.end() ? nullptr : &*it;
}

namespace {

std::string index_text(std::initializer_list<std::size_t> idx)
{
    std::string s = "(";
    bool first = true;
    for (std::size_t i : idx) {
        s += (first ? "" : ",") + std::to_string(i);
        first = false;
    }
    return s + ")";
}

/// Collects checks; each helper records pass or the first failing component.
class Builder {
public:
    explicit Builder(std::string verifier) { list_.verifier = std::move(verifier); }

    void scalar(const std::string& name, const Scalar& residual)
    {
        if (residual.is_zero())
            pass(name);
        else
            fail(name, "residual " + residual.to_string());
    }

    /// residual(i) over i in [0, d)
    void vector(const std::string& name, std::size_t d, const std::function<Scalar(std::size_t)>& residual)
    {
        for (std::size_t i = 0; i < d; ++i)
            if (const Scalar r = residual(i); !r.is_zero())
                return fail(name, "component " + index_text({i}) + " residual " + r.to_string());
        pass(name);
    }

    void matrix(const std::string& name, std::size_t d, const std::function<Scalar(std::size_t, std::size_t)>& residual)
    {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                if (const Scalar r = residual(i, j); !r.is_zero())
                    return fail(name, "component " + index_text({i, j}) + " residual " + r.to_string());
        pass(name);
    }

    void tensor3(const std::string& name, std::size_t d,
                 const std::function<Scalar(std::size_t, std::size_t, std::size_t)>& residual)
    {
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    if (const Scalar r = residual(i, j, k); !r.is_zero())
                        return fail(name, "component " + index_text({i, j, k}) + " residual " + r.to_string());
        pass(name);
    }

    void boolean(const std::string& name, bool ok, const std::string& detail)
    {
        if (ok)
            pass(name, detail);
        else
            fail(name, detail);
    }

    void pass(const std::string& name, std::string detail = {})
    {
        list_.checks.push_back({name, CheckStatus::pass, std::move(detail)});
    }
    void fail(const std::string& name, std::string detail)
    {
        list_.checks.push_back({name, CheckStatus::fail, std::move(detail)});
    }
    void not_applicable(const std::string& name, std::string detail)
    {
        list_.checks.push_back({name, CheckStatus::not_applicable, std::move(detail)});
    }
    void unverifiable(const std::string& name, std::string detail)
    {
        list_.checks.push_back({name, CheckStatus::unverifiable, std::move(detail)});
    }

    /// Conditional relation: hypothesis false -> not applicable, else run body.
    template <typename Body>
    void when(const std::string& name, bool hypothesis, const std::string& hypothesis_text, Body body)
    {
        if (!hypothesis)
            return not_applicable(name, "hypothesis " + hypothesis_text + " does not hold");
        body();
        if (name.starts_with("case "))
            list_.labels.push_back(name.substr(0, name.find(':')));
    }

    CheckList skipped(std::string note)
    {
        list_.skipped = true;
        list_.note = std::move(note);
        return std::move(list_);
    }

    CheckList done() { return std::move(list_); }

private:
    CheckList list_;
};

Scalar kron(std::size_t i, std::size_t j)
{
    return i == j ? Scalar(1) : Scalar(0);
}

Scalar integer(std::size_t v)
{
    return Scalar(static_cast<long>(v));
}

/// g(∇_{e_x} ξ, e_y)
Scalar g_nabla_xi(const Manifold& m, const CurvaturePack& pack, std::size_t x, std::size_t y)
{
    return bilinear(m.structure.g, column(pack.nabla_xi, x), basis_vector(m.dim(), y));
}

/// (∇_ξ ρ)(e_y, e_z)
Scalar nabla_xi_rho(const Manifold& m, const CurvaturePack& pack, std::size_t y, std::size_t z)
{
    Scalar s;
    for (std::size_t x = 0; x < m.dim(); ++x)
        if (!m.structure.xi[x].is_zero())
            s += m.structure.xi[x] * pack.nabla_ricci(x, y, z);
    return s;
}

/// e_k component of (∇_ξ φ) e_y
Scalar nabla_xi_phi(const Manifold& m, const CurvaturePack& pack, std::size_t y, std::size_t k)
{
    Scalar s;
    for (std::size_t x = 0; x < m.dim(); ++x)
        if (!m.structure.xi[x].is_zero())
            s += m.structure.xi[x] * pack.nabla_phi(x, y, k);
    return s;
}

/// (∇_{e_x} η)(e_y) = -η(∇_{e_x} e_y)
Scalar nabla_eta(const Manifold& m, const CurvaturePack& pack, std::size_t x, std::size_t y)
{
    Scalar s;
    for (std::size_t k = 0; k < m.dim(); ++k)
        if (!pack.connection.gamma(x, y, k).is_zero())
            s -= pack.connection.gamma(x, y, k) * m.structure.eta[k];
    return s;
}

/// (∇ρ)(h e_x, h e_y, h e_z) with h = Id - ξ⊗η the projection onto ker η.
Scalar nabla_rho_on_ker_eta(const Manifold& m, const CurvaturePack& pack, std::size_t x, std::size_t y,
                            std::size_t z)
{
    const std::size_t d = m.dim();
    const auto& s = m.structure;
    const auto proj = [&](std::size_t i) {
        Vec v = basis_vector(d, i);
        for (std::size_t k = 0; k < d; ++k)
            v[k] -= s.xi[k] * s.eta[i];
        return v;
    };
    const Vec hx = proj(x), hy = proj(y), hz = proj(z);
    Scalar sum;
    for (std::size_t a = 0; a < d; ++a) {
        if (hx[a].is_zero())
            continue;
        for (std::size_t b = 0; b < d; ++b) {
            if (hy[b].is_zero())
                continue;
            for (std::size_t c = 0; c < d; ++c)
                if (!hz[c].is_zero() && !pack.nabla_ricci(a, b, c).is_zero())
                    sum += hx[a] * hy[b] * hz[c] * pack.nabla_ricci(a, b, c);
        }
    }
    return sum;
}

bool nabla_xi_rho_vanishes(const Manifold& m, const CurvaturePack& pack)
{
    for (std::size_t y = 0; y < m.dim(); ++y)
        for (std::size_t z = 0; z < m.dim(); ++z)
            if (!nabla_xi_rho(m, pack, y, z).is_zero())
                return false;
    return true;
}

/// Basis directions whose ξ-section span{e_i, ξ} is a non-degenerate plane.
std::vector<std::size_t> xi_section_directions(const Manifold& m)
{
    std::vector<std::size_t> out;
    const auto& s = m.structure;
    for (std::size_t i = 0; i < m.dim(); ++i) {
        const Vec e = basis_vector(m.dim(), i);
        const Scalar gex = bilinear(s.g, e, s.xi);
        const Scalar area = bilinear(s.g, e, e) * bilinear(s.g, s.xi, s.xi) - gex * gex;
        if (!area.is_zero())
            out.push_back(i);
    }
    return out;
}

std::string yes_no(bool b)
{
    return b ? "true" : "false";
}

} // namespace

CheckList verify_einstein_like_properties(const AnalysisInputs& in)
{
    Builder out("einstein_like_properties");
    if (!in.einstein.ok())
        return out.skipped("precondition: Einstein-like fit did not succeed");
    const Manifold& m = in.manifold;
    const CurvaturePack& pack = in.pack;
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const Matrix& rho = pack.ricci;
    const Scalar sum = in.einstein.a() + in.einstein.b() + in.einstein.c();
    const Matrix phi_t = s.phi.transposed();
    const Matrix rho_phi_phi = phi_t * rho * s.phi;
    const Matrix rho_phi_left = phi_t * rho;
    const Matrix rho_phi_right = rho * s.phi;
    const Vec rho_xi = apply_matrix(rho, s.xi);
    const Vec rho_phi_xi = apply_matrix(phi_t, rho_xi);

    out.matrix("rho(phi x, phi y) = -rho(x,y) + (a+b+c) eta(x)eta(y)", d, [&](std::size_t i, std::size_t j) {
        return rho_phi_phi(i, j) + rho(i, j) - sum * s.eta[i] * s.eta[j];
    });
    out.matrix("rho(phi x, y) = rho(x, phi y)", d,
               [&](std::size_t i, std::size_t j) { return rho_phi_left(i, j) - rho_phi_right(i, j); });
    out.vector("rho(phi x, xi) = 0", d, [&](std::size_t i) { return rho_phi_xi[i]; });
    out.vector("rho(x, xi) = (a+b+c) eta(x)", d, [&](std::size_t i) { return rho_xi[i] - sum * s.eta[i]; });
    out.scalar("rho(xi, xi) = a+b+c", pair(rho_xi, s.xi) - sum);
    const Vec q_xi = apply_matrix(pack.g_inverse, rho_xi);
    out.vector("Q xi = (a+b+c) xi", d, [&](std::size_t i) { return q_xi[i] - sum * s.xi[i]; });
    out.scalar("tau = (2n+1)a + b + c", pack.tau - in.einstein.tau_from_constants);

    const Scalar& b = in.einstein.b();
    const Scalar bc = b + in.einstein.c();
    out.tensor3("(nabla_x rho)(y,z) = b F(x,y,z) + (b+c){g(nabla_x xi,y)eta(z) + g(nabla_x xi,z)eta(y)}", d,
                [&](std::size_t x, std::size_t y, std::size_t z) {
                    const Scalar rhs = b * pack.F(x, y, z)
                        + bc * (g_nabla_xi(m, pack, x, y) * s.eta[z] + g_nabla_xi(m, pack, x, z) * s.eta[y]);
                    return pack.nabla_ricci(x, y, z) - rhs;
                });
    return out.done();
}

CheckList verify_sasaki_einstein_like(const AnalysisInputs& in)
{
    Builder out("sasaki_einstein_like");
    if (!in.sasaki_like)
        return out.skipped("precondition: manifold is not Sasaki-like");
    if (!in.einstein.ok())
        return out.skipped("precondition: Einstein-like fit did not succeed");
    const Manifold& m = in.manifold;
    const CurvaturePack& pack = in.pack;
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const Scalar two_n = integer(2 * m.n());
    const Scalar &a = in.einstein.a(), &b = in.einstein.b(), &c = in.einstein.c();

    out.scalar("a+b+c = 2n", a + b + c - two_n);
    out.scalar("tau = 2n(a+1)", pack.tau - two_n * (a + Scalar(1)));

    const Matrix g_phi = s.g * s.phi;                          // g(x, φy)
    const Matrix g_phi_phi = s.phi.transposed() * s.g * s.phi; // g(φx, φy)
    out.tensor3("(nabla_x rho)(y,z) = -(b+c){g(x,phi y)eta(z) + g(x,phi z)eta(y)} + b{g(phi x,phi y)eta(z) + "
                "g(phi x,phi z)eta(y)}",
                d, [&](std::size_t x, std::size_t y, std::size_t z) {
                    const Scalar rhs = -(b + c) * (g_phi(x, y) * s.eta[z] + g_phi(x, z) * s.eta[y])
                        + b * (g_phi_phi(x, y) * s.eta[z] + g_phi_phi(x, z) * s.eta[y]);
                    return pack.nabla_ricci(x, y, z) - rhs;
                });

    const Scalar& div = pack.div.div_rho_xi;
    const Scalar& div_star = pack.div.div_star_rho_xi;
    out.scalar("a = 2n + (Div* rho)(xi)/(2n)", a - (two_n + div_star / two_n));
    out.scalar("b = -(Div rho)(xi)/(2n)", b + div / two_n);
    out.scalar("c = ((Div rho)(xi) - (Div* rho)(xi))/(2n)", c - (div - div_star) / two_n);

    const bool scalar_flat = pack.tau.is_zero();
    const bool a_minus_one = (a + Scalar(1)).is_zero();
    out.boolean("scalar-flat iff a = -1", scalar_flat == a_minus_one,
                "scalar-flat " + yes_no(scalar_flat) + ", a = -1 " + yes_no(a_minus_one));

    const bool ricci_symmetric = pack.nabla_ricci.is_zero();
    const bool einstein = b.is_zero() && c.is_zero();
    out.boolean("Ricci-symmetric iff Einstein", ricci_symmetric == einstein,
                "Ricci-symmetric " + yes_no(ricci_symmetric) + ", Einstein " + yes_no(einstein));

    out.tensor3("Ricci tensor is eta-parallel", d, [&](std::size_t x, std::size_t y, std::size_t z) {
        return nabla_rho_on_ker_eta(m, pack, x, y, z);
    });
    out.matrix("Ricci tensor is parallel along xi", d,
               [&](std::size_t y, std::size_t z) { return nabla_xi_rho(m, pack, y, z); });

    const bool eta_einstein = b.is_zero();
    out.boolean("eta-Einstein iff (Div rho)(xi) = 0", eta_einstein == div.is_zero(),
                "eta-Einstein " + yes_no(eta_einstein) + ", (Div rho)(xi) = " + div.to_string());
    out.boolean("Einstein iff (Div rho)(xi) = (Div* rho)(xi) = 0", einstein == (div.is_zero() && div_star.is_zero()),
                "Einstein " + yes_no(einstein) + ", (Div rho)(xi) = " + div.to_string()
                    + ", (Div* rho)(xi) = " + div_star.to_string());

    out.when("Einstein => tau = 2n(2n+1)", einstein, "b = c = 0", [&] {
        out.scalar("Einstein => tau = 2n(2n+1)", pack.tau - two_n * (two_n + Scalar(1)));
    });
    return out.done();
}

CheckList verify_soliton_geodesic_props(const AnalysisInputs& in)
{
    Builder out("soliton_geodesic_props");
    if (!in.einstein.ok() || !in.soliton.ok())
        return out.skipped("precondition: Einstein-like and soliton fits must both succeed");
    const Manifold& m = in.manifold;
    const CurvaturePack& pack = in.pack;
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const auto& e = in.einstein;
    const auto& sol = in.soliton;

    out.scalar("a+b+c+lambda+mu+nu = 0", e.a() + e.b() + e.c() + sol.lambda() + sol.mu() + sol.nu());
    const Vec nabla_xi_xi = apply_matrix(pack.nabla_xi, s.xi);
    out.vector("nabla_xi xi = 0", d, [&](std::size_t k) { return nabla_xi_xi[k]; });
    out.vector("(nabla_xi phi) xi = 0", d, [&](std::size_t k) {
        Scalar v;
        for (std::size_t y = 0; y < d; ++y)
            if (!s.xi[y].is_zero())
                v += s.xi[y] * nabla_xi_phi(m, pack, y, k);
        return v;
    });
    out.vector("nabla_xi eta = 0", d, [&](std::size_t y) {
        Scalar v;
        for (std::size_t x = 0; x < d; ++x)
            if (!s.xi[x].is_zero())
                v += s.xi[x] * nabla_eta(m, pack, x, y);
        return v;
    });
    out.vector("omega = 0", d, [&](std::size_t z) { return pack.lee.omega[z]; });
    out.matrix("(nabla_xi rho)(y,z) = b g((nabla_xi phi) y, z)", d, [&](std::size_t y, std::size_t z) {
        Scalar rhs;
        for (std::size_t k = 0; k < d; ++k)
            rhs += nabla_xi_phi(m, pack, y, k) * s.g(k, z);
        return nabla_xi_rho(m, pack, y, z) - e.b() * rhs;
    });

    const bool parallel_along_xi = nabla_xi_rho_vanishes(m, pack);
    out.boolean("Ricci tensor parallel along xi iff eta-Einstein", parallel_along_xi == e.b().is_zero(),
                "parallel along xi " + yes_no(parallel_along_xi) + ", eta-Einstein " + yes_no(e.b().is_zero()));
    out.unverifiable("not in F11 or its direct sums", "needs the component conditions of the basic classes");
    out.unverifiable("Ricci tensor parallel along xi iff not in F10 or its direct sums",
                     "needs the component conditions of the basic classes");
    return out.done();
}

CheckList verify_theorem_sasaki(const AnalysisInputs& in)
{
    Builder out("theorem_sasaki_like_soliton");
    if (!in.sasaki_like)
        return out.skipped("precondition: manifold is not Sasaki-like");
    if (!in.einstein.ok() || !in.soliton.ok())
        return out.skipped("precondition: Einstein-like and soliton fits must both succeed");
    const Manifold& m = in.manifold;
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const Scalar two_n = integer(2 * m.n());
    const Scalar &a = in.einstein.a(), &b = in.einstein.b(), &c = in.einstein.c();
    const Scalar &lambda = in.soliton.lambda(), &mu = in.soliton.mu(), &nu = in.soliton.nu();
    const Scalar one(1);

    out.scalar("a + lambda = 0", a + lambda);
    out.scalar("b + mu - 1 = 0", b + mu - one);
    out.scalar("c + nu + 1 = 0", c + nu + one);
    out.scalar("lambda + mu + nu = -2n", lambda + mu + nu + two_n);
    out.scalar("a + b + c = 2n", a + b + c - two_n);
    out.matrix("rho = -lambda g + (1-mu) g~ - (1+nu) eta (x) eta", d, [&](std::size_t i, std::size_t j) {
        const Scalar rhs = -lambda * s.g(i, j) + (one - mu) * in.pack.g_tilde(i, j) - (one + nu) * s.eta[i] * s.eta[j];
        return in.pack.ricci(i, j) - rhs;
    });

    const auto same = [](const Scalar& x, const Scalar& y) { return (x - y).is_zero(); };
    out.when("case (i): eta-Ricci soliton with Einstein-like constants (-lambda, 1, lambda+2n-1)", mu.is_zero(),
             "mu = 0", [&] {
                 out.boolean("case (i): eta-Ricci soliton with Einstein-like constants (-lambda, 1, lambda+2n-1)",
                             same(a, -lambda) && same(b, one) && same(c, lambda + two_n - one),
                             "(a,b,c) = (" + a.to_string() + ", " + b.to_string() + ", " + c.to_string() + ")");
             });
    out.when("case (ii): shrinking Ricci soliton with constant -2n, Einstein-like constants (2n, 1, -1)",
             mu.is_zero() && nu.is_zero(), "mu = nu = 0", [&] {
                 out.boolean("case (ii): shrinking Ricci soliton with constant -2n, Einstein-like constants (2n, 1, -1)",
                             same(lambda, -two_n) && same(a, two_n) && same(b, one) && same(c, -one),
                             "lambda = " + lambda.to_string());
             });
    out.when("case (iii): eta-Einstein with soliton constants (-a, 1, a-2n-1)", b.is_zero(), "b = 0", [&] {
        out.boolean("case (iii): eta-Einstein with soliton constants (-a, 1, a-2n-1)",
                    same(lambda, -a) && same(mu, one) && same(nu, a - two_n - one),
                    "(lambda,mu,nu) = (" + lambda.to_string() + ", " + mu.to_string() + ", " + nu.to_string() + ")");
    });
    out.when("case (iv): Einstein with constant 2n, soliton constants (-2n, 1, -1)", b.is_zero() && c.is_zero(),
             "b = c = 0", [&] {
                 out.boolean("case (iv): Einstein with constant 2n, soliton constants (-2n, 1, -1)",
                             same(a, two_n) && same(lambda, -two_n) && same(mu, one) && same(nu, -one),
                             "a = " + a.to_string());
             });
    return out.done();
}

CheckList verify_theorem_torse(const AnalysisInputs& in)
{
    Builder out("theorem_torse_forming_soliton");
    if (!in.torse.present)
        return out.skipped("precondition: xi is not torse-forming");
    if (!in.einstein.ok() || !in.soliton.ok())
        return out.skipped("precondition: Einstein-like and soliton fits must both succeed");
    const Manifold& m = in.manifold;
    const CurvaturePack& pack = in.pack;
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const Scalar two_n = integer(2 * m.n());
    const Scalar &a = in.einstein.a(), &b = in.einstein.b(), &c = in.einstein.c();
    const Scalar &lambda = in.soliton.lambda(), &mu = in.soliton.mu(), &nu = in.soliton.nu();
    const Scalar& f = in.torse.f;
    const Scalar f2 = f * f;

    out.scalar("a + lambda + f = 0", a + lambda + f);
    out.scalar("b + mu = 0", b + mu);
    out.scalar("c + nu - f = 0", c + nu - f);
    out.matrix("rho = -(lambda+f) g - mu g~ - (nu-f) eta (x) eta", d, [&](std::size_t i, std::size_t j) {
        const Scalar rhs = -(lambda + f) * s.g(i, j) - mu * pack.g_tilde(i, j) - (nu - f) * s.eta[i] * s.eta[j];
        return pack.ricci(i, j) - rhs;
    });
    out.scalar("2n f^2 = -(a+b+c)", two_n * f2 + a + b + c);
    out.scalar("2n f^2 = lambda+mu+nu", two_n * f2 - (lambda + mu + nu));

    out.matrix("R(x,y)xi = f^2 {eta(x) y - eta(y) x}", d, [&](std::size_t x, std::size_t y) {
        const Vec r = curvature_operator(pack.g_inverse, pack.riemann, basis_vector(d, x), basis_vector(d, y), s.xi);
        for (std::size_t k = 0; k < d; ++k) {
            const Scalar res = r[k] - f2 * (s.eta[x] * kron(y, k) - s.eta[y] * kron(x, k));
            if (!res.is_zero())
                return res;
        }
        return Scalar();
    });
    const Vec rho_xi = apply_matrix(pack.ricci, s.xi);
    out.vector("rho(x,xi) = -2n f^2 eta(x)", d, [&](std::size_t x) { return rho_xi[x] + two_n * f2 * s.eta[x]; });
    {
        std::string name = "k(x,xi) = -f^2 on xi-sections";
        bool ok = true;
        for (std::size_t i : xi_section_directions(m)) {
            const Scalar r = sectional_curvature(m, pack.riemann, basis_vector(d, i), s.xi) + f2;
            if (!r.is_zero()) {
                out.fail(name, "direction e_" + std::to_string(i) + " residual " + r.to_string());
                ok = false;
                break;
            }
        }
        if (ok)
            out.pass(name);
    }
    out.scalar("theta*(xi) = 2n f", pair(pack.lee.theta_star, s.xi) - two_n * f);
    out.scalar("theta(xi) = 0", pair(pack.lee.theta, s.xi));
    out.vector("omega = 0", d, [&](std::size_t z) { return pack.lee.omega[z]; });

    const bool ricci_symmetric = pack.nabla_ricci.is_zero();
    const bool einstein = b.is_zero() && c.is_zero();
    out.boolean("Ricci-symmetric iff Einstein", ricci_symmetric == einstein,
                "Ricci-symmetric " + yes_no(ricci_symmetric) + ", Einstein " + yes_no(einstein));

    const auto same = [](const Scalar& x, const Scalar& y) { return (x - y).is_zero(); };
    out.when("case (i): eta-Ricci soliton and eta-Einstein with a+c+lambda+nu = 0", b.is_zero() && mu.is_zero(),
             "b = mu = 0", [&] {
                 out.scalar("case (i): eta-Ricci soliton and eta-Einstein with a+c+lambda+nu = 0", a + c + lambda + nu);
             });
    out.when("case (ii): Ricci soliton with eta-Einstein constants (-lambda-f, f)",
             b.is_zero() && mu.is_zero() && nu.is_zero(), "b = mu = nu = 0", [&] {
                 out.boolean("case (ii): Ricci soliton with eta-Einstein constants (-lambda-f, f)",
                             same(a, -lambda - f) && same(c, f),
                             "(a,c) = (" + a.to_string() + ", " + c.to_string() + ")");
             });
    out.when("case (iii): Einstein with eta-Ricci soliton constants (-a-f, f)", einstein && mu.is_zero(),
             "b = c = mu = 0", [&] {
                 out.boolean("case (iii): Einstein with eta-Ricci soliton constants (-a-f, f)",
                             same(lambda, -a - f) && same(nu, f),
                             "(lambda,nu) = (" + lambda.to_string() + ", " + nu.to_string() + ")");
             });

    const Matrix g_phi = s.g * s.phi;
    const Matrix g_phi_phi = s.phi.transposed() * s.g * s.phi;
    const std::string f5_hypothesis = "F5 condition with non-zero f";
    const bool f5 = in.f5_condition && !f.is_zero();
    const std::string closed = "F5: (nabla_x rho)(y,z) = (a+lambda){(b+c){g(phi x,phi y)eta(z) + g(phi x,phi z)eta(y)} "
                               "+ b{g(x,phi y)eta(z) + g(x,phi z)eta(y)}}";
    out.when(closed, f5, f5_hypothesis, [&] {
        out.tensor3(closed, d, [&](std::size_t x, std::size_t y, std::size_t z) {
            const Scalar rhs = (a + lambda)
                * ((b + c) * (g_phi_phi(x, y) * s.eta[z] + g_phi_phi(x, z) * s.eta[y])
                   + b * (g_phi(x, y) * s.eta[z] + g_phi(x, z) * s.eta[y]));
            return pack.nabla_ricci(x, y, z) - rhs;
        });
    });
    out.when("F5: Ricci tensor is eta-parallel", f5, f5_hypothesis, [&] {
        out.tensor3("F5: Ricci tensor is eta-parallel", d, [&](std::size_t x, std::size_t y, std::size_t z) {
            return nabla_rho_on_ker_eta(m, pack, x, y, z);
        });
    });
    out.when("F5: Ricci tensor is parallel along xi", f5, f5_hypothesis, [&] {
        out.matrix("F5: Ricci tensor is parallel along xi", d,
                   [&](std::size_t y, std::size_t z) { return nabla_xi_rho(m, pack, y, z); });
    });
    out.unverifiable("class F1+F2+F3+F5+F6+F10, only F5 among basic classes",
                     "needs the component conditions of the basic classes; only the F5 condition is checked");
    return out.done();
}

CheckList verify_sasaki_identities(const Manifold& m, const CurvaturePack& pack)
{
    Builder out("sasaki_identities");
    if (!is_sasaki_like(m, pack.connection).holds)
        return out.skipped("precondition: manifold is not Sasaki-like");
    const auto& s = m.structure;
    const std::size_t d = m.dim();
    const Scalar two_n = integer(2 * m.n());
    const Matrix phi2 = s.phi * s.phi;
    const Matrix g_phi = s.g * s.phi;
    const auto R = [&](const Vec& x, const Vec& y, const Vec& z) {
        return curvature_operator(pack.g_inverse, pack.riemann, x, y, z);
    };
    const auto e = [&](std::size_t i) { return basis_vector(d, i); };
    const auto first_nonzero = [](const Vec& v) {
        for (const auto& x : v)
            if (!x.is_zero())
                return x;
        return Scalar();
    };

    out.matrix("nabla_x xi = -phi x", d,
               [&](std::size_t k, std::size_t x) { return pack.nabla_xi(k, x) + s.phi(k, x); });
    out.matrix("(nabla_x eta)(y) = -g(x, phi y)", d,
               [&](std::size_t x, std::size_t y) { return nabla_eta(m, pack, x, y) + g_phi(x, y); });
    out.matrix("R(x,y)xi = eta(y)x - eta(x)y", d, [&](std::size_t x, std::size_t y) {
        Vec r = R(e(x), e(y), s.xi);
        for (std::size_t k = 0; k < d; ++k)
            r[k] -= s.eta[y] * kron(x, k) - s.eta[x] * kron(y, k);
        return first_nonzero(r);
    });
    out.vector("R(xi,y)xi = phi^2 y", d, [&](std::size_t y) {
        Vec r = R(s.xi, e(y), s.xi);
        for (std::size_t k = 0; k < d; ++k)
            r[k] -= phi2(k, y);
        return first_nonzero(r);
    });
    const Vec rho_xi = apply_matrix(pack.ricci, s.xi);
    out.vector("rho(x,xi) = 2n eta(x)", d, [&](std::size_t x) { return rho_xi[x] - two_n * s.eta[x]; });
    out.scalar("rho(xi,xi) = 2n", pair(rho_xi, s.xi) - two_n);
    out.matrix("R(xi,y)z = g(y,z)xi - eta(z)y", d, [&](std::size_t y, std::size_t z) {
        Vec r = R(s.xi, e(y), e(z));
        for (std::size_t k = 0; k < d; ++k)
            r[k] -= s.g(y, z) * s.xi[k] - s.eta[z] * kron(y, k);
        return first_nonzero(r);
    });
    out.tensor3("eta(R(x,y)z) = eta(x)g(y,z) - eta(y)g(x,z)", d, [&](std::size_t x, std::size_t y, std::size_t z) {
        return pair(s.eta, R(e(x), e(y), e(z))) - (s.eta[x] * s.g(y, z) - s.eta[y] * s.g(x, z));
    });
    const Vec nabla_xi_xi = apply_matrix(pack.nabla_xi, s.xi);
    out.vector("nabla_xi xi = 0", d, [&](std::size_t k) { return nabla_xi_xi[k]; });
    out.matrix("nabla_xi phi = 0", d, [&](std::size_t y, std::size_t k) { return nabla_xi_phi(m, pack, y, k); });
    out.vector("nabla_xi eta = 0", d, [&](std::size_t y) {
        Scalar v;
        for (std::size_t x = 0; x < d; ++x)
            if (!s.xi[x].is_zero())
                v += s.xi[x] * nabla_eta(m, pack, x, y);
        return v;
    });
    out.matrix("d eta = 0", d,
               [&](std::size_t x, std::size_t y) { return -pair(s.eta, m.algebra.bracket(x, y)); });
    out.matrix("R(phi x, phi y)xi = 0", d, [&](std::size_t x, std::size_t y) {
        return first_nonzero(R(column(s.phi, x), column(s.phi, y), s.xi));
    });
    out.vector("rho(phi x, xi) = 0", d, [&](std::size_t x) { return pair(column(s.phi, x), rho_xi); });
    {
        const std::string name = "k(x,xi) = 1 on xi-sections";
        bool ok = true;
        for (std::size_t i : xi_section_directions(m)) {
            const Scalar r = sectional_curvature(m, pack.riemann, e(i), s.xi) - Scalar(1);
            if (!r.is_zero()) {
                out.fail(name, "direction e_" + std::to_string(i) + " residual " + r.to_string());
                ok = false;
                break;
            }
        }
        if (ok)
            out.pass(name);
    }
    out.vector("theta = -2n eta", d, [&](std::size_t z) { return pack.lee.theta[z] + two_n * s.eta[z]; });
    out.vector("theta* = 0", d, [&](std::size_t z) { return pack.lee.theta_star[z]; });
    out.vector("omega = 0", d, [&](std::size_t z) { return pack.lee.omega[z]; });
    return out.done();
}

} // namespace acb
