// Acceptance criteria 1-7: one [PASS]/[FAIL] line each, exit status 1 on any failure.
// Optional argument: path of the acb CLI, used for the byte-identity check of criterion 7.

#include "acb/curvature.hpp"
#include "acb/document.hpp"
#include "acb/examples.hpp"
#include "acb/expression.hpp"
#include "acb/report.hpp"
#include "acb/soliton.hpp"
#include "acb/verifiers.hpp"

#include "random_cases.hpp"

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>

using namespace acb;

namespace {

using Index = std::vector<std::size_t>;

class Criterion {
public:
    explicit Criterion(std::string title)
        : title_(std::move(title))
    {
    }

    void expect(bool ok, const std::string& what)
    {
        ++checked_;
        if (!ok)
            failures_.push_back(what);
    }

    void expect_eq(const Scalar& got, const Scalar& want, const std::string& what)
    {
        expect(got == want, what + ": got " + got.to_string() + ", want " + want.to_string());
    }

    bool report(int id) const
    {
        std::cout << (failures_.empty() ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title_ << " ("
                  << checked_ << " checks)\n";
        for (const auto& f : failures_)
            std::cout << "       " << f << "\n";
        return failures_.empty();
    }

private:
    std::string title_;
    std::vector<std::string> failures_;
    std::size_t checked_ = 0;
};

struct Analysis {
    Manifold m;
    CurvaturePack pack;
    EinsteinLikeFit einstein;
    SolitonFit soliton;
    TorseForming torse;
    bool sasaki_like;
    bool f5;

    explicit Analysis(Manifold manifold)
        : m(std::move(manifold))
        , pack(compute_curvature(m))
        , einstein(fit_einstein_like(m, pack.ricci, pack.g_tilde))
        , soliton(fit_ricci_like_soliton(m, pack.lie_xi_g, pack.ricci, pack.g_tilde))
        , torse(detect_torse_forming_xi(m, pack.connection))
        , sasaki_like(is_sasaki_like(m, pack.connection).holds)
        , f5(torse.present && check_f5_condition(m, pack.connection, torse.f))
    {
    }

    AnalysisInputs inputs() const { return {m, pack, einstein, soliton, torse, sasaki_like, f5}; }
    Scalar s(std::string_view text) const { return parse_expression(text, m.params); }
};

std::string show(const Index& idx)
{
    std::string out = "(";
    for (std::size_t i = 0; i < idx.size(); ++i)
        out += (i ? "," : "") + std::to_string(idx[i]);
    return out + ")";
}

void compare_tensor(Criterion& c, const Analysis& a, const Tensor& t, const std::map<Index, std::string>& nonzero,
                    const std::string& what)
{
    for (std::size_t flat = 0; flat < t.size(); ++flat) {
        const Index idx = t.index_of(flat);
        const auto it = nonzero.find(idx);
        c.expect_eq(t.flat(flat), it == nonzero.end() ? Scalar(0) : a.s(it->second), what + show(idx));
    }
}

std::map<Index, std::string> with_antisymmetry(const std::map<Index, std::string>& base)
{
    std::map<Index, std::string> out;
    for (const auto& [i, v] : base) {
        out[{i[0], i[1], i[2], i[3]}] = v;
        out[{i[1], i[0], i[2], i[3]}] = "-(" + v + ")";
        out[{i[0], i[1], i[3], i[2]}] = "-(" + v + ")";
        out[{i[1], i[0], i[3], i[2]}] = v;
    }
    return out;
}

void expect_check(Criterion& c, const CheckList& list, const std::string& name)
{
    const Check* check = list.find(name);
    c.expect(check && check->status == CheckStatus::pass,
             list.verifier + ": '" + name + "' " + (check ? to_string(check->status) + " " + check->detail : "missing"));
}

bool has_label(const CheckList& list, const std::string& label)
{
    return std::find(list.labels.begin(), list.labels.end(), label) != list.labels.end();
}

Criterion sasaki5_end_to_end()
{
    Criterion c("sasaki5 end-to-end");
    const Analysis a(builtin_example("sasaki5"));
    compare_tensor(c, a, a.pack.connection.gamma,
                   {{{0, 1, 2}, "p"},  {{0, 1, 4}, "q"},  {{0, 2, 1}, "-p"}, {{0, 2, 3}, "-q"},
                    {{0, 3, 2}, "-q"}, {{0, 3, 4}, "p"},  {{0, 4, 1}, "q"},  {{0, 4, 3}, "-p"},
                    {{1, 0, 3}, "-1"}, {{1, 3, 0}, "-1"}, {{2, 0, 4}, "-1"}, {{2, 4, 0}, "-1"},
                    {{3, 0, 1}, "1"},  {{3, 1, 0}, "-1"}, {{4, 0, 2}, "1"},  {{4, 2, 0}, "-1"}},
                   "Gamma");
    compare_tensor(c, a, a.pack.riemann,
                   with_antisymmetry({{{0, 1, 0, 1}, "-1"},
                                      {{0, 2, 0, 2}, "-1"},
                                      {{0, 3, 0, 3}, "1"},
                                      {{0, 4, 0, 4}, "1"},
                                      {{1, 2, 3, 4}, "1"},
                                      {{1, 3, 1, 3}, "-1"},
                                      {{1, 4, 2, 3}, "-1"},
                                      {{2, 3, 1, 4}, "-1"},
                                      {{2, 4, 2, 4}, "-1"},
                                      {{3, 4, 1, 2}, "1"}}),
                   "R");
    const Vec& eta = a.m.structure.eta;
    for (std::size_t i = 0; i < 5; ++i)
        for (std::size_t j = 0; j < 5; ++j) {
            c.expect_eq(a.pack.ricci(i, j), Scalar(4) * eta[i] * eta[j], "rho" + show({i, j}));
            const bool lie_nonzero = (i == 1 && j == 3) || (i == 3 && j == 1) || (i == 2 && j == 4) || (i == 4 && j == 2);
            c.expect_eq(a.pack.lie_xi_g(i, j), lie_nonzero ? Scalar(2) : Scalar(0), "L_xi g" + show({i, j}));
        }
    c.expect(a.einstein.ok(), "Einstein-like fit solved");
    if (a.einstein.ok()) {
        c.expect_eq(a.einstein.a(), 0, "a");
        c.expect_eq(a.einstein.b(), 0, "b");
        c.expect_eq(a.einstein.c(), 4, "c");
    }
    c.expect(a.soliton.ok(), "soliton fit solved");
    if (a.soliton.ok()) {
        c.expect_eq(a.soliton.lambda(), 0, "lambda");
        c.expect_eq(a.soliton.mu(), 1, "mu");
        c.expect_eq(a.soliton.nu(), -5, "nu");
    }
    const CheckList thm = verify_theorem_sasaki(a.inputs());
    for (const char* name : {"a + lambda = 0", "b + mu - 1 = 0", "c + nu + 1 = 0", "lambda + mu + nu = -2n",
                             "a + b + c = 2n"})
        expect_check(c, thm, name);
    c.expect(thm.passed(), "theorem verifier passes");
    c.expect(has_label(thm, "case (iii)"), "case (iii) labelled");
    return c;
}

Criterion f5dim3_end_to_end()
{
    Criterion c("f5dim3 end-to-end");
    const Analysis a(builtin_example("f5dim3"));
    compare_tensor(c, a, a.pack.connection.gamma,
                   {{{1, 0, 1}, "-p"}, {{1, 1, 0}, "p"}, {{2, 0, 2}, "-p"}, {{2, 2, 0}, "-p"}}, "Gamma");
    compare_tensor(c, a, a.pack.F, {{{1, 0, 2}, "-p"}, {{1, 2, 0}, "-p"}, {{2, 0, 1}, "-p"}, {{2, 1, 0}, "-p"}},
                   "F");
    compare_tensor(c, a, a.pack.riemann,
                   with_antisymmetry({{{0, 1, 0, 1}, "p^2"}, {{0, 2, 0, 2}, "-p^2"}, {{1, 2, 1, 2}, "-p^2"}}), "R");
    const std::vector<std::string> rho_diag{"-2*p^2", "-2*p^2", "2*p^2"};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c.expect_eq(a.pack.ricci(i, j), i == j ? a.s(rho_diag[i]) : Scalar(0), "rho" + show({i, j}));
    c.expect_eq(a.pack.tau, a.s("-6*p^2"), "tau");
    for (auto [x, y] : {std::pair<std::size_t, std::size_t>{0, 1}, {0, 2}, {1, 2}})
        c.expect_eq(sectional_curvature(a.m, a.pack.riemann, x, y), a.s("-p^2"), "k" + show({x, y}));
    c.expect(a.torse.present, "xi torse-forming");
    if (a.torse.present) {
        c.expect_eq(a.torse.f, a.s("-p"), "f");
        c.expect_eq(Scalar(2) * a.torse.f * a.torse.f, a.s("2*p^2"), "2 f^2");
    }
    c.expect(a.einstein.ok() && a.einstein.a() == a.s("-2*p^2") && a.einstein.b().is_zero() && a.einstein.c().is_zero(),
             "Einstein fit (-2p^2, 0, 0)");
    c.expect(a.soliton.ok() && a.soliton.lambda() == a.s("p + 2*p^2") && a.soliton.mu().is_zero()
                 && a.soliton.nu() == a.s("-p"),
             "soliton fit (p + 2p^2, 0, -p)");
    const CheckList thm = verify_theorem_torse(a.inputs());
    for (const char* name : {"a + lambda + f = 0", "b + mu = 0", "c + nu - f = 0", "2n f^2 = -(a+b+c)",
                             "2n f^2 = lambda+mu+nu"})
        expect_check(c, thm, name);
    c.expect(thm.passed(), "theorem verifier passes");
    return c;
}

Criterion sasaki_identity_suite()
{
    Criterion c("Sasaki-like identity suite on sasaki5");
    const Analysis a(builtin_example("sasaki5"));
    const CheckList suite = verify_sasaki_identities(a.m, a.pack);
    c.expect(!suite.skipped, "suite ran");
    for (const auto& check : suite.checks)
        c.expect(check.status == CheckStatus::pass, check.name + ": " + check.detail);

    const auto& s = a.m.structure;
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y) {
            const Vec r = curvature_operator(a.pack.g_inverse, a.pack.riemann, column(s.phi, x), column(s.phi, y), s.xi);
            c.expect(r == Vec(5), "R(phi e_" + std::to_string(x) + ", phi e_" + std::to_string(y) + ")xi = 0");
        }
    for (std::size_t x = 0; x < 5; ++x)
        c.expect_eq(bilinear(a.pack.ricci, column(s.phi, x), s.xi), 0, "rho(phi e_" + std::to_string(x) + ", xi)");
    for (std::size_t x = 1; x < 5; ++x)
        c.expect_eq(sectional_curvature(a.m, a.pack.riemann, basis_vector(5, x), s.xi), 1,
                    "k(e_" + std::to_string(x) + ", xi)");
    return c;
}

Criterion property_suites()
{
    Criterion c("property suites over random 3-dim structures");
    std::size_t count = 0;
    for (const auto& rc : test::random_cases()) {
        ++count;
        const Manifold& m = rc.m;
        c.expect(validate_manifold(m).ok(), rc.seed_info + ": valid input");
        const Connection conn = levi_civita(m);
        c.expect(check_connection(m, conn).ok(), rc.seed_info + ": torsion-free and metric");
        const Tensor r = riemann(m, conn);
        c.expect(check_riemann_symmetries(r).ok(), rc.seed_info + ": Riemann symmetries and Bianchi");
        const Tensor F = fundamental_tensor(m, conn);
        c.expect(check_fundamental_identities(m, conn, F).ok(), rc.seed_info + ": F identities");
        c.expect(check_lee_identities(m, lee_forms(m, F)).ok(), rc.seed_info + ": Lee form identities");
        const Matrix gt = associated_metric(m);
        const Scalar x = Rational(Rational(static_cast<long>(count % 7) - 3) / 2), y = static_cast<long>(count % 5),
                     z = Rational(Rational(1) / (static_cast<long>(count % 3) + 1));
        const ConstantFit fit = fit_constants(m, einstein_like_form(m, gt, x, y, z), gt);
        c.expect(fit.ok() && fit[0] == x && fit[1] == y && fit[2] == z, rc.seed_info + ": Einstein-like round trip");
    }
    c.expect(count >= 200, "at least 200 cases");
    return c;
}

Criterion cross_formula_oracles()
{
    Criterion c("cross-formula oracles");
    const Analysis s(builtin_example("sasaki5"));
    const auto& st = s.m.structure;
    const Scalar a = s.einstein.a(), b = s.einstein.b(), cc = s.einstein.c();
    const Matrix g_phi = st.g * st.phi;                           // g(x, φy)
    const Matrix phi_g_phi = st.phi.transposed() * st.g * st.phi; // g(φx, φy)
    for (std::size_t x = 0; x < 5; ++x)
        for (std::size_t y = 0; y < 5; ++y)
            for (std::size_t z = 0; z < 5; ++z) {
                const Scalar closed = -(b + cc) * (g_phi(x, y) * st.eta[z] + g_phi(x, z) * st.eta[y])
                    + b * (phi_g_phi(x, y) * st.eta[z] + phi_g_phi(x, z) * st.eta[y]);
                c.expect_eq(s.pack.nabla_ricci(x, y, z), closed, "nabla rho" + show({x, y, z}));
            }
    const Scalar two_n = 4;
    const Scalar dr = s.pack.div.div_rho_xi, ds = s.pack.div.div_star_rho_xi;
    c.expect_eq(two_n + ds / two_n, 0, "a from divergences");
    c.expect_eq(-dr / two_n, 0, "b from divergences");
    c.expect_eq((dr - ds) / two_n, 4, "c from divergences");
    c.expect(a == 0 && b == 0 && cc == 4, "fit agrees with recovered (0,0,4)");
    const CheckList sel = verify_sasaki_einstein_like(s.inputs());
    for (const auto& check : sel.checks)
        c.expect(check.status != CheckStatus::fail, sel.verifier + ": " + check.name);

    const Analysis f(builtin_example("f5dim3"));
    c.expect(f.pack.nabla_ricci.is_zero(), "f5dim3: nabla rho = 0");
    c.expect(f.einstein.ok() && f.einstein.label == "Einstein", "f5dim3: Einstein");
    const CheckList tf = verify_theorem_torse(f.inputs());
    expect_check(c, tf, "Ricci-symmetric iff Einstein");
    return c;
}

Criterion eta_ricci_calculator()
{
    Criterion c("eta-Ricci constants from tau");
    const auto b = eta_ricci_from_tau(Rational(-3, 2), 1);
    c.expect(b.exact && b.branches.size() == 2, "tau = -3/2: two exact branches");
    if (b.branches.size() == 2) {
        std::set<std::pair<Rational, Rational>> got;
        for (const auto& br : b.branches)
            got.insert({br.lambda, br.nu});
        const std::set<std::pair<Rational, Rational>> want{{Rational(1), Rational(-1, 2)}, {Rational(0), Rational(1, 2)}};
        c.expect(got == want, "tau = -3/2: {(1,-1/2), (0,1/2)}");
    }
    c.expect(b.case_label == 2, "tau = -3/2 is the boundary case 2");

    const auto b6 = eta_ricci_from_tau(-6, 1);
    const Report r = substitute_and_rerun(builtin_example("f5dim3"), {{"p", 1}});
    const auto& fit = r.body.at("fits").at("ricci_like_soliton");
    bool matched = false;
    for (const auto& br : b6.branches)
        if (br.epsilon == -1)
            matched = fit.at("lambda") == to_string(br.lambda) && fit.at("nu") == to_string(br.nu)
                && br.lambda == 3 && br.nu == -1;
    c.expect(matched, "tau = -6: eps = -1 branch equals f5dim3 (lambda, nu) at p = 1");
    return c;
}

std::string run_cli(const std::string& cli)
{
    const std::string cmd = "\"" + cli + "\" report --example sasaki5 --format json";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe)
        return {};
    std::string out;
    char buf[4096];
    while (const std::size_t n = fread(buf, 1, sizeof buf, pipe))
        out.append(buf, n);
    pclose(pipe);
    return out;
}

Criterion determinism(const char* cli)
{
    Criterion c("determinism and document round trip");
    if (cli) {
        const std::string first = run_cli(cli), second = run_cli(cli);
        c.expect(!first.empty(), "CLI produced output");
        c.expect(first == second, "CLI json report byte-identical across runs");
        c.expect(first == render_json(run_pipeline(builtin_example("sasaki5")).body), "CLI matches library report");
    }
    for (const auto& name : builtin_example_names()) {
        const Manifold m = builtin_example(name);
        const std::string a = render_json(run_pipeline(m).body);
        c.expect(a == render_json(run_pipeline(m).body), name + ": report identical across runs");
        c.expect(a == render_json(run_pipeline(parse_manifold(serialize_manifold(m))).body),
                 name + ": report preserved by document round trip");
    }
    return c;
}

} // namespace

int main(int argc, char** argv)
{
    const char* cli = argc > 1 ? argv[1] : nullptr;
    const std::vector<std::function<Criterion()>> criteria{
        sasaki5_end_to_end,    f5dim3_end_to_end,    sasaki_identity_suite,
        property_suites,       cross_formula_oracles, eta_ricci_calculator,
        [cli] { return determinism(cli); },
    };
    bool all = true;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        try {
            all = criteria[i]().report(static_cast<int>(i + 1)) && all;
        } catch (const std::exception& e) {
            std::cout << "[FAIL] criterion " << i + 1 << ": exception: " << e.what() << "\n";
            all = false;
        }
    }
    return all ? 0 : 1;
}
