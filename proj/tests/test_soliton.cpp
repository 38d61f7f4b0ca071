#include "acb/curvature.hpp"
#include "acb/errors.hpp"
#include "acb/examples.hpp"
#include "acb/soliton.hpp"
#include "acb/verifiers.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

using namespace acb;
using acb::test::expr;

namespace {

struct Analysis {
    Manifold m;
    CurvaturePack pack;
    EinsteinLikeFit einstein;
    SolitonFit soliton;
    TorseForming torse;
    bool sasaki_like;
    bool f5;

    explicit Analysis(const std::string& name)
        : m(builtin_example(name))
        , pack(compute_curvature(m))
        , einstein(fit_einstein_like(m, pack.ricci, pack.g_tilde))
        , soliton(fit_ricci_like_soliton(m, pack.lie_xi_g, pack.ricci, pack.g_tilde))
        , torse(detect_torse_forming_xi(m, pack.connection))
        , sasaki_like(is_sasaki_like(m, pack.connection).holds)
        , f5(torse.present && check_f5_condition(m, pack.connection, torse.f))
    {
    }

    AnalysisInputs inputs() const { return {m, pack, einstein, soliton, torse, sasaki_like, f5}; }
};

void expect_all_pass(const CheckList& list)
{
    EXPECT_FALSE(list.skipped) << list.verifier << ": " << list.note;
    for (const auto& c : list.checks)
        EXPECT_NE(c.status, CheckStatus::fail) << list.verifier << ": " << c.name << " " << c.detail;
}

bool has_label(const CheckList& list, const std::string& label)
{
    return std::find(list.labels.begin(), list.labels.end(), label) != list.labels.end();
}

} // namespace

TEST(Classification, Predicates)
{
    const Analysis s("sasaki5"), f("f5dim3"), flat("flat3");
    EXPECT_FALSE(is_cosymplectic(s.pack.F));
    EXPECT_FALSE(is_cosymplectic(f.pack.F));
    EXPECT_TRUE(is_cosymplectic(flat.pack.F));

    EXPECT_TRUE(s.sasaki_like);
    EXPECT_FALSE(f.sasaki_like);
    EXPECT_FALSE(flat.sasaki_like);

    EXPECT_FALSE(s.torse.present);
    EXPECT_TRUE(s.torse.witness.has_value());
    ASSERT_TRUE(f.torse.present);
    EXPECT_EQ(f.torse.f, expr(f.m, "-p"));
    EXPECT_FALSE(f.torse.parallel);
    ASSERT_TRUE(flat.torse.present);
    EXPECT_TRUE(flat.torse.parallel);
}

TEST(Classification, F5Condition)
{
    const Analysis s("sasaki5"), f("f5dim3"), flat("flat3");
    EXPECT_TRUE(f.f5);
    EXPECT_TRUE(check_f5_condition(flat.m, flat.pack.connection, Scalar(0)));
    for (const char* trial : {"0", "1", "-1", "p", "q"})
        EXPECT_FALSE(check_f5_condition(s.m, s.pack.connection, expr(s.m, trial))) << trial;
}

TEST(SasakiLike, ResidualAtWitness)
{
    const Analysis f("f5dim3");
    const auto r = is_sasaki_like(f.m, f.pack.connection);
    EXPECT_FALSE(r.holds);
    // (∇_{e_1}φ)e_0 = p φe_1 = p e_2 against -e_1; F(e_1,e_0,e_2) = -p confirms the sign
    EXPECT_EQ(r.residual(1, 0, 1), Scalar(1));
    EXPECT_EQ(r.residual(1, 0, 2), expr(f.m, "p"));
}

TEST(Fits, EinsteinLike)
{
    const Analysis s("sasaki5"), f("f5dim3"), flat("flat3");
    ASSERT_TRUE(s.einstein.ok());
    EXPECT_EQ(s.einstein.a(), Scalar(0));
    EXPECT_EQ(s.einstein.b(), Scalar(0));
    EXPECT_EQ(s.einstein.c(), Scalar(4));
    EXPECT_EQ(s.einstein.label, "eta-Einstein");
    EXPECT_TRUE(s.einstein.tau_consistent);

    ASSERT_TRUE(f.einstein.ok());
    EXPECT_EQ(f.einstein.a(), expr(f.m, "-2*p^2"));
    EXPECT_EQ(f.einstein.b(), Scalar(0));
    EXPECT_EQ(f.einstein.c(), Scalar(0));
    EXPECT_EQ(f.einstein.label, "Einstein");

    ASSERT_TRUE(flat.einstein.ok());
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_TRUE(flat.einstein[i].is_zero());
    EXPECT_EQ(flat.einstein.label, "Einstein");
}

TEST(Fits, NotEinsteinLikeGivesWitness)
{
    const Manifold m = builtin_example("f5dim3");
    Matrix target(3, 3);
    target(1, 2) = target(2, 1) = 1;
    target(1, 1) = 1; // forces a = 1, but (2,2) needs a = 0
    const ConstantFit fit = fit_constants(m, target, associated_metric(m));
    EXPECT_FALSE(fit.ok());
    EXPECT_EQ(fit.outcome.status, SolveStatus::inconsistent);
    EXPECT_TRUE(fit.witness.has_value());
}

TEST(Fits, RicciLikeSoliton)
{
    const Analysis s("sasaki5"), f("f5dim3"), flat("flat3");
    ASSERT_TRUE(s.soliton.ok());
    EXPECT_EQ(s.soliton.lambda(), Scalar(0));
    EXPECT_EQ(s.soliton.mu(), Scalar(1));
    EXPECT_EQ(s.soliton.nu(), Scalar(-5));
    EXPECT_EQ(s.soliton.label, "Ricci-like soliton");
    EXPECT_TRUE(s.soliton.tau_consistent);

    ASSERT_TRUE(f.soliton.ok());
    EXPECT_EQ(f.soliton.lambda(), expr(f.m, "p + 2*p^2"));
    EXPECT_EQ(f.soliton.lambda().to_string(), "p + 2*p^2");
    EXPECT_EQ(f.soliton.mu(), Scalar(0));
    EXPECT_EQ(f.soliton.nu(), expr(f.m, "-p"));
    EXPECT_EQ(f.soliton.label, "eta-Ricci soliton");
    EXPECT_TRUE(f.soliton.tau_consistent);

    ASSERT_TRUE(flat.soliton.ok());
    for (std::size_t i = 0; i < 3; ++i)
        EXPECT_TRUE(flat.soliton[i].is_zero());
    EXPECT_EQ(flat.soliton.label, "Ricci soliton");
}

TEST(Fits, SumOfConstantsVanishes)
{
    for (const char* name : {"sasaki5", "f5dim3", "flat3"}) {
        const Analysis a(name);
        const Scalar sum = a.einstein.a() + a.einstein.b() + a.einstein.c() + a.soliton.lambda() + a.soliton.mu()
            + a.soliton.nu();
        EXPECT_TRUE(sum.is_zero()) << name;
        EXPECT_TRUE(a.pack.lee.omega == Vec(a.m.dim())) << name;
    }
}

TEST(SasakiSolitonConstants, Formula)
{
    const auto [l, m, n] = sasaki_soliton_constants(0, 0, 4);
    EXPECT_EQ(l, Scalar(0));
    EXPECT_EQ(m, Scalar(1));
    EXPECT_EQ(n, Scalar(-5));
    // Einstein Sasaki-like (b = c = 0, a = 2n) forces (-2n, 1, -1); n = 2
    const auto [l2, m2, n2] = sasaki_soliton_constants(4, 0, 0);
    EXPECT_EQ(l2, Scalar(-4));
    EXPECT_EQ(m2, Scalar(1));
    EXPECT_EQ(n2, Scalar(-1));
}

TEST(EtaRicciFromTau, Branches)
{
    const auto b6 = eta_ricci_from_tau(-6, 1);
    ASSERT_TRUE(b6.exact);
    EXPECT_EQ(b6.f_squared, Rational(1));
    ASSERT_EQ(b6.branches.size(), 2u);
    EXPECT_EQ(b6.branches[0].epsilon, 1);
    EXPECT_EQ(b6.branches[0].lambda, Rational(1));
    EXPECT_EQ(b6.branches[0].nu, Rational(1));
    EXPECT_EQ(b6.branches[1].epsilon, -1);
    EXPECT_EQ(b6.branches[1].lambda, Rational(3));
    EXPECT_EQ(b6.branches[1].nu, Rational(-1));
    EXPECT_EQ(b6.case_label, 1);

    const auto b32 = eta_ricci_from_tau(Rational(-3, 2), 1);
    ASSERT_EQ(b32.branches.size(), 2u);
    EXPECT_EQ(b32.case_label, 2);
    EXPECT_EQ(b32.branches[0].lambda, Rational(0));
    EXPECT_EQ(b32.branches[0].nu, Rational(1, 2));
    EXPECT_EQ(b32.branches[1].lambda, Rational(1));
    EXPECT_EQ(b32.branches[1].nu, Rational(-1, 2));

    EXPECT_EQ(eta_ricci_from_tau(Rational(-1, 2), 1).case_label, 3);
    EXPECT_FALSE(eta_ricci_from_tau(-2, 1).exact);
    EXPECT_THROW(eta_ricci_from_tau(0, 1), DomainError);
    EXPECT_THROW(eta_ricci_from_tau(1, 1), DomainError);
    EXPECT_THROW(eta_ricci_from_tau(-6, 0), DomainError);
}

TEST(Verifiers, Sasaki5)
{
    const Analysis s("sasaki5");
    const AnalysisInputs in = s.inputs();
    expect_all_pass(verify_einstein_like_properties(in));
    expect_all_pass(verify_sasaki_einstein_like(in));
    expect_all_pass(verify_soliton_geodesic_props(in));
    const CheckList thm = verify_theorem_sasaki(in);
    expect_all_pass(thm);
    EXPECT_TRUE(has_label(thm, "case (iii)"));
    EXPECT_FALSE(has_label(thm, "case (ii)"));
    EXPECT_TRUE(verify_theorem_torse(in).skipped);
    expect_all_pass(verify_sasaki_identities(s.m, s.pack));

    const CheckList sel = verify_sasaki_einstein_like(in);
    ASSERT_NE(sel.find("Einstein => tau = 2n(2n+1)"), nullptr);
    EXPECT_EQ(sel.find("Einstein => tau = 2n(2n+1)")->status, CheckStatus::not_applicable);
}

TEST(Verifiers, F5dim3)
{
    const Analysis f("f5dim3");
    const AnalysisInputs in = f.inputs();
    expect_all_pass(verify_einstein_like_properties(in));
    EXPECT_TRUE(verify_sasaki_einstein_like(in).skipped);
    EXPECT_TRUE(verify_theorem_sasaki(in).skipped);
    EXPECT_TRUE(verify_sasaki_identities(f.m, f.pack).skipped);
    expect_all_pass(verify_soliton_geodesic_props(in));
    const CheckList thm = verify_theorem_torse(in);
    expect_all_pass(thm);
    EXPECT_TRUE(has_label(thm, "case (iii)"));
    for (const char* name : {"a + lambda + f = 0", "b + mu = 0", "c + nu - f = 0", "2n f^2 = -(a+b+c)",
                             "k(x,xi) = -f^2 on xi-sections"}) {
        const Check* c = thm.find(name);
        ASSERT_NE(c, nullptr) << name;
        EXPECT_EQ(c->status, CheckStatus::pass) << name;
    }
}

TEST(Verifiers, TamperedFitFails)
{
    Analysis s("sasaki5");
    s.soliton.outcome.solution[2] = Scalar(-4); // ν off by one
    const CheckList thm = verify_theorem_sasaki(s.inputs());
    EXPECT_FALSE(thm.passed());
    const Check* c = thm.find("c + nu + 1 = 0");
    ASSERT_NE(c, nullptr);
    EXPECT_EQ(c->status, CheckStatus::fail);
    EXPECT_FALSE(c->detail.empty());
}
