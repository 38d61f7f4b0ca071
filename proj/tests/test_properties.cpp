#include "acb/curvature.hpp"
#include "acb/soliton.hpp"
#include "acb/structure.hpp"

#include "random_cases.hpp"

#include <gtest/gtest.h>

using namespace acb;

namespace {

using acb::test::RandomCase;

const std::vector<RandomCase>& cases()
{
    return acb::test::random_cases();
}

std::string first_issue(const ValidationReport& r)
{
    return r.ok() ? "" : r.issues.front().relation + " residual " + r.issues.front().residual;
}

} // namespace

TEST(RandomCases, AreValid)
{
    ASSERT_GE(cases().size(), 200u);
    for (const auto& c : cases()) {
        const auto report = validate_manifold(c.m);
        EXPECT_TRUE(report.ok()) << c.seed_info << ": " << first_issue(report);
    }
}

TEST(RandomCases, LeviCivitaTorsionFreeAndMetric)
{
    for (const auto& c : cases()) {
        const auto r = check_connection(c.m, levi_civita(c.m));
        EXPECT_TRUE(r.ok()) << c.seed_info << ": " << first_issue(r);
    }
}

TEST(RandomCases, RiemannSymmetriesAndBianchi)
{
    for (const auto& c : cases()) {
        const Tensor r = riemann(c.m, levi_civita(c.m));
        const auto report = check_riemann_symmetries(r);
        EXPECT_TRUE(report.ok()) << c.seed_info << ": " << first_issue(report);
    }
}

TEST(RandomCases, FundamentalTensorIdentities)
{
    for (const auto& c : cases()) {
        const Connection conn = levi_civita(c.m);
        const auto r = check_fundamental_identities(c.m, conn, fundamental_tensor(c.m, conn));
        EXPECT_TRUE(r.ok()) << c.seed_info << ": " << first_issue(r);
    }
}

TEST(RandomCases, LeeFormIdentities)
{
    for (const auto& c : cases()) {
        const Connection conn = levi_civita(c.m);
        const LeeForms lee = lee_forms(c.m, fundamental_tensor(c.m, conn));
        const auto r = check_lee_identities(c.m, lee);
        EXPECT_TRUE(r.ok()) << c.seed_info << ": " << first_issue(r);
        EXPECT_TRUE(pair(lee.omega, c.m.structure.xi).is_zero()) << c.seed_info;
    }
}

TEST(RandomCases, EinsteinLikeFitRoundTrip)
{
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 5);
    for (const auto& c : cases()) {
        const Matrix gt = associated_metric(c.m);
        const auto random_rational = [&] { return Scalar(Rational(Rational(num(rng)) / den(rng))); };
        const Scalar a = random_rational(), b = random_rational(), cc = random_rational();
        const ConstantFit fit = fit_constants(c.m, einstein_like_form(c.m, gt, a, b, cc), gt);
        ASSERT_TRUE(fit.ok()) << c.seed_info;
        EXPECT_EQ(fit[0], a) << c.seed_info;
        EXPECT_EQ(fit[1], b) << c.seed_info;
        EXPECT_EQ(fit[2], cc) << c.seed_info;
    }
}

TEST(RandomCases, FitsAgreeWithScalarCurvature)
{
    for (const auto& c : cases()) {
        const CurvaturePack pack = compute_curvature(c.m);
        const EinsteinLikeFit e = fit_einstein_like(c.m, pack.ricci, pack.g_tilde);
        if (e.ok())
            EXPECT_TRUE(e.tau_consistent) << c.seed_info;
        const SolitonFit s = fit_ricci_like_soliton(c.m, pack.lie_xi_g, pack.ricci, pack.g_tilde);
        if (s.ok())
            EXPECT_TRUE(s.tau_consistent) << c.seed_info;
    }
}

TEST(RandomCases, SasakiLikeExcludesTorseForming)
{
    for (const auto& c : cases()) {
        const Connection conn = levi_civita(c.m);
        const bool sasaki = is_sasaki_like(c.m, conn).holds;
        const bool torse = detect_torse_forming_xi(c.m, conn).present;
        EXPECT_FALSE(sasaki && torse) << c.seed_info;
    }
}
