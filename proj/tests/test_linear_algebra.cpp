#include "acb/errors.hpp"
#include "acb/expression.hpp"
#include "acb/linear_algebra.hpp"

#include <gtest/gtest.h>

using namespace acb;

namespace {

const ParameterSet ps{{"p"}};

Matrix from_rows(const std::vector<std::vector<std::string>>& rows)
{
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m(r, c) = parse_expression(rows[r][c], ps);
    return m;
}

} // namespace

TEST(Matrix, InverseMatchesOracle)
{
    // inverse computed by hand with cofactors
    const Matrix a = from_rows({{"2", "1", "0"}, {"1", "1", "0"}, {"0", "0", "-1"}});
    EXPECT_EQ(inverse(a), from_rows({{"1", "-1", "0"}, {"-1", "2", "0"}, {"0", "0", "-1"}}));

    const Matrix b = from_rows({{"p", "1"}, {"0", "p"}});
    const Matrix bi = inverse(b);
    EXPECT_EQ(b * bi, Matrix::identity(2));
    EXPECT_EQ(bi(0, 1).to_string(), "-1/p^2");
}

TEST(Matrix, SingularThrows)
{
    EXPECT_THROW(inverse(from_rows({{"1", "2"}, {"2", "4"}})), StructuralError);
    EXPECT_THROW(inverse(from_rows({{"p", "p"}, {"1", "1"}})), StructuralError);
    EXPECT_EQ(rank(from_rows({{"1", "2"}, {"2", "4"}})), 1u);
}

TEST(Solve, Unique)
{
    const Matrix a = from_rows({{"1", "1"}, {"1", "-1"}, {"2", "0"}});
    const auto out = solve_linear_system(a, {Scalar(3), Scalar(1), Scalar(4)});
    ASSERT_EQ(out.status, SolveStatus::unique);
    EXPECT_EQ(out.solution[0], Scalar(2));
    EXPECT_EQ(out.solution[1], Scalar(1));
}

TEST(Solve, SymbolicCoefficients)
{
    const Scalar p = Scalar::parameter(ps, 0);
    const Matrix a = from_rows({{"p", "0"}, {"0", "1"}});
    const auto out = solve_linear_system(a, {p.pow(2), p});
    ASSERT_EQ(out.status, SolveStatus::unique);
    EXPECT_EQ(out.solution[0], p);
    EXPECT_EQ(out.solution[1], p);
}

TEST(Solve, InconsistentReportsFirstContradiction)
{
    const Matrix a = from_rows({{"1", "0"}, {"0", "1"}, {"1", "1"}, {"1", "0"}});
    const auto out = solve_linear_system(a, {Scalar(1), Scalar(1), Scalar(3), Scalar(1)});
    ASSERT_EQ(out.status, SolveStatus::inconsistent);
    ASSERT_TRUE(out.witness_row);
    EXPECT_EQ(*out.witness_row, 2u);
    EXPECT_EQ(out.witness_residual, Scalar(1));
    EXPECT_EQ(to_string(out.status), "inconsistent");
}

TEST(Solve, UnderdeterminedGivesNullspace)
{
    const Matrix a = from_rows({{"1", "1", "0"}, {"2", "2", "0"}});
    const auto out = solve_linear_system(a, {Scalar(2), Scalar(4)});
    ASSERT_EQ(out.status, SolveStatus::underdetermined);
    ASSERT_EQ(out.free_directions.size(), 2u);
    for (const auto& dir : out.free_directions) {
        Scalar lhs = 0;
        for (std::size_t j = 0; j < 3; ++j)
            lhs += a(0, j) * dir[j];
        EXPECT_TRUE(lhs.is_zero());
    }
    EXPECT_EQ(out.solution[0] + out.solution[1], Scalar(2));
}

TEST(Inertia, Signature)
{
    const auto in = inertia(from_rows({{"1", "0", "0"}, {"0", "1", "0"}, {"0", "0", "-1"}}));
    EXPECT_EQ(in.positive, 2u);
    EXPECT_EQ(in.negative, 1u);
    EXPECT_EQ(in.zero, 0u);

    // zero diagonal needs a congruence pivot
    const auto hyp = inertia(from_rows({{"0", "1"}, {"1", "0"}}));
    EXPECT_EQ(hyp.positive, 1u);
    EXPECT_EQ(hyp.negative, 1u);

    const auto deg = inertia(from_rows({{"1", "1"}, {"1", "1"}}));
    EXPECT_EQ(deg.positive, 1u);
    EXPECT_EQ(deg.zero, 1u);

    EXPECT_THROW(inertia(from_rows({{"p", "0"}, {"0", "1"}})), DomainError);
}
