#pragma once

#include "acb/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace acb {

/// Dense row-major matrix over the Scalar field.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows)
        , cols_(cols)
        , data_(rows * cols)
    {
    }

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Matrix transposed() const;
    bool is_zero() const;
    bool is_symmetric() const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Scalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

/// Inverse by Gauss-Jordan elimination; throws StructuralError when singular.
Matrix inverse(const Matrix& m);
std::size_t rank(const Matrix& m);

enum class SolveStatus { unique, inconsistent, underdetermined };

/// Exact result of solving A x = b over the Scalar field.
struct SolveOutcome {
    SolveStatus status = SolveStatus::inconsistent;
    /// The solution (unique) or a particular solution with free unknowns at 0
    /// (underdetermined). Empty when inconsistent.
    std::vector<Scalar> solution;
    /// First equation (row of A) that contradicts the previous ones.
    std::optional<std::size_t> witness_row;
    /// Residual 0 = residual left on the witness row after elimination.
    Scalar witness_residual;
    /// Basis of the null space of A (only when underdetermined).
    std::vector<std::vector<Scalar>> free_directions;
};

std::string to_string(SolveStatus status);

/// Row-by-row elimination: every equation is checked, so an inconsistent
/// system reports the first contradicting row. Pivots are chosen as the first
/// Scalar that is not identically zero, i.e. the solution is generic in the
/// parameters.
SolveOutcome solve_linear_system(const Matrix& a, const std::vector<Scalar>& b);

/// Sylvester inertia of a parameter-free symmetric matrix.
struct Inertia {
    std::size_t positive = 0;
    std::size_t negative = 0;
    std::size_t zero = 0;
};

/// Throws DomainError when an entry is not a constant.
Inertia inertia(const Matrix& m);

} // namespace acb
