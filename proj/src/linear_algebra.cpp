#include "acb/linear_algebra.hpp"

#include "acb/errors.hpp"

#include <algorithm>
#include <utility>

namespace acb {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = Scalar(1);
    return m;
}

Matrix Matrix::transposed() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

bool Matrix::is_symmetric() const
{
    if (rows_ != cols_)
        return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if (!((*this)(r, c) == (*this)(c, r)))
                return false;
    return true;
}

Matrix operator*(const Matrix& a, const Matrix& b)
{
    if (a.cols_ != b.rows_)
        throw StructuralError("matrix product shape mismatch");
    Matrix m(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Scalar& x = a(r, k);
            if (x.is_zero())
                continue;
            for (std::size_t c = 0; c < b.cols_; ++c)
                if (!b(k, c).is_zero())
                    m(r, c) += x * b(k, c);
        }
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
        throw StructuralError("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t i = 0; i < m.data_.size(); ++i)
        m.data_[i] += b.data_[i];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b)
{
    return a + Scalar(-1) * b;
}

Matrix operator*(const Scalar& s, const Matrix& m)
{
    Matrix r = m;
    for (auto& x : r.data_)
        x *= s;
    return r;
}

bool operator==(const Matrix& a, const Matrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

/// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m, std::size_t pivot_cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < pivot_cols && row < m.rows(); ++col) {
        std::size_t sel = row;
        while (sel < m.rows() && m(sel, col).is_zero())
            ++sel;
        if (sel == m.rows())
            continue;
        if (sel != row)
            for (std::size_t c = 0; c < m.cols(); ++c)
                std::swap(m(sel, c), m(row, c));
        const Scalar inv = Scalar(1) / m(row, col);
        for (std::size_t c = 0; c < m.cols(); ++c)
            m(row, c) *= inv;
        for (std::size_t r = 0; r < m.rows(); ++r) {
            if (r == row || m(r, col).is_zero())
                continue;
            const Scalar factor = m(r, col);
            for (std::size_t c = 0; c < m.cols(); ++c)
                if (!m(row, c).is_zero())
                    m(r, c) -= factor * m(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

Matrix inverse(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw StructuralError("cannot invert a non-square matrix");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = Scalar(1);
    }
    if (row_reduce(aug, n).size() != n)
        throw StructuralError("matrix is singular over the Scalar field");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = aug(r, n + c);
    return inv;
}

std::size_t rank(const Matrix& m)
{
    Matrix copy = m;
    return row_reduce(copy, m.cols()).size();
}

std::string to_string(SolveStatus status)
{
    switch (status) {
    case SolveStatus::unique:
        return "unique";
    case SolveStatus::inconsistent:
        return "inconsistent";
    case SolveStatus::underdetermined:
        return "underdetermined";
    }
    return "?";
}

SolveOutcome solve_linear_system(const Matrix& a, const std::vector<Scalar>& b)
{
    if (a.rows() != b.size())
        throw StructuralError("right-hand side length does not match the system");
    const std::size_t n = a.cols();

    struct PivotRow {
        std::size_t col;
        std::vector<Scalar> coeff;
        Scalar rhs;
    };
    std::vector<PivotRow> pivots;

    SolveOutcome out;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        std::vector<Scalar> row(n);
        for (std::size_t c = 0; c < n; ++c)
            row[c] = a(r, c);
        Scalar rhs = b[r];
        for (const auto& pv : pivots) {
            if (row[pv.col].is_zero())
                continue;
            const Scalar factor = row[pv.col];
            for (std::size_t c = 0; c < n; ++c)
                if (!pv.coeff[c].is_zero())
                    row[c] -= factor * pv.coeff[c];
            rhs -= factor * pv.rhs;
        }
        const auto lead = std::find_if(row.begin(), row.end(), [](const Scalar& s) { return !s.is_zero(); });
        if (lead == row.end()) {
            if (!rhs.is_zero() && !out.witness_row) {
                out.witness_row = r;
                out.witness_residual = rhs;
            }
            continue;
        }
        const auto col = static_cast<std::size_t>(lead - row.begin());
        const Scalar inv = Scalar(1) / row[col];
        for (auto& x : row)
            x *= inv;
        rhs *= inv;
        pivots.push_back({col, std::move(row), std::move(rhs)});
    }

    if (out.witness_row) {
        out.status = SolveStatus::inconsistent;
        return out;
    }

    // Back substitution into reduced form.
    std::sort(pivots.begin(), pivots.end(), [](const PivotRow& x, const PivotRow& y) { return x.col < y.col; });
    for (std::size_t i = pivots.size(); i-- > 0;) {
        const auto& pv = pivots[i];
        for (std::size_t j = 0; j < i; ++j) {
            auto& other = pivots[j];
            if (other.coeff[pv.col].is_zero())
                continue;
            const Scalar factor = other.coeff[pv.col];
            for (std::size_t c = 0; c < n; ++c)
                if (!pv.coeff[c].is_zero())
                    other.coeff[c] -= factor * pv.coeff[c];
            other.rhs -= factor * pv.rhs;
        }
    }

    out.solution.assign(n, Scalar(0));
    std::vector<bool> is_pivot(n, false);
    for (const auto& pv : pivots) {
        out.solution[pv.col] = pv.rhs;
        is_pivot[pv.col] = true;
    }
    if (pivots.size() == n) {
        out.status = SolveStatus::unique;
        return out;
    }
    out.status = SolveStatus::underdetermined;
    for (std::size_t f = 0; f < n; ++f) {
        if (is_pivot[f])
            continue;
        std::vector<Scalar> dir(n, Scalar(0));
        dir[f] = Scalar(1);
        for (const auto& pv : pivots)
            dir[pv.col] = -pv.coeff[f];
        out.free_directions.push_back(std::move(dir));
    }
    return out;
}

Inertia inertia(const Matrix& m)
{
    if (!m.is_symmetric())
        throw DomainError("inertia requires a symmetric matrix");
    const std::size_t n = m.rows();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a[r][c] = m(r, c).constant_value();

    // Symmetric elimination by congruence. A zero diagonal with a non-zero
    // off-diagonal entry a_kj is repaired with e_k -> e_k + e_j (or - e_j).
    Inertia out;
    std::vector<bool> done(n, false);
    for (std::size_t step = 0; step < n; ++step) {
        std::size_t k = n;
        for (std::size_t i = 0; i < n && k == n; ++i)
            if (!done[i] && sgn(a[i][i]) != 0)
                k = i;
        if (k == n) {
            std::size_t i = n, j = n;
            for (std::size_t x = 0; x < n && i == n; ++x)
                for (std::size_t y = 0; y < n; ++y)
                    if (!done[x] && !done[y] && x != y && sgn(a[x][y]) != 0) {
                        i = x;
                        j = y;
                        break;
                    }
            if (i == n)
                break;
            const int s = sgn(a[i][i] + 2 * a[i][j] + a[j][j]) != 0 ? 1 : -1;
            for (std::size_t c = 0; c < n; ++c)
                a[i][c] += s * a[j][c];
            for (std::size_t r = 0; r < n; ++r)
                a[r][i] += s * a[r][j];
            k = i;
        }
        const Rational pivot = a[k][k];
        (sgn(pivot) > 0 ? out.positive : out.negative) += 1;
        done[k] = true;
        for (std::size_t r = 0; r < n; ++r) {
            if (done[r] || sgn(a[r][k]) == 0)
                continue;
            const Rational f = a[r][k] / pivot;
            for (std::size_t c = 0; c < n; ++c)
                a[r][c] -= f * a[k][c];
        }
        for (std::size_t c = 0; c < n; ++c)
            if (!done[c])
                a[k][c] = 0;
        for (std::size_t r = 0; r < n; ++r)
            if (!done[r])
                a[r][k] = 0;
    }
    out.zero = n - out.positive - out.negative;
    return out;
}

} // namespace acb
