#pragma once

#include "acb/polynomial.hpp"
#include "acb/rational.hpp"

#include <map>
#include <ostream>
#include <string>

namespace acb {

/// Exact rational function num/den in the session parameters.
///
/// Invariants: den is non-zero with leading coefficient 1 (monic under grlex);
/// num == 0 implies den == 1. Common monomial factors and exact polynomial
/// divisors are cancelled; full multivariate GCD reduction is not attempted,
/// so equality is decided by cross-multiplication.
class Scalar {
public:
    /// The parameter-free zero.
    Scalar();
    /// Parameter-free constant, compatible with every parameter set.
    Scalar(const Rational& value); // NOLINT(google-explicit-constructor)
    Scalar(long value); // NOLINT(google-explicit-constructor)
    Scalar(int value) : Scalar(static_cast<long>(value)) {} // NOLINT(google-explicit-constructor)
    explicit Scalar(Polynomial num);
    Scalar(Polynomial num, Polynomial den);

    static Scalar parameter(const ParameterSet& params, std::size_t index);

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    const ParameterSet& parameters() const { return num_.parameters(); }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    /// Value of a constant Scalar; throws DomainError otherwise.
    Rational constant_value() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& b);
    Scalar& operator-=(const Scalar& b);
    Scalar& operator*=(const Scalar& b);
    /// Throws ArithmeticError when b is zero.
    Scalar& operator/=(const Scalar& b);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    Scalar pow(unsigned exponent) const;

    /// Canonical text, e.g. `p + 2*p^2`, `(1 + p)/p^2`.
    std::string to_string() const;

    /// Semantic equality of rational functions (cross-multiplication).
    friend bool operator==(const Scalar& a, const Scalar& b);

private:
    void normalize();

    Polynomial num_;
    Polynomial den_;
};

inline std::ostream& operator<<(std::ostream& os, const Scalar& s)
{
    return os << s.to_string();
}

inline bool is_zero(const Scalar& s)
{
    return s.is_zero();
}

Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b);

/// Parameter name -> value.
using Assignment = std::map<std::string, Rational, std::less<>>;

/// Exact value at a full parameter assignment. Throws EvaluationError when an
/// occurring parameter is unassigned or the denominator vanishes.
Rational substitute(const Scalar& a, const Assignment& assignment);

} // namespace acb
