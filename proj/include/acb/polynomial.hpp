#pragma once

#include "acb/rational.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace acb {

/// Ordered list of symbolic parameter names shared by every value of one
/// computation. Copies share storage; equality compares the names.
class ParameterSet {
public:
    ParameterSet();
    explicit ParameterSet(std::vector<std::string> names);

    std::size_t size() const { return names_->size(); }
    bool empty() const { return names_->empty(); }
    const std::vector<std::string>& names() const { return *names_; }
    const std::string& name(std::size_t i) const { return (*names_)[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const ParameterSet& a, const ParameterSet& b);

private:
    std::shared_ptr<const std::vector<std::string>> names_;
};

/// The common parameter set of two operands. A parameter-free operand is
/// compatible with anything; two different non-empty sets throw StructuralError.
const ParameterSet& unify(const ParameterSet& a, const ParameterSet& b);

/// Exponent vector, one entry per parameter.
using Monomial = std::vector<unsigned>;

/// Graded lexicographic order: total degree first, then lexicographic with
/// the first parameter most significant.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Multivariate polynomial with rational coefficients. Zero coefficients are
/// never stored; terms iterate in ascending graded lexicographic order.
class Polynomial {
public:
    using Terms = std::map<Monomial, Rational, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(ParameterSet params);
    Polynomial(ParameterSet params, const Rational& constant);

    static Polynomial variable(const ParameterSet& params, std::size_t index);

    const ParameterSet& parameters() const { return params_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Coefficient of the constant monomial.
    Rational constant_term() const;
    unsigned total_degree() const;
    /// Largest term under GrlexLess. Requires a non-zero polynomial.
    const Monomial& leading_monomial() const;
    const Rational& leading_coefficient() const;
    /// Parameters with a positive exponent in some term.
    std::vector<std::size_t> support() const;

    /// Same polynomial expressed over `params`; the current set must be empty
    /// or equal to it.
    Polynomial promoted(const ParameterSet& params) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }

    Polynomial scaled(const Rational& factor) const;
    Polynomial pow(unsigned exponent) const;

    /// Quotient when `divisor` divides this polynomial exactly.
    std::optional<Polynomial> divide_exact(const Polynomial& divisor) const;
    /// Multivariate division by leading terms: returns (quotient, remainder).
    std::pair<Polynomial, Polynomial> divide_with_remainder(const Polynomial& divisor) const;

    /// Divides by the monomial with the given exponents (each must be <= the
    /// minimum exponent present).
    Polynomial divided_by_monomial(const Monomial& m) const;
    /// Componentwise minimum exponent over all terms (zero polynomial: all zeros).
    Monomial min_exponents() const;

    /// Evaluates with values[i] substituted for parameter i.
    Rational evaluate(std::span<const Rational> values) const;

    /// Canonical text, e.g. `p + 2*p^2`, `-1/2*q`, `0`.
    std::string to_string() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b);

private:
    void add_term(const Monomial& m, const Rational& c);

    ParameterSet params_;
    Terms terms_;
};

/// Monic greatest common divisor of two polynomials that involve at most one
/// common parameter; nothing when they are genuinely multivariate.
std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b);

} // namespace acb
