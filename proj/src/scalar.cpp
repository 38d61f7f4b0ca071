#include "acb/scalar.hpp"

#include "acb/errors.hpp"

#include <vector>

namespace acb {

Scalar::Scalar()
    : num_(ParameterSet{})
    , den_(ParameterSet{}, Rational(1))
{
}

Scalar::Scalar(const Rational& value)
    : num_(ParameterSet{}, value)
    , den_(ParameterSet{}, Rational(1))
{
}

Scalar::Scalar(long value)
    : Scalar(Rational(value))
{
}

Scalar::Scalar(Polynomial num)
    : num_(std::move(num))
{
    den_ = Polynomial(num_.parameters(), Rational(1));
}

Scalar::Scalar(Polynomial num, Polynomial den)
{
    if (den.is_zero())
        throw ArithmeticError("division by the zero Scalar");
    const ParameterSet params = unify(num.parameters(), den.parameters());
    num_ = num.promoted(params);
    den_ = den.promoted(params);
    normalize();
}

Scalar Scalar::parameter(const ParameterSet& params, std::size_t index)
{
    return Scalar(Polynomial::variable(params, index));
}

Rational Scalar::constant_value() const
{
    if (!is_constant())
        throw DomainError("Scalar '" + to_string() + "' is not a constant");
    return num_.constant_term() / den_.constant_term();
}

void Scalar::normalize()
{
    const ParameterSet& params = num_.parameters();
    if (num_.is_zero()) {
        den_ = Polynomial(params, Rational(1));
        return;
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(1 / den_.constant_term());
        den_ = Polynomial(params, Rational(1));
        return;
    }

    // Common monomial factor.
    Monomial a = num_.min_exponents();
    const Monomial b = den_.min_exponents();
    bool any = false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] = std::min(a[i], b[i]);
        any = any || a[i] > 0;
    }
    if (any) {
        num_ = num_.divided_by_monomial(a);
        den_ = den_.divided_by_monomial(a);
    }

    if (auto q = num_.divide_exact(den_)) {
        num_ = std::move(*q);
        den_ = Polynomial(params, Rational(1));
        return;
    }
    if (auto q = den_.divide_exact(num_)) {
        den_ = std::move(*q);
        num_ = Polynomial(params, Rational(1));
    } else if (auto g = univariate_gcd(num_, den_); g && !g->is_constant()) {
        num_ = *num_.divide_exact(*g);
        den_ = *den_.divide_exact(*g);
    }

    const Rational lc = den_.leading_coefficient();
    if (lc != 1) {
        num_ = num_.scaled(1 / lc);
        den_ = den_.scaled(1 / lc);
    }
    if (den_.is_constant()) {
        num_ = num_.scaled(1 / den_.constant_term());
        den_ = Polynomial(params, Rational(1));
    }
}

Scalar Scalar::operator-() const
{
    Scalar r(*this);
    r.num_ = -r.num_;
    return r;
}

Scalar& Scalar::operator+=(const Scalar& b)
{
    if (den_ == b.den_) {
        num_ += b.num_;
        if (!(den_.parameters() == num_.parameters()))
            den_ = den_.promoted(num_.parameters());
    } else {
        num_ = num_ * b.den_ + b.num_ * den_;
        den_ = den_ * b.den_;
    }
    normalize();
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& b)
{
    return *this += -b;
}

Scalar& Scalar::operator*=(const Scalar& b)
{
    num_ *= b.num_;
    den_ *= b.den_;
    normalize();
    return *this;
}

Scalar& Scalar::operator/=(const Scalar& b)
{
    if (b.is_zero())
        throw ArithmeticError("division by the zero Scalar");
    num_ *= b.den_;
    den_ *= b.num_;
    normalize();
    return *this;
}

Scalar Scalar::pow(unsigned exponent) const
{
    Scalar r(num_.pow(exponent), den_.pow(exponent));
    return r;
}

std::string Scalar::to_string() const
{
    const auto wrap = [](const Polynomial& p) {
        const std::string s = p.to_string();
        return p.terms().size() > 1 ? "(" + s + ")" : s;
    };
    if (den_.is_constant())
        return num_.to_string();
    return wrap(num_) + "/" + wrap(den_);
}

bool operator==(const Scalar& a, const Scalar& b)
{
    return a.num_ * b.den_ == b.num_ * a.den_;
}

Scalar scalar_add(const Scalar& a, const Scalar& b)
{
    return a + b;
}

Scalar scalar_mul(const Scalar& a, const Scalar& b)
{
    return a * b;
}

Scalar scalar_div(const Scalar& a, const Scalar& b)
{
    return a / b;
}

Rational substitute(const Scalar& a, const Assignment& assignment)
{
    const ParameterSet& params = a.parameters();
    std::vector<Rational> values(params.size(), Rational(0));
    std::vector<bool> used(params.size(), false);
    for (std::size_t i : a.num().support())
        used[i] = true;
    for (std::size_t i : a.den().support())
        used[i] = true;
    for (std::size_t i = 0; i < params.size(); ++i) {
        const auto it = assignment.find(params.name(i));
        if (it != assignment.end())
            values[i] = it->second;
        else if (used[i])
            throw EvaluationError("no value assigned to parameter '" + params.name(i) + "'");
    }
    const Rational den = a.den().evaluate(values);
    if (sgn(den) == 0) {
        std::string point;
        for (std::size_t i = 0; i < params.size(); ++i)
            point += (i ? ", " : "") + params.name(i) + "=" + values[i].get_str();
        throw EvaluationError("denominator of '" + a.to_string() + "' vanishes at (" + point + ")");
    }
    return a.num().evaluate(values) / den;
}

} // namespace acb
