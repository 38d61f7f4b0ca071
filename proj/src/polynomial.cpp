#include "acb/polynomial.hpp"

#include "acb/errors.hpp"

#include <algorithm>
#include <numeric>

namespace acb {

// ParameterSet ---------------------------------------------------------------

ParameterSet::ParameterSet()
    : names_(std::make_shared<const std::vector<std::string>>())
{
}

ParameterSet::ParameterSet(std::vector<std::string> names)
    : names_(std::make_shared<const std::vector<std::string>>(std::move(names)))
{
}

std::optional<std::size_t> ParameterSet::index_of(std::string_view name) const
{
    const auto it = std::find(names_->begin(), names_->end(), name);
    if (it == names_->end())
        return std::nullopt;
    return static_cast<std::size_t>(it - names_->begin());
}

bool operator==(const ParameterSet& a, const ParameterSet& b)
{
    return a.names_ == b.names_ || *a.names_ == *b.names_;
}

const ParameterSet& unify(const ParameterSet& a, const ParameterSet& b)
{
    if (a == b || b.empty())
        return a;
    if (a.empty())
        return b;
    throw StructuralError("parameter-set mismatch between operands");
}

// Monomial order -------------------------------------------------------------

bool GrlexLess::operator()(const Monomial& a, const Monomial& b) const
{
    const auto da = std::accumulate(a.begin(), a.end(), 0u);
    const auto db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db)
        return da < db;
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

namespace {

Monomial multiply(const Monomial& a, const Monomial& b)
{
    Monomial r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

bool divides(const Monomial& d, const Monomial& m)
{
    for (std::size_t i = 0; i < d.size(); ++i)
        if (d[i] > m[i])
            return false;
    return true;
}

Monomial quotient(const Monomial& m, const Monomial& d)
{
    Monomial r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        r[i] = m[i] - d[i];
    return r;
}

} // namespace

// Polynomial -----------------------------------------------------------------

Polynomial::Polynomial(ParameterSet params)
    : params_(std::move(params))
{
}

Polynomial::Polynomial(ParameterSet params, const Rational& constant)
    : params_(std::move(params))
{
    add_term(Monomial(params_.size(), 0), constant);
}

Polynomial Polynomial::variable(const ParameterSet& params, std::size_t index)
{
    if (index >= params.size())
        throw StructuralError("parameter index out of range");
    Polynomial p(params);
    Monomial m(params.size(), 0);
    m[index] = 1;
    p.add_term(m, Rational(1));
    return p;
}

void Polynomial::add_term(const Monomial& m, const Rational& c)
{
    if (sgn(c) == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0)
            terms_.erase(it);
    }
}

bool Polynomial::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && total_degree() == 0);
}

Rational Polynomial::constant_term() const
{
    const auto it = terms_.find(Monomial(params_.size(), 0));
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned Polynomial::total_degree() const
{
    if (terms_.empty())
        return 0;
    const auto& m = terms_.rbegin()->first;
    return std::accumulate(m.begin(), m.end(), 0u);
}

const Monomial& Polynomial::leading_monomial() const
{
    if (terms_.empty())
        throw ArithmeticError("leading term of the zero polynomial");
    return terms_.rbegin()->first;
}

const Rational& Polynomial::leading_coefficient() const
{
    if (terms_.empty())
        throw ArithmeticError("leading term of the zero polynomial");
    return terms_.rbegin()->second;
}

std::vector<std::size_t> Polynomial::support() const
{
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < params_.size(); ++i)
        for (const auto& [m, c] : terms_)
            if (m[i] > 0) {
                out.push_back(i);
                break;
            }
    return out;
}

Polynomial Polynomial::promoted(const ParameterSet& params) const
{
    if (params_ == params)
        return *this;
    if (!params_.empty())
        throw StructuralError("parameter-set mismatch between operands");
    return Polynomial(params, constant_term());
}

Polynomial Polynomial::operator-() const
{
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_)
        c = -c;
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    if (&other == this) {
        *this = scaled(Rational(2));
        return *this;
    }
    const ParameterSet params = unify(params_, other.params_);
    if (!(params_ == params))
        *this = promoted(params);
    if (other.params_ == params) {
        for (const auto& [m, c] : other.terms_)
            add_term(m, c);
    } else {
        add_term(Monomial(params.size(), 0), other.constant_term());
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    return *this += -other;
}

Polynomial& Polynomial::operator*=(const Polynomial& other)
{
    const ParameterSet params = unify(params_, other.params_);
    const Polynomial lhs = promoted(params);
    const Polynomial rhs = other.promoted(params);
    Polynomial r(params);
    for (const auto& [ma, ca] : lhs.terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            r.add_term(multiply(ma, mb), ca * cb);
    *this = std::move(r);
    return *this;
}

Polynomial Polynomial::scaled(const Rational& factor) const
{
    if (sgn(factor) == 0)
        return Polynomial(params_);
    Polynomial r(*this);
    for (auto& [m, c] : r.terms_)
        c *= factor;
    return r;
}

Polynomial Polynomial::pow(unsigned exponent) const
{
    Polynomial result(params_, Rational(1));
    Polynomial base = *this;
    while (exponent > 0) {
        if (exponent & 1u)
            result *= base;
        exponent >>= 1u;
        if (exponent > 0)
            base *= base;
    }
    return result;
}

std::pair<Polynomial, Polynomial> Polynomial::divide_with_remainder(const Polynomial& divisor) const
{
    if (divisor.is_zero())
        throw ArithmeticError("polynomial division by zero");
    const ParameterSet params = unify(params_, divisor.params_);
    Polynomial rest = promoted(params);
    const Polynomial d = divisor.promoted(params);
    Polynomial quot(params);
    Polynomial rem(params);
    const auto& lm = d.leading_monomial();
    const auto& lc = d.leading_coefficient();
    while (!rest.is_zero()) {
        const Monomial m = rest.leading_monomial();
        const Rational c = rest.leading_coefficient();
        if (divides(lm, m)) {
            Polynomial t(params);
            t.add_term(quotient(m, lm), c / lc);
            quot += t;
            rest -= t * d;
        } else {
            Polynomial t(params);
            t.add_term(m, c);
            rem += t;
            rest -= t;
        }
    }
    return {std::move(quot), std::move(rem)};
}

std::optional<Polynomial> Polynomial::divide_exact(const Polynomial& divisor) const
{
    auto [q, r] = divide_with_remainder(divisor);
    if (!r.is_zero())
        return std::nullopt;
    return q;
}

Monomial Polynomial::min_exponents() const
{
    Monomial out(params_.size(), 0);
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (first) {
            out = m;
            first = false;
            continue;
        }
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = std::min(out[i], m[i]);
    }
    return out;
}

Polynomial Polynomial::divided_by_monomial(const Monomial& d) const
{
    Polynomial r(params_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(quotient(m, d), c);
    return r;
}

Rational Polynomial::evaluate(std::span<const Rational> values) const
{
    if (values.size() != params_.size())
        throw StructuralError("evaluation point has wrong number of parameters");
    Rational sum(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (std::size_t i = 0; i < m.size(); ++i)
            for (unsigned e = 0; e < m[i]; ++e)
                t *= values[i];
        sum += t;
    }
    return sum;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        const bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;

        const Rational mag = abs(c);
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += params_.name(i);
            if (m[i] > 1)
                mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero())
        return a.is_zero() && b.is_zero();
    if (!(a.params_ == b.params_)) {
        if (a.is_constant() && b.is_constant())
            return a.constant_term() == b.constant_term();
        return false;
    }
    return a.terms_ == b.terms_;
}

std::optional<Polynomial> univariate_gcd(const Polynomial& a, const Polynomial& b)
{
    auto sa = a.support();
    const auto sb = b.support();
    sa.insert(sa.end(), sb.begin(), sb.end());
    std::sort(sa.begin(), sa.end());
    sa.erase(std::unique(sa.begin(), sa.end()), sa.end());
    if (sa.size() > 1)
        return std::nullopt;

    const ParameterSet params = unify(a.parameters(), b.parameters());
    Polynomial x = a.promoted(params);
    Polynomial y = b.promoted(params);
    if (x.is_zero() && y.is_zero())
        return Polynomial(params);
    while (!y.is_zero()) {
        auto r = x.divide_with_remainder(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.scaled(1 / x.leading_coefficient());
}

} // namespace acb
