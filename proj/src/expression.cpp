#include "acb/expression.hpp"

#include "acb/errors.hpp"

#include <cctype>
#include <string>

namespace acb {

namespace {

class Parser {
public:
    Parser(std::string_view text, const ParameterSet& params)
        : text_(text)
        , params_(params)
    {
    }

    Scalar parse()
    {
        Scalar value = expr();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected '" + std::string(1, text_[pos_]) + "'");
        return value;
    }

private:
    [[noreturn]] void fail(const std::string& what) const
    {
        throw ParseError("expression '" + std::string(text_) + "' column " + std::to_string(pos_ + 1) + ": " + what);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char ch)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == ch) {
            ++pos_;
            return true;
        }
        return false;
    }

    std::string digits()
    {
        const std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        return std::string(text_.substr(start, pos_ - start));
    }

    Scalar expr()
    {
        Scalar value = term();
        for (;;) {
            if (accept('+'))
                value += term();
            else if (accept('-'))
                value -= term();
            else
                return value;
        }
    }

    Scalar term()
    {
        Scalar value = unary();
        while (accept('*'))
            value *= unary();
        return value;
    }

    Scalar unary()
    {
        if (accept('-'))
            return -unary();
        return power();
    }

    Scalar power()
    {
        Scalar base = primary();
        if (accept('^')) {
            skip_space();
            const std::string exp = digits();
            if (exp.empty())
                fail("expected a non-negative integer exponent");
            if (exp.size() > 4)
                fail("exponent too large");
            return base.pow(static_cast<unsigned>(std::stoul(exp)));
        }
        return base;
    }

    Scalar primary()
    {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of expression");
        const char ch = text_[pos_];
        if (ch == '(') {
            ++pos_;
            Scalar inner = expr();
            if (!accept(')'))
                fail("expected ')'");
            return inner;
        }
        if (std::isdigit(static_cast<unsigned char>(ch))) {
            std::string literal = digits();
            if (pos_ < text_.size() && text_[pos_] == '/') {
                ++pos_;
                const std::string den = digits();
                if (den.empty())
                    fail("'/' is only allowed inside a numeric literal");
                literal += "/" + den;
            }
            try {
                return Scalar(Polynomial(params_, parse_rational(literal)));
            } catch (const ParseError& e) {
                fail(e.what());
            }
        }
        if (std::isalpha(static_cast<unsigned char>(ch))) {
            const std::size_t start = pos_;
            while (pos_ < text_.size()
                   && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            const auto name = text_.substr(start, pos_ - start);
            const auto index = params_.index_of(name);
            if (!index) {
                pos_ = start;
                fail("unknown parameter '" + std::string(name) + "'");
            }
            return Scalar::parameter(params_, *index);
        }
        fail("unexpected '" + std::string(1, ch) + "'");
    }

    std::string_view text_;
    const ParameterSet& params_;
    std::size_t pos_ = 0;
};

} // namespace

Scalar parse_expression(std::string_view text, const ParameterSet& params)
{
    return Parser(text, params).parse();
}

} // namespace acb
