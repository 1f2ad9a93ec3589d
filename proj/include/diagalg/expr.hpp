#ifndef DIAGALG_EXPR_HPP
#define DIAGALG_EXPR_HPP

#include "diagalg/ratfunc.hpp"

#include <cctype>
#include <stdexcept>
#include <string>

namespace diagalg {

struct ParseError : std::runtime_error {
    size_t position;
    ParseError(const std::string& msg, size_t pos)
        : std::runtime_error(msg + " at position " + std::to_string(pos)), position(pos)
    {
    }
};

namespace detail {

// Grammar (standard precedence, ^ binds tightest, non-negative integer
// exponents only):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*' | '/') factor)*
//   factor := '-'* base ('^' uint)?
//   base   := uint | 'x' | '(' expr ')'
class RatFuncParser {
public:
    explicit RatFuncParser(const std::string& s) : s_(s) {}

    RatFunc parse()
    {
        RatFunc r = expr();
        skip_ws();
        if (pos_ != s_.size()) throw ParseError("unexpected character '" + std::string(1, s_[pos_]) + "'", pos_);
        return r;
    }

private:
    void skip_ws()
    {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool accept(char c)
    {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }
    char peek()
    {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    RatFunc expr()
    {
        RatFunc r = term();
        while (true) {
            if (accept('+'))
                r = r + term();
            else if (accept('-'))
                r = r - term();
            else
                return r;
        }
    }

    RatFunc term()
    {
        RatFunc r = factor();
        while (true) {
            if (accept('*')) {
                r = r * factor();
            } else if (accept('/')) {
                size_t at = pos_;
                RatFunc d = factor();
                if (d.is_zero()) throw ParseError("division by zero", at);
                r = r / d;
            } else {
                return r;
            }
        }
    }

    RatFunc factor()
    {
        bool neg = false;
        while (accept('-')) neg = !neg;
        RatFunc b = base();
        if (accept('^')) {
            skip_ws();
            size_t at = pos_;
            if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
                throw ParseError("expected non-negative integer exponent", at);
            unsigned long e = parse_uint();
            RatFunc p = RatFunc::constant(Var::x, 1);
            for (unsigned long k = 0; k < e; ++k) p = p * b;
            b = p;
        }
        return neg ? -b : b;
    }

    RatFunc base()
    {
        skip_ws();
        if (pos_ >= s_.size()) throw ParseError("unexpected end of expression", pos_);
        char c = s_[pos_];
        if (c == '(') {
            size_t open = pos_++;
            RatFunc r = expr();
            if (!accept(')')) throw ParseError("unbalanced parenthesis", open);
            return r;
        }
        if (c == 'x') {
            ++pos_;
            return RatFunc(UniPoly::monomial(Var::x, 1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                digits += s_[pos_++];
            return RatFunc::constant(Var::x, Rational(Int(digits)));
        }
        throw ParseError("unexpected character '" + std::string(1, c) + "'", pos_);
    }

    unsigned long parse_uint()
    {
        std::string digits;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
            digits += s_[pos_++];
        return std::stoul(digits);
    }

    const std::string& s_;
    size_t pos_ = 0;
};

} // namespace detail

// Parses an arithmetic expression over x into a normalized RatFunc.
inline RatFunc parse_ratfunc(const std::string& expr)
{
    return detail::RatFuncParser(expr).parse();
}

} // namespace diagalg

#endif
