#ifndef DIAGALG_RATFUNC_HPP
#define DIAGALG_RATFUNC_HPP

#include "diagalg/unipoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>

namespace diagalg {

// Rational function num/den in one variable. Always kept reduced
// (gcd(num, den) = 1) with a monic denominator.
class RatFunc {
public:
    explicit RatFunc(Var v) : num_(UniPoly::zero(v)), den_(UniPoly::one(v)) {}
    RatFunc(UniPoly num, UniPoly den) : num_(std::move(num)), den_(std::move(den))
    {
        num_.check_var(den_);
        if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
        normalize();
    }
    /*implicit*/ RatFunc(const UniPoly& p) : num_(p), den_(UniPoly::one(p.var())) {}

    static RatFunc constant(Var v, const Rational& c)
    {
        return RatFunc(UniPoly::constant(v, c), UniPoly::one(v));
    }

    const UniPoly& num() const { return num_; }
    const UniPoly& den() const { return den_; }
    Var var() const { return num_.var(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == UniPoly::one(var()) && den_ == UniPoly::one(var()); }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    RatFunc operator-() const
    {
        RatFunc r(var());
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b)
    {
        return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b)
    {
        if (b.is_zero()) throw std::invalid_argument("division by zero rational function");
        return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
    }
    friend bool operator==(const RatFunc& a, const RatFunc& b)
    {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    RatFunc inverse() const
    {
        if (is_zero()) throw std::invalid_argument("inverse of zero rational function");
        return RatFunc(den_, num_);
    }

    RatFunc derivative() const
    {
        return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
    }

    Rational evaluate(const Rational& x) const
    {
        Rational d = den_.evaluate(x);
        if (d == 0) throw std::invalid_argument("rational function pole at evaluation point");
        return num_.evaluate(x) / d;
    }

    std::string str() const
    {
        if (den_ == UniPoly::one(var())) return num_.str();
        return "(" + num_.str() + ")/(" + den_.str() + ")";
    }

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = UniPoly::one(var());
            return;
        }
        UniPoly g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = exact_div(num_, g);
            den_ = exact_div(den_, g);
        }
        Rational lc = den_.leading();
        if (lc != 1) {
            Rational inv = Rational(1) / lc;
            num_ = num_ * inv;
            den_ = den_ * inv;
        }
    }

    UniPoly num_, den_;
};

} // namespace diagalg

#endif
