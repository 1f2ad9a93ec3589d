#ifndef DIAGALG_UNIPOLY_HPP
#define DIAGALG_UNIPOLY_HPP

#include "diagalg/rational.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagalg {

// Closed set of variable tags; checked at operation boundaries so that a
// polynomial in t never silently mixes with one in n or y.
enum class Var : unsigned char { t, n, y, x, A };

inline const char* var_name(Var v)
{
    switch (v) {
        case Var::t: return "t";
        case Var::n: return "n";
        case Var::y: return "y";
        case Var::x: return "x";
        case Var::A: return "A";
    }
    return "?";
}

// Dense univariate polynomial over Rational. Zero polynomial has an empty
// coefficient list; otherwise the top coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(Var v) : var_(v) {}
    UniPoly(Var v, std::vector<Rational> coeffs) : var_(v), c_(std::move(coeffs)) { trim(); }

    static UniPoly zero(Var v) { return UniPoly(v); }
    static UniPoly one(Var v) { return UniPoly(v, {Rational(1)}); }
    static UniPoly constant(Var v, const Rational& c) { return UniPoly(v, {c}); }
    static UniPoly monomial(Var v, int exp, const Rational& c = Rational(1))
    {
        std::vector<Rational> cs(exp + 1);
        cs[exp] = c;
        return UniPoly(v, std::move(cs));
    }

    Var var() const { return var_; }
    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; } // -1 for zero
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational coeff(int i) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        return c_[i];
    }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }

    bool is_constant() const { return c_.size() <= 1; }
    Rational constant_value() const { return coeff(0); }

    friend UniPoly operator+(const UniPoly& a, const UniPoly& b)
    {
        a.check_var(b);
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) + b.coeff(int(i));
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator-(const UniPoly& a, const UniPoly& b)
    {
        a.check_var(b);
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()));
        for (size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(int(i)) - b.coeff(int(i));
        return UniPoly(a.var_, std::move(r));
    }
    UniPoly operator-() const
    {
        std::vector<Rational> r(c_.size());
        for (size_t i = 0; i < c_.size(); ++i) r[i] = -c_[i];
        return UniPoly(var_, std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b)
    {
        a.check_var(b);
        if (a.is_zero() || b.is_zero()) return zero(a.var_);
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator*(const UniPoly& a, const Rational& s)
    {
        std::vector<Rational> r(a.c_.size());
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] = a.c_[i] * s;
        return UniPoly(a.var_, std::move(r));
    }
    friend UniPoly operator*(const Rational& s, const UniPoly& a) { return a * s; }

    friend bool operator==(const UniPoly& a, const UniPoly& b)
    {
        return a.var_ == b.var_ && a.c_ == b.c_;
    }

    UniPoly pow(unsigned e) const
    {
        UniPoly r = one(var_), base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            base = base * base;
            e >>= 1u;
        }
        return r;
    }

    UniPoly derivative() const
    {
        if (c_.size() <= 1) return zero(var_);
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(Int(i));
        return UniPoly(var_, std::move(r));
    }

    Rational evaluate(const Rational& x) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    // Substitute another polynomial for the variable (Horner).
    UniPoly compose(const UniPoly& inner) const
    {
        UniPoly acc = zero(inner.var());
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            acc = acc * inner + constant(inner.var(), *it);
        return acc;
    }

    // Positive rational c such that (*this)/c has coprime integer
    // coefficients. Zero polynomial has content 0.
    Rational integer_content() const
    {
        if (is_zero()) return Rational(0);
        Int g = 0, l = 1;
        for (const auto& c : c_) {
            if (c == 0) continue;
            g = gcd(g, abs(numerator(c)));
            l = lcm(l, denominator(c));
        }
        return Rational(g, l);
    }

    void check_var(const UniPoly& other) const
    {
        if (var_ != other.var_)
            throw std::invalid_argument(std::string("variable mismatch: ") + var_name(var_) +
                                        " vs " + var_name(other.var_));
    }

    std::string str() const
    {
        if (is_zero()) return "0";
        std::string out;
        for (int i = degree(); i >= 0; --i) {
            const Rational& c = c_[i];
            if (c == 0) continue;
            bool neg = c < 0;
            Rational a = neg ? Rational(-c) : c;
            if (out.empty())
                out += neg ? "-" : "";
            else
                out += neg ? " - " : " + ";
            std::string coeff_str = rat_to_string(a);
            if (i == 0) {
                out += coeff_str;
            } else {
                if (a != 1) out += coeff_str + "*";
                out += var_name(var_);
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    Var var_;
    std::vector<Rational> c_;
};

// Quotient/remainder over the rationals; divisor must be nonzero.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b)
{
    a.check_var(b);
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    UniPoly q = UniPoly::zero(a.var()), r = a;
    const Rational lb = b.leading();
    while (!r.is_zero() && r.degree() >= b.degree()) {
        Rational c = r.leading() / lb;
        int k = r.degree() - b.degree();
        UniPoly m = UniPoly::monomial(a.var(), k, c);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

inline UniPoly exact_div(const UniPoly& a, const UniPoly& b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("exact_div: division not exact");
    return q;
}

namespace detail {

// Clear denominators and divide out the integer content; empty vector = 0.
inline std::vector<Int> primitive_int_coeffs(const UniPoly& p)
{
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, denominator(c));
    std::vector<Int> out;
    out.reserve(p.coeffs().size());
    Int content = 0;
    for (const auto& c : p.coeffs()) {
        out.push_back(numerator(c) * (den / denominator(c)));
        content = gcd(content, out.back());
    }
    if (content > 1)
        for (auto& c : out) c /= content;
    return out;
}

} // namespace detail

// Monic gcd over the rationals, computed by a primitive pseudo-remainder
// sequence over the integers to avoid rational coefficient swell.
inline UniPoly gcd(const UniPoly& a, const UniPoly& b)
{
    a.check_var(b);
    if (a.is_zero() && b.is_zero()) throw std::invalid_argument("gcd(0, 0) undefined");
    std::vector<Int> f = detail::primitive_int_coeffs(a), g = detail::primitive_int_coeffs(b);
    if (f.size() < g.size()) std::swap(f, g);
    while (!g.empty()) {
        // primitive part of prem(f, g)
        const Int& lg = g.back();
        std::vector<Int> r = f;
        while (r.size() >= g.size()) {
            Int top = r.back();
            r.pop_back();
            if (top == 0) continue;
            for (auto& c : r) c *= lg;
            size_t k = r.size() + 1 - g.size();
            for (size_t j = 0; j + 1 < g.size(); ++j) r[k + j] -= top * g[j];
            while (!r.empty() && r.back() == 0) r.pop_back();
        }
        Int content = 0;
        for (const auto& c : r) content = gcd(content, c);
        if (content > 1)
            for (auto& c : r) c /= content;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.back() < 0)
        for (auto& c : f) c = -c;
    std::vector<Rational> cs;
    cs.reserve(f.size());
    const Int& lead = f.back();
    for (const auto& c : f) cs.emplace_back(c, lead);
    return UniPoly(a.var(), std::move(cs));
}

inline UniPoly lcm(const UniPoly& a, const UniPoly& b)
{
    if (a.is_zero() || b.is_zero()) return UniPoly::zero(a.var());
    UniPoly l = exact_div(a * b, gcd(a, b));
    return l * (Rational(1) / l.leading());
}

} // namespace diagalg

#endif
