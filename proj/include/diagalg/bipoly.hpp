#ifndef DIAGALG_BIPOLY_HPP
#define DIAGALG_BIPOLY_HPP

#include "diagalg/unipoly.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagalg {

// Dense bivariate polynomial: coeff(i, j) multiplies var1^i * var2^j.
// Trimmed so the outermost row and column are not all zero.
class BiPoly {
public:
    BiPoly(Var v1, Var v2) : v1_(v1), v2_(v2)
    {
        if (v1 == v2) throw std::invalid_argument("bivariate polynomial needs distinct variables");
    }
    BiPoly(Var v1, Var v2, std::vector<std::vector<Rational>> coeffs)
        : v1_(v1), v2_(v2), c_(std::move(coeffs))
    {
        if (v1 == v2) throw std::invalid_argument("bivariate polynomial needs distinct variables");
        trim();
    }

    static BiPoly zero(Var v1, Var v2) { return BiPoly(v1, v2); }
    static BiPoly one(Var v1, Var v2) { return BiPoly(v1, v2, {{Rational(1)}}); }
    static BiPoly constant(Var v1, Var v2, const Rational& c) { return BiPoly(v1, v2, {{c}}); }
    static BiPoly monomial(Var v1, Var v2, int i, int j, const Rational& c = Rational(1))
    {
        std::vector<std::vector<Rational>> m(i + 1);
        for (auto& row : m) row.assign(j + 1, Rational(0));
        m[i][j] = c;
        return BiPoly(v1, v2, std::move(m));
    }

    // Lift a univariate polynomial into the slot holding its variable.
    static BiPoly from_unipoly(const UniPoly& p, Var v1, Var v2)
    {
        BiPoly r(v1, v2);
        if (p.is_zero()) return r;
        if (p.var() == v1) {
            r.c_.resize(p.degree() + 1);
            for (int i = 0; i <= p.degree(); ++i) r.c_[i] = {p.coeff(i)};
        } else if (p.var() == v2) {
            r.c_.resize(1);
            r.c_[0] = p.coeffs();
        } else {
            throw std::invalid_argument("from_unipoly: variable not in pair");
        }
        r.trim();
        return r;
    }

    Var var1() const { return v1_; }
    Var var2() const { return v2_; }
    bool is_zero() const { return c_.empty(); }
    int degree1() const { return static_cast<int>(c_.size()) - 1; }
    int degree2() const
    {
        int d = -1;
        for (const auto& row : c_) d = std::max(d, static_cast<int>(row.size()) - 1);
        return d;
    }
    int degree(Var v) const
    {
        if (v == v1_) return degree1();
        if (v == v2_) return degree2();
        throw std::invalid_argument("degree: variable not in pair");
    }

    Rational coeff(int i, int j) const
    {
        if (i < 0 || i >= static_cast<int>(c_.size())) return Rational(0);
        const auto& row = c_[i];
        if (j < 0 || j >= static_cast<int>(row.size())) return Rational(0);
        return row[j];
    }

    // Coefficient of v^k as a univariate polynomial in the other variable.
    UniPoly coeff_in(Var v, int k) const
    {
        if (v == v1_) {
            UniPoly r(v2_);
            if (k >= 0 && k < static_cast<int>(c_.size())) r = UniPoly(v2_, c_[k]);
            return r;
        }
        if (v == v2_) {
            std::vector<Rational> cs(c_.size());
            for (size_t i = 0; i < c_.size(); ++i) cs[i] = coeff(int(i), k);
            return UniPoly(v1_, std::move(cs));
        }
        throw std::invalid_argument("coeff_in: variable not in pair");
    }

    // Coefficients ascending in v, each a UniPoly in the other variable.
    std::vector<UniPoly> coeffs_in(Var v) const
    {
        int d = degree(v);
        std::vector<UniPoly> out;
        out.reserve(d + 1);
        for (int k = 0; k <= d; ++k) out.push_back(coeff_in(v, k));
        return out;
    }

    friend BiPoly operator+(const BiPoly& a, const BiPoly& b)
    {
        a.check_vars(b);
        BiPoly r(a.v1_, a.v2_);
        size_t rows = std::max(a.c_.size(), b.c_.size());
        r.c_.resize(rows);
        for (size_t i = 0; i < rows; ++i) {
            size_t cols = 0;
            if (i < a.c_.size()) cols = std::max(cols, a.c_[i].size());
            if (i < b.c_.size()) cols = std::max(cols, b.c_[i].size());
            r.c_[i].assign(cols, Rational(0));
            for (size_t j = 0; j < cols; ++j)
                r.c_[i][j] = a.coeff(int(i), int(j)) + b.coeff(int(i), int(j));
        }
        r.trim();
        return r;
    }
    friend BiPoly operator-(const BiPoly& a, const BiPoly& b) { return a + (-b); }
    BiPoly operator-() const
    {
        BiPoly r(v1_, v2_);
        r.c_ = c_;
        for (auto& row : r.c_)
            for (auto& c : row) c = -c;
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b)
    {
        a.check_vars(b);
        BiPoly r(a.v1_, a.v2_);
        if (a.is_zero() || b.is_zero()) return r;
        int d1 = a.degree1() + b.degree1();
        int d2 = a.degree2() + b.degree2();
        r.c_.resize(d1 + 1);
        for (auto& row : r.c_) row.assign(d2 + 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < a.c_[i].size(); ++j) {
                if (a.c_[i][j] == 0) continue;
                for (size_t k = 0; k < b.c_.size(); ++k)
                    for (size_t l = 0; l < b.c_[k].size(); ++l)
                        r.c_[i + k][j + l] += a.c_[i][j] * b.c_[k][l];
            }
        r.trim();
        return r;
    }
    friend BiPoly operator*(const BiPoly& a, const Rational& s)
    {
        BiPoly r = a;
        for (auto& row : r.c_)
            for (auto& c : row) c = c * s;
        r.trim();
        return r;
    }
    friend bool operator==(const BiPoly& a, const BiPoly& b)
    {
        return a.v1_ == b.v1_ && a.v2_ == b.v2_ && a.c_ == b.c_;
    }

    BiPoly differentiate(Var v) const
    {
        if (v != v1_ && v != v2_) throw std::invalid_argument("differentiate: variable not in pair");
        BiPoly r(v1_, v2_);
        r.c_ = c_;
        if (v == v1_) {
            if (r.c_.empty()) return r;
            for (size_t i = 1; i < r.c_.size(); ++i)
                for (auto& c : r.c_[i]) c = c * Rational(Int(i));
            r.c_.erase(r.c_.begin());
        } else {
            for (auto& row : r.c_) {
                for (size_t j = 1; j < row.size(); ++j) row[j] = row[j] * Rational(Int(j));
                if (!row.empty()) row.erase(row.begin());
            }
        }
        r.trim();
        return r;
    }

    Rational evaluate(const Rational& u, const Rational& v) const
    {
        Rational acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            Rational row(0);
            for (auto jt = it->rbegin(); jt != it->rend(); ++jt) row = row * v + *jt;
            acc = acc * u + row;
        }
        return acc;
    }

    void check_vars(const BiPoly& other) const
    {
        if (v1_ != other.v1_ || v2_ != other.v2_)
            throw std::invalid_argument("bivariate variable mismatch");
    }

    // Human-readable form, written as a polynomial in var2 with coefficients
    // in var1, highest var2 power first: "(256*t^2 + 107*t - 32)*A^4 + ...".
    std::string str() const
    {
        if (is_zero()) return "0";
        std::string out;
        for (int j = degree2(); j >= 0; --j) {
            UniPoly cj = coeff_in(v2_, j);
            if (cj.is_zero()) continue;
            bool neg = false;
            if (cj.is_constant() && cj.constant_value() < 0) {
                neg = true;
                cj = -cj;
            }
            std::string piece;
            if (j == 0) {
                piece = cj.is_constant() ? cj.str() : "(" + cj.str() + ")";
            } else {
                std::string pow = std::string(var_name(v2_)) + (j > 1 ? "^" + std::to_string(j) : "");
                if (cj == UniPoly::one(v1_))
                    piece = pow;
                else if (cj.is_constant())
                    piece = cj.str() + "*" + pow;
                else
                    piece = "(" + cj.str() + ")*" + pow;
            }
            if (out.empty())
                out += (neg ? "-" : "") + piece;
            else
                out += (neg ? " - " : " + ") + piece;
        }
        return out;
    }

private:
    void trim()
    {
        for (auto& row : c_)
            while (!row.empty() && row.back() == 0) row.pop_back();
        while (!c_.empty() && c_.back().empty()) c_.pop_back();
        if (c_.size() == 1 && c_[0].empty()) c_.clear();
    }

    Var v1_, v2_;
    std::vector<std::vector<Rational>> c_;
};

// Splits f = c * g with c rational, g having coprime integer coefficients
// and a positive coefficient on the lexicographically largest monomial
// (var1 degree first, then var2 degree).
inline std::pair<Rational, BiPoly> content_and_primitive(const BiPoly& f)
{
    if (f.is_zero()) throw std::invalid_argument("content of zero polynomial");
    Int g = 0, l = 1;
    for (int i = 0; i <= f.degree1(); ++i)
        for (int j = 0; j <= f.degree2(); ++j) {
            Rational c = f.coeff(i, j);
            if (c == 0) continue;
            g = gcd(g, abs(numerator(c)));
            l = lcm(l, denominator(c));
        }
    Rational content(g, l);
    // sign from the lexicographically largest monomial
    Rational lead(0);
    for (int i = f.degree1(); i >= 0 && lead == 0; --i)
        for (int j = f.degree2(); j >= 0; --j)
            if (f.coeff(i, j) != 0) {
                lead = f.coeff(i, j);
                break;
            }
    if (lead < 0) content = -content;
    return {content, f * (Rational(1) / content)};
}

inline BiPoly exact_div(const BiPoly& a, const BiPoly& b)
{
    if (b.is_zero()) throw std::invalid_argument("division by zero polynomial");
    if (a.is_zero()) return BiPoly::zero(a.var1(), a.var2());
    a.check_vars(b);
    // division in var1 with UniPoly coefficients in var2
    Var v = a.var1();
    BiPoly r = a, q = BiPoly::zero(a.var1(), a.var2());
    int db = b.degree1();
    UniPoly lb = b.coeff_in(v, db);
    while (!r.is_zero() && r.degree1() >= db) {
        int dr = r.degree1();
        UniPoly lr = r.coeff_in(v, dr);
        UniPoly qc = exact_div(lr, lb); // throws if not exact
        BiPoly term = BiPoly::from_unipoly(qc, a.var1(), a.var2());
        term = term * BiPoly::monomial(a.var1(), a.var2(), dr - db, 0);
        q = q + term;
        r = r - term * b;
        if (!r.is_zero() && r.degree1() == dr) throw std::logic_error("exact_div: division not exact");
    }
    if (!r.is_zero()) throw std::logic_error("exact_div: division not exact");
    return q;
}

} // namespace diagalg

#endif
