#ifndef DIAGALG_SERIES_HPP
#define DIAGALG_SERIES_HPP

#include "diagalg/ratfunc.hpp"
#include "diagalg/unipoly.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace diagalg {

// Truncated formal power series with exact rational coefficients: the
// coefficients c0..cN are stored and everything in O(t^{N+1}) is dropped.
// Mixed-order operations truncate to the smaller order.
class TruncSeries {
public:
    explicit TruncSeries(int order) : c_(order + 1)
    {
        if (order < 0) throw std::invalid_argument("negative truncation order");
    }
    TruncSeries(int order, std::vector<Rational> coeffs) : c_(std::move(coeffs))
    {
        if (order < 0) throw std::invalid_argument("negative truncation order");
        c_.resize(order + 1);
    }

    static TruncSeries constant(const Rational& c, int order)
    {
        TruncSeries s(order);
        s.c_[0] = c;
        return s;
    }
    static TruncSeries identity(int order) // the series t
    {
        TruncSeries s(order);
        if (order >= 1) s.c_[1] = 1;
        return s;
    }

    int order() const { return static_cast<int>(c_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational coeff(int i) const
    {
        if (i < 0 || i > order()) return Rational(0);
        return c_[i];
    }
    bool is_zero() const
    {
        return std::all_of(c_.begin(), c_.end(), [](const Rational& c) { return c == 0; });
    }
    // Lowest index with a nonzero coefficient, or -1 when zero through order.
    int first_nonzero() const
    {
        for (int i = 0; i <= order(); ++i)
            if (c_[i] != 0) return i;
        return -1;
    }

    TruncSeries truncate(int new_order) const
    {
        if (new_order >= order()) return *this;
        return TruncSeries(new_order, std::vector<Rational>(c_.begin(), c_.begin() + new_order + 1));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b)
    {
        int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b)
    {
        int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    TruncSeries operator-() const
    {
        TruncSeries r(order());
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b)
    {
        int n = std::min(a.order(), b.order());
        TruncSeries r(n);
        for (int i = 0; i <= n; ++i) {
            if (a.c_[i] == 0) continue;
            for (int j = 0; i + j <= n; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
        }
        return r;
    }
    friend TruncSeries operator*(const TruncSeries& a, const Rational& s)
    {
        TruncSeries r(a.order());
        for (size_t i = 0; i < a.c_.size(); ++i) r.c_[i] = a.c_[i] * s;
        return r;
    }
    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.c_ == b.c_; }

    // Multiplicative inverse by term recursion; needs a nonzero constant term.
    TruncSeries inverse() const
    {
        if (c_[0] == 0) throw std::invalid_argument("series not invertible");
        int n = order();
        TruncSeries r(n);
        Rational inv0 = Rational(1) / c_[0];
        r.c_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            Rational acc(0);
            for (int j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
            r.c_[k] = -acc * inv0;
        }
        return r;
    }

    TruncSeries pow_trunc(unsigned long e) const
    {
        TruncSeries r = constant(Rational(1), order());
        TruncSeries base = *this;
        while (e) {
            if (e & 1u) r = r * base;
            if (e >>= 1u) base = base * base;
        }
        return r;
    }

    // Formal derivative; loses one order of truncation.
    TruncSeries derivative() const
    {
        if (order() == 0) throw std::invalid_argument("derivative of order-0 truncation");
        TruncSeries r(order() - 1);
        for (int i = 1; i <= order(); ++i) r.c_[i - 1] = c_[i] * Rational(Int(i));
        return r;
    }

    // Multiply by t^k, keeping the truncation order.
    TruncSeries shift_up(int k) const
    {
        TruncSeries r(order());
        for (int i = 0; i + k <= order(); ++i) r.c_[i + k] = c_[i];
        return r;
    }

private:
    std::vector<Rational> c_;
};

// p(s) for a univariate polynomial p; no variable check (the polynomial's
// formal variable is substituted away).
inline TruncSeries compose(const UniPoly& p, const TruncSeries& s)
{
    TruncSeries acc(s.order());
    for (int i = p.degree(); i >= 0; --i)
        acc = acc * s + TruncSeries::constant(p.coeff(i), s.order());
    return acc;
}

// First N+1 Taylor coefficients of a rational function with den(0) != 0.
inline TruncSeries expand_ratfunc(const RatFunc& f, int N)
{
    if (f.den().coeff(0) == 0) throw std::invalid_argument("pole at origin");
    TruncSeries num = compose(f.num(), TruncSeries::identity(N));
    TruncSeries den = compose(f.den(), TruncSeries::identity(N));
    return num * den.inverse();
}

// The unique series y(t) with y(0) = 0 and y = t*f(y), by fixed-point
// iteration (each pass is good for one more order).
inline TruncSeries revert(const RatFunc& f, int N)
{
    if (f.den().coeff(0) == 0 || f.num().coeff(0) == 0)
        throw std::invalid_argument("reversion requires f(0) != 0");
    TruncSeries y(N);
    for (int pass = 0; pass <= N; ++pass) {
        TruncSeries num = compose(f.num(), y);
        TruncSeries den = compose(f.den(), y);
        TruncSeries next = (num * den.inverse()).shift_up(1);
        if (next == y) break;
        y = next;
    }
    return y;
}

// a(n) = [x^n] f(x)^n for n = 0..n_max in one sweep: the window of the
// first n_max+1 coefficients of f^n is carried from n to n+1 by one
// polynomial multiplication and one polynomial division, O(deg f * n_max)
// coefficient operations per step.
inline std::vector<Rational> diagonal_sequence(const RatFunc& f, long n_max)
{
    if (f.den().coeff(0) == 0) throw std::invalid_argument("pole at origin");
    if (n_max < 0) throw std::invalid_argument("diagonal_sequence: negative range");
    const int B = static_cast<int>(n_max);
    const UniPoly& num = f.num();
    const UniPoly& den = f.den();
    const Rational d0_inv = Rational(1) / den.coeff(0);

    std::vector<Rational> g(B + 1);
    g[0] = 1; // f^0
    std::vector<Rational> out{Rational(1)};
    std::vector<Rational> h(B + 1);
    for (long n = 1; n <= n_max; ++n) {
        // g <- (g * num) / den, truncated at order B
        std::fill(h.begin(), h.end(), Rational(0));
        for (int i = 0; i <= num.degree(); ++i) {
            if (num.coeff(i) == 0) continue;
            for (int k = 0; k + i <= B; ++k) h[k + i] += num.coeff(i) * g[k];
        }
        for (int k = 0; k <= B; ++k) {
            Rational acc = h[k];
            for (int j = 1; j <= den.degree() && j <= k; ++j) acc -= den.coeff(j) * g[k - j];
            g[k] = acc * d0_inv;
        }
        out.push_back(g[int(n)]);
    }
    return out;
}

// [x^n] f(x)^n.
inline Rational diagonal_coeff(const RatFunc& f, long n)
{
    if (n < 0) throw std::invalid_argument("diagonal_coeff: negative index");
    if (n == 0) return Rational(1);
    TruncSeries fx = expand_ratfunc(f, int(n));
    return fx.pow_trunc(static_cast<unsigned long>(n)).coeff(int(n));
}

} // namespace diagalg

#endif
