#ifndef DIAGALG_RESULTANT_HPP
#define DIAGALG_RESULTANT_HPP

#include "diagalg/bipoly.hpp"
#include "diagalg/unipoly.hpp"

#include <stdexcept>
#include <vector>

namespace diagalg {

namespace ringops {

inline UniPoly zero_like(const UniPoly& p) { return UniPoly::zero(p.var()); }
inline UniPoly one_like(const UniPoly& p) { return UniPoly::one(p.var()); }
inline BiPoly zero_like(const BiPoly& p) { return BiPoly::zero(p.var1(), p.var2()); }
inline BiPoly one_like(const BiPoly& p) { return BiPoly::one(p.var1(), p.var2()); }

template <class R>
R pow(const R& base, unsigned e)
{
    R r = one_like(base), b = base;
    while (e) {
        if (e & 1u) r = r * b;
        if (e >>= 1u) b = b * b;
    }
    return r;
}

} // namespace ringops

namespace detail {

template <class R>
int vec_degree(const std::vector<R>& f)
{
    int d = static_cast<int>(f.size()) - 1;
    while (d >= 0 && f[d].is_zero()) --d;
    return d;
}

// Determinant by fraction-free (Bareiss) elimination; entries live in an
// integral domain with exact division.
template <class R>
R bareiss_determinant(std::vector<std::vector<R>> m, const R& sample)
{
    const size_t n = m.size();
    R prev = ringops::one_like(sample);
    bool negate = false;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) ++swap_row;
            if (swap_row == n) return ringops::zero_like(sample);
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = exact_div(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
            m[i][k] = ringops::zero_like(sample);
        }
        prev = m[k][k];
    }
    R det = m[n - 1][n - 1];
    if (negate) det = -det;
    return det;
}

} // namespace detail

// Resultant of f = sum f[i] v^i and g = sum g[j] v^j (coefficients ascending
// in the eliminated variable) as the Sylvester determinant. Coefficients live
// in any exact-division ring R (UniPoly or BiPoly here).
template <class R>
R sylvester_resultant(const std::vector<R>& f, const std::vector<R>& g)
{
    int df = detail::vec_degree(f), dg = detail::vec_degree(g);
    if (df < 0 || dg < 0) throw std::invalid_argument("zero polynomial has no resultant");
    const R& sample = df >= 0 ? f[0] : g[0];
    if (df == 0 && dg == 0)
        throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    if (dg == 0) return ringops::pow(g[0], unsigned(df));
    if (df == 0) return ringops::pow(f[0], unsigned(dg));

    const size_t n = size_t(df + dg);
    std::vector<std::vector<R>> m(n, std::vector<R>(n, ringops::zero_like(sample)));
    for (int r = 0; r < dg; ++r)
        for (int i = 0; i <= df; ++i) m[r][r + df - i] = f[i];
    for (int r = 0; r < df; ++r)
        for (int j = 0; j <= dg; ++j) m[dg + r][r + dg - j] = g[j];
    return detail::bareiss_determinant(std::move(m), sample);
}

// Independent route: subresultant polynomial remainder sequence.
template <class R>
R subresultant_resultant(std::vector<R> f, std::vector<R> g)
{
    auto deg = [](const std::vector<R>& p) { return detail::vec_degree(p); };
    int df = deg(f), dg = deg(g);
    if (df < 0 || dg < 0) throw std::invalid_argument("zero polynomial has no resultant");
    const R sample = f[0];
    if (df == 0 && dg == 0)
        throw std::invalid_argument("resultant needs positive degree in the eliminated variable");
    bool negate = false;
    if (df < dg) {
        std::swap(f, g);
        std::swap(df, dg);
        if ((df & 1) && (dg & 1)) negate = !negate;
    }
    if (dg == 0) {
        R r = ringops::pow(g[0], unsigned(df));
        return negate ? -r : r;
    }

    // pseudo-remainder: lc(g)^(df-dg+1) * f mod g
    auto prem = [&](const std::vector<R>& a, const std::vector<R>& b) {
        int da = deg(a), db = deg(b);
        std::vector<R> r = a;
        const R lb = b[db];
        for (int k = da; k >= db; --k) {
            R top = r[k];
            for (auto& c : r) c = c * lb;
            if (!top.is_zero())
                for (int j = 0; j <= db; ++j) r[k - db + j] = r[k - db + j] - top * b[j];
        }
        r.erase(r.begin() + db, r.end());
        return r;
    };

    R h = ringops::one_like(sample);
    R gprev = ringops::one_like(sample);
    while (true) {
        df = deg(f);
        dg = deg(g);
        int d = df - dg;
        if ((df & 1) && (dg & 1)) negate = !negate;
        std::vector<R> rem = prem(f, g);
        int dr = deg(rem);
        if (dr < 0) {
            if (dg == 0) break;
            return ringops::zero_like(sample); // common factor
        }
        // divide by g_prev * h^d
        R divisor = gprev * ringops::pow(h, unsigned(d));
        for (auto& c : rem) c = c.is_zero() ? c : exact_div(c, divisor);
        f = g;
        g = rem;
        g.resize(size_t(dr + 1), ringops::zero_like(sample));
        gprev = f[deg(f)];
        if (d > 0) h = exact_div(ringops::pow(gprev, unsigned(d)), ringops::pow(h, unsigned(d - 1)));
        if (deg(g) == 0) {
            int dfl = deg(f);
            R res = exact_div(ringops::pow(g[0], unsigned(dfl)), ringops::pow(h, unsigned(dfl - 1)));
            return negate ? -res : res;
        }
    }
    throw std::logic_error("subresultant_resultant: unreachable");
}

// Res_v(f, g) for two polynomials over the same variable pair; the result is
// univariate in the remaining variable.
inline UniPoly resultant(const BiPoly& f, const BiPoly& g, Var v)
{
    f.check_vars(g);
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial has no resultant");
    Var other = (v == f.var1()) ? f.var2() : f.var1();
    if (v != f.var1() && v != f.var2()) throw std::invalid_argument("resultant: variable not in pair");
    std::vector<UniPoly> fc = f.coeffs_in(v), gc = g.coeffs_in(v);
    if (fc.empty()) fc.push_back(UniPoly::zero(other));
    if (gc.empty()) gc.push_back(UniPoly::zero(other));
    return sylvester_resultant(fc, gc);
}

// Res_v(f, g) where f has variables (v, a) and g has variables (v, b) with
// a != b; the result mixes the survivors into a BiPoly in (a, b).
inline BiPoly resultant_cross(const BiPoly& f, const BiPoly& g, Var v)
{
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("zero polynomial has no resultant");
    Var a = (v == f.var1()) ? f.var2() : f.var1();
    Var b = (v == g.var1()) ? g.var2() : g.var1();
    if ((v != f.var1() && v != f.var2()) || (v != g.var1() && v != g.var2()))
        throw std::invalid_argument("resultant: variable not in pair");
    if (a == b) throw std::invalid_argument("resultant_cross: remaining variables coincide");
    std::vector<BiPoly> fc, gc;
    for (const auto& c : f.coeffs_in(v)) fc.push_back(BiPoly::from_unipoly(c, a, b));
    for (const auto& c : g.coeffs_in(v)) gc.push_back(BiPoly::from_unipoly(c, a, b));
    return sylvester_resultant(fc, gc);
}

} // namespace diagalg

#endif
