#ifndef DIAGALG_BURMANN_HPP
#define DIAGALG_BURMANN_HPP

#include "diagalg/bipoly.hpp"
#include "diagalg/ratfunc.hpp"
#include "diagalg/resultant.hpp"
#include "diagalg/series.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>

namespace diagalg {

using SequenceFn = std::function<Rational(long)>;

// Pair of polynomial relations tying the diagonal generating function A(t)
// of f to the auxiliary series y(t): P1(y, t) = 0 encodes y = t*f(y), and
// P2(y, A) = 0 encodes A = 1/(1 - t*f'(y)) with t eliminated through
// t*f'(y) = y*f'(y)/f(y).
struct ParametricSystem {
    BiPoly P1; // variables (y, t)
    BiPoly P2; // variables (y, A)
    RatFunc f; // the source, in x
};

struct AlgebraicEquation {
    BiPoly P; // variables (t, A), primitive, squarefree in A
    int degA;
    int degT;
};

struct CheckReport {
    bool pass = false;
    int first_fail = -1; // order (or index) of the first mismatch, -1 if none
    std::string detail;
};

namespace detail {

inline UniPoly reinterpret(const UniPoly& p, Var v)
{
    return UniPoly(v, p.coeffs());
}

// Divide out the positive integer content, keeping the constructed sign.
inline BiPoly primitive_keep_sign(const BiPoly& p)
{
    auto [c, prim] = content_and_primitive(p);
    if (c < 0) return -prim;
    return prim;
}

} // namespace detail

inline ParametricSystem parametric_system(const RatFunc& f)
{
    if (f.den().coeff(0) == 0 || f.num().coeff(0) == 0)
        throw std::invalid_argument("parametric_system requires f(0) != 0");

    UniPoly num = detail::reinterpret(f.num(), Var::y);
    UniPoly den = detail::reinterpret(f.den(), Var::y);

    // P1: y*den(y) - t*num(y), primitive with positive leading y-coefficient.
    BiPoly P1 = BiPoly::from_unipoly(UniPoly::monomial(Var::y, 1) * den, Var::y, Var::t) -
                BiPoly::from_unipoly(num, Var::y, Var::t) * BiPoly::monomial(Var::y, Var::t, 0, 1);
    P1 = detail::primitive_keep_sign(P1);
    if (P1.coeff_in(Var::y, P1.degree1()).leading() < 0) P1 = -P1;

    // L(y) = y*f'(y)/f(y) in lowest terms; P2 = A*(L.den - L.num) - L.den,
    // oriented so the constant (y^0 A^0) coefficient is negative, matching
    // the natural A*(1 - L) - 1 = 0 shape.
    RatFunc fy(num, den);
    RatFunc L = RatFunc(UniPoly::monomial(Var::y, 1)) * fy.derivative() / fy;
    UniPoly D = L.den(), Nm = L.num();
    BiPoly P2 = BiPoly::from_unipoly(D - Nm, Var::y, Var::A) * BiPoly::monomial(Var::y, Var::A, 0, 1) -
                BiPoly::from_unipoly(D, Var::y, Var::A);
    P2 = detail::primitive_keep_sign(P2);
    if (P2.coeff(0, 0) > 0) P2 = -P2;

    return ParametricSystem{std::move(P1), std::move(P2), f};
}

namespace detail {

// gcd of two polynomials in A with coefficients in Q(t), returned monic;
// operands given as ascending RatFunc coefficient vectors.
inline std::vector<RatFunc> field_gcd_in_A(std::vector<RatFunc> a, std::vector<RatFunc> b)
{
    auto deg = [](const std::vector<RatFunc>& p) {
        int d = static_cast<int>(p.size()) - 1;
        while (d >= 0 && p[d].is_zero()) --d;
        return d;
    };
    while (deg(b) >= 0) {
        // a mod b
        int db = deg(b);
        RatFunc lb = b[db];
        while (deg(a) >= db) {
            int da = deg(a);
            RatFunc q = a[da] / lb;
            for (int j = 0; j <= db; ++j) a[da - db + j] = a[da - db + j] - q * b[j];
            a.pop_back(); // leading term cancelled exactly
            if (da == db) break;
        }
        std::swap(a, b);
    }
    int da = deg(a);
    if (da < 0) throw std::invalid_argument("gcd(0, 0) undefined");
    a.erase(a.begin() + (da + 1), a.end());
    RatFunc lead = a[da];
    for (auto& c : a) c = c / lead;
    return a;
}

inline std::vector<RatFunc> bipoly_to_A_coeffs(const BiPoly& p)
{
    // p in (t, A): coefficients ascending in A, RatFunc in t
    std::vector<RatFunc> out;
    for (const auto& c : p.coeffs_in(Var::A)) out.emplace_back(c);
    return out;
}

// Clear denominators of an ascending coefficient vector in A back to a
// primitive BiPoly in (t, A) with the module sign convention.
inline BiPoly A_coeffs_to_bipoly(const std::vector<RatFunc>& cs)
{
    UniPoly l = UniPoly::one(Var::t);
    for (const auto& c : cs)
        if (!c.is_zero()) l = lcm(l, c.den());
    BiPoly out = BiPoly::zero(Var::t, Var::A);
    for (size_t j = 0; j < cs.size(); ++j) {
        if (cs[j].is_zero()) continue;
        UniPoly pj = cs[j].num() * exact_div(l, cs[j].den());
        out = out + BiPoly::from_unipoly(pj, Var::t, Var::A) *
                        BiPoly::monomial(Var::t, Var::A, 0, int(j));
    }
    return content_and_primitive(out).second;
}

} // namespace detail

// Squarefree part of P as a polynomial in A over Q(t): P / gcd(P, dP/dA),
// normalized primitive.
inline BiPoly squarefree_in_A(const BiPoly& P)
{
    auto pc = detail::bipoly_to_A_coeffs(P);
    auto dc = detail::bipoly_to_A_coeffs(P.differentiate(Var::A));
    auto g = detail::field_gcd_in_A(pc, dc);
    if (g.size() == 1) return content_and_primitive(P).second;
    // exact division of P by g in Q(t)[A]
    auto p = detail::bipoly_to_A_coeffs(P);
    int dg = static_cast<int>(g.size()) - 1;
    std::vector<RatFunc> q(p.size() - size_t(dg), RatFunc(Var::t));
    for (int k = static_cast<int>(p.size()) - 1; k >= dg; --k) {
        RatFunc c = p[k] / g[dg];
        q[k - dg] = c;
        if (!c.is_zero())
            for (int j = 0; j <= dg; ++j) p[k - dg + j] = p[k - dg + j] - c * g[j];
    }
    return detail::A_coeffs_to_bipoly(q);
}

inline AlgebraicEquation eliminate(const ParametricSystem& sys)
{
    BiPoly raw = resultant_cross(sys.P1, sys.P2, Var::y); // -> (t, A)
    if (raw.is_zero()) throw std::invalid_argument("degenerate system");
    BiPoly P = squarefree_in_A(content_and_primitive(raw).second);
    return AlgebraicEquation{P, P.degree2(), P.degree1()};
}

// Substitutes the truncated series A_N(t) = sum a(n) t^n into P and checks
// that everything vanishes through t^N.
inline CheckReport verify_algebraic(const AlgebraicEquation& eq, const SequenceFn& a, int N)
{
    if (N < eq.degA) throw std::invalid_argument("verify_algebraic: order below degA");
    std::vector<Rational> cs(N + 1);
    for (int n = 0; n <= N; ++n) cs[n] = a(n);
    TruncSeries A_series(N, std::move(cs));

    TruncSeries total(N);
    TruncSeries Apow = TruncSeries::constant(Rational(1), N);
    for (int j = 0; j <= eq.degA; ++j) {
        UniPoly cj = eq.P.coeff_in(Var::A, j);
        if (!cj.is_zero()) total = total + compose(cj, TruncSeries::identity(N)) * Apow;
        if (j < eq.degA) Apow = Apow * A_series;
    }
    CheckReport rep;
    int bad = total.first_nonzero();
    if (bad < 0) {
        rep.pass = true;
        rep.detail = "P(t, A_N(t)) = 0 through order " + std::to_string(N);
    } else {
        rep.first_fail = bad;
        rep.detail = "nonzero coefficient " + rat_to_string(total.coeff(bad)) + " at order " +
                     std::to_string(bad);
    }
    return rep;
}

// Reverts f, evaluates num(y)/den(y) as a truncated series, and compares
// coefficient-by-coefficient against the oracle.
inline CheckReport parametric_series_check(const RatFunc& f, const UniPoly& num_y,
                                           const UniPoly& den_y, const SequenceFn& a, int N)
{
    if (den_y.coeff(0) == 0)
        throw std::invalid_argument("parametric check: denominator constant term is zero");
    TruncSeries y = revert(f, N);
    TruncSeries s = compose(num_y, y) * compose(den_y, y).inverse();
    CheckReport rep;
    for (int n = 0; n <= N; ++n) {
        if (s.coeff(n) != a(n)) {
            rep.first_fail = n;
            rep.detail = "series coefficient " + rat_to_string(s.coeff(n)) + " != oracle " +
                         rat_to_string(a(n)) + " at n = " + std::to_string(n);
            return rep;
        }
    }
    rep.pass = true;
    rep.detail = "parametric form matches oracle through n = " + std::to_string(N);
    return rep;
}

} // namespace diagalg

#endif
