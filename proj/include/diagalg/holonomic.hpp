#ifndef DIAGALG_HOLONOMIC_HPP
#define DIAGALG_HOLONOMIC_HPP

#include "diagalg/burmann.hpp"
#include "diagalg/ratfunc.hpp"
#include "diagalg/series.hpp"
#include "diagalg/unipoly.hpp"

#include <functional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagalg {

// Element of Q(t)[A] / (P), stored as coordinates in the basis
// {1, A, ..., A^{d-1}} where d = degA of the modulus.
struct AlgebraicElement {
    std::vector<RatFunc> coords;
};

// Linear ODE with polynomial coefficients: sum p_i(t) A^{(i)}(t) = 0.
struct DiffOperator {
    std::vector<UniPoly> coeffs; // p_0 .. p_d in t, p_d nonzero
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// P-recursion in backward form: sum_{i=0..r} c_i(n) a(n-i) = 0 for n >= offset.
struct ShiftOperator {
    std::vector<UniPoly> coeffs; // c_0 .. c_r in n
    long offset = 0;
    int order() const { return static_cast<int>(coeffs.size()) - 1; }
};

// Arithmetic in the quotient ring Q(t)[A]/(P); P must be squarefree in A.
class QuotientRing {
public:
    explicit QuotientRing(const AlgebraicEquation& eq)
        : P_(eq.P), d_(eq.degA), pc_(detail::bipoly_to_A_coeffs(eq.P))
    {
        if (d_ < 1) throw std::invalid_argument("modulus must have positive degree in A");
    }

    int dim() const { return d_; }
    const BiPoly& modulus() const { return P_; }

    AlgebraicElement zero() const { return {std::vector<RatFunc>(size_t(d_), RatFunc(Var::t))}; }
    AlgebraicElement one() const
    {
        auto e = zero();
        e.coords[0] = RatFunc::constant(Var::t, 1);
        return e;
    }
    // The basis element A itself (for d = 1 this is -p0/p1, already reduced).
    AlgebraicElement generator() const
    {
        std::vector<RatFunc> raw(2, RatFunc(Var::t));
        raw[1] = RatFunc::constant(Var::t, 1);
        return from_coeffs(std::move(raw));
    }

    // Reduce an arbitrary-length ascending coefficient vector modulo P.
    AlgebraicElement from_coeffs(std::vector<RatFunc> c) const
    {
        const RatFunc& lead = pc_[size_t(d_)];
        while (static_cast<int>(c.size()) > d_) {
            RatFunc top = c.back();
            c.pop_back();
            if (top.is_zero()) continue;
            RatFunc q = top / lead;
            size_t k = c.size() - size_t(d_);
            for (int i = 0; i < d_; ++i) c[k + i] = c[k + i] - q * pc_[size_t(i)];
        }
        c.resize(size_t(d_), RatFunc(Var::t));
        return {std::move(c)};
    }

    AlgebraicElement add(const AlgebraicElement& u, const AlgebraicElement& v) const
    {
        auto r = u;
        for (int i = 0; i < d_; ++i) r.coords[i] = r.coords[i] + v.coords[i];
        return r;
    }
    AlgebraicElement sub(const AlgebraicElement& u, const AlgebraicElement& v) const
    {
        auto r = u;
        for (int i = 0; i < d_; ++i) r.coords[i] = r.coords[i] - v.coords[i];
        return r;
    }
    AlgebraicElement scale(const AlgebraicElement& u, const RatFunc& s) const
    {
        auto r = u;
        for (auto& c : r.coords) c = c * s;
        return r;
    }

    AlgebraicElement mul(const AlgebraicElement& u, const AlgebraicElement& v) const
    {
        std::vector<RatFunc> prod(size_t(2 * d_ - 1), RatFunc(Var::t));
        for (int i = 0; i < d_; ++i) {
            if (u.coords[i].is_zero()) continue;
            for (int j = 0; j < d_; ++j)
                prod[size_t(i + j)] = prod[size_t(i + j)] + u.coords[i] * v.coords[j];
        }
        return from_coeffs(std::move(prod));
    }

    bool is_zero(const AlgebraicElement& u) const
    {
        for (const auto& c : u.coords)
            if (!c.is_zero()) return false;
        return true;
    }

    // Extended Euclid against P in Q(t)[A]; throws "zero divisor" when the
    // lift of u shares a factor with P.
    AlgebraicElement inverse(const AlgebraicElement& u) const
    {
        if (is_zero(u)) throw std::invalid_argument("zero divisor");
        using Poly = std::vector<RatFunc>; // ascending in A
        auto deg = [](const Poly& p) {
            int d = static_cast<int>(p.size()) - 1;
            while (d >= 0 && p[d].is_zero()) --d;
            return d;
        };
        Poly r0 = pc_, r1 = u.coords;
        Poly s0(1, RatFunc(Var::t)), s1(1, RatFunc::constant(Var::t, 1)); // track coeff of u
        while (deg(r1) > 0) {
            // r0 = q*r1 + r2
            Poly q(size_t(std::max(deg(r0) - deg(r1) + 1, 1)), RatFunc(Var::t));
            Poly r2 = r0;
            int d1 = deg(r1);
            while (deg(r2) >= d1) {
                int d2 = deg(r2);
                RatFunc c = r2[size_t(d2)] / r1[size_t(d1)];
                q[size_t(d2 - d1)] = c;
                for (int j = 0; j <= d1; ++j)
                    r2[size_t(d2 - d1 + j)] = r2[size_t(d2 - d1 + j)] - c * r1[size_t(j)];
                r2.erase(r2.begin() + d2, r2.end());
            }
            // s2 = s0 - q*s1
            Poly s2(std::max(s0.size(), q.size() + s1.size()), RatFunc(Var::t));
            for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i].is_zero()) continue;
                for (size_t j = 0; j < s1.size(); ++j) s2[i + j] = s2[i + j] - q[i] * s1[j];
            }
            r0 = std::move(r1);
            s0 = std::move(s1);
            r1 = std::move(r2);
            s1 = std::move(s2);
        }
        if (deg(r1) < 0) throw std::invalid_argument("zero divisor");
        // r1 is a nonzero constant g with s1*u = g (mod P); inverse = s1/g
        RatFunc g = r1[0];
        std::vector<RatFunc> inv(size_t(d_), RatFunc(Var::t));
        for (size_t i = 0; i < s1.size() && i < size_t(d_); ++i) inv[i] = s1[i] / g;
        return {std::move(inv)};
    }

    // d/dt along the curve P(t, A(t)) = 0: coordinate-wise t-derivative plus
    // the chain-rule term (du/dA) * A', with A' = -P_t / P_A in the ring.
    AlgebraicElement derivative(const AlgebraicElement& u) const
    {
        ensure_gen_derivative();
        AlgebraicElement r = zero();
        for (int i = 0; i < d_; ++i) r.coords[size_t(i)] = u.coords[size_t(i)].derivative();
        AlgebraicElement du_dA = zero();
        for (int i = 1; i < d_; ++i)
            du_dA.coords[size_t(i - 1)] = u.coords[size_t(i)] * RatFunc::constant(Var::t, i);
        return add(r, mul(du_dA, gen_derivative_));
    }

    // A' as a ring element.
    const AlgebraicElement& generator_derivative() const
    {
        ensure_gen_derivative();
        return gen_derivative_;
    }

private:
    void ensure_gen_derivative() const
    {
        if (!gen_derivative_ready_) {
            auto Pt = from_coeffs(detail::bipoly_to_A_coeffs(P_.differentiate(Var::t)));
            auto PA = from_coeffs(detail::bipoly_to_A_coeffs(P_.differentiate(Var::A)));
            gen_derivative_ = mul(scale(Pt, RatFunc::constant(Var::t, -1)), inverse(PA));
            gen_derivative_ready_ = true;
        }
    }

    BiPoly P_;
    int d_;
    std::vector<RatFunc> pc_; // P's coefficients ascending in A
    mutable AlgebraicElement gen_derivative_;
    mutable bool gen_derivative_ready_ = false;
};

namespace detail {

// Clear RatFunc coefficients to a primitive integer-coefficient operator;
// sign fixed by the leading coefficient of the highest-order term.
inline std::vector<UniPoly> normalize_operator(const std::vector<RatFunc>& lams)
{
    UniPoly l = UniPoly::one(Var::t);
    for (const auto& x : lams)
        if (!x.is_zero()) l = lcm(l, x.den());
    std::vector<UniPoly> ps;
    ps.reserve(lams.size());
    for (const auto& x : lams)
        ps.push_back(x.is_zero() ? UniPoly::zero(Var::t) : x.num() * exact_div(l, x.den()));
    // common polynomial factor
    UniPoly g = UniPoly::zero(Var::t);
    for (const auto& p : ps)
        if (!p.is_zero()) g = g.is_zero() ? p : gcd(g, p);
    if (g.degree() > 0)
        for (auto& p : ps)
            if (!p.is_zero()) p = exact_div(p, g);
    // integer content across all coefficients
    Int gn = 0, ln = 1;
    for (const auto& p : ps)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            gn = gcd(gn, abs(numerator(c)));
            ln = lcm(ln, denominator(c));
        }
    Rational content(gn, ln);
    if (ps.back().leading() < 0) content = -content;
    Rational inv = Rational(1) / content;
    for (auto& p : ps) p = p * inv;
    return ps;
}

} // namespace detail

// Minimal-order annihilating ODE found by ascending linear-dependence search
// on {A, A', A'', ...} over Q(t); guaranteed to stop by r = degA.
inline DiffOperator derive_ode(const AlgebraicEquation& eq)
{
    QuotientRing ring(eq);
    const int d = ring.dim();
    std::vector<AlgebraicElement> derivs{ring.generator()};
    for (int r = 1; r <= d; ++r) {
        derivs.push_back(ring.derivative(derivs.back()));
        // Gaussian elimination on rows D_0..D_r with an augmented identity;
        // the first row that reduces to zero carries the dependence.
        size_t rows = derivs.size();
        std::vector<std::vector<RatFunc>> m(rows), aug(rows);
        for (size_t i = 0; i < rows; ++i) {
            m[i] = derivs[i].coords;
            aug[i].assign(rows, RatFunc(Var::t));
            aug[i][i] = RatFunc::constant(Var::t, 1);
        }
        std::vector<int> pivot_of_row(rows, -1);
        for (size_t i = 0; i < rows; ++i) {
            // reduce row i by the previous pivot rows
            for (size_t p = 0; p < i; ++p) {
                int pc = pivot_of_row[p];
                if (pc < 0 || m[i][size_t(pc)].is_zero()) continue;
                RatFunc factor = m[i][size_t(pc)] / m[p][size_t(pc)];
                for (int j = 0; j < d; ++j) m[i][size_t(j)] = m[i][size_t(j)] - factor * m[p][size_t(j)];
                for (size_t j = 0; j < rows; ++j) aug[i][j] = aug[i][j] - factor * aug[p][j];
            }
            int pc = -1;
            for (int j = 0; j < d; ++j)
                if (!m[i][size_t(j)].is_zero()) {
                    pc = j;
                    break;
                }
            if (pc < 0) {
                // dependence: sum_j aug[i][j] * A^{(j)} = 0, with aug[i][i] = 1
                std::vector<RatFunc> lams(aug[i].begin(), aug[i].begin() + long(i) + 1);
                return DiffOperator{detail::normalize_operator(lams)};
            }
            pivot_of_row[i] = pc;
        }
    }
    throw std::logic_error("derive_ode: no dependence found up to degA"); // unreachable
}

// Apply sum p_i(t) (d/dt)^i to a truncated series; result order drops by the
// operator order.
inline TruncSeries apply(const DiffOperator& op, const TruncSeries& s)
{
    int d = op.order();
    if (s.order() < d) throw std::invalid_argument("series order below operator order");
    int N = s.order() - d;
    TruncSeries total(N);
    TruncSeries deriv = s;
    for (int i = 0; i <= d; ++i) {
        if (!op.coeffs[size_t(i)].is_zero())
            total = total + (compose(op.coeffs[size_t(i)], TruncSeries::identity(deriv.order())) * deriv)
                                .truncate(N);
        if (i < d) deriv = deriv.derivative();
    }
    return total;
}

// Transfer: each monomial c * t^a * (d/dt)^b contributes
// c * (n-i)(n-i-1)...(n-i-b+1) * a(n-i) with i measured from the largest
// shift b-a present; collects into backward normal form.
inline ShiftOperator ode_to_recurrence(const DiffOperator& op)
{
    struct Term {
        Rational c;
        int a, b;
    };
    std::vector<Term> terms;
    for (int b = 0; b <= op.order(); ++b) {
        const UniPoly& p = op.coeffs[size_t(b)];
        for (int a = 0; a <= p.degree(); ++a)
            if (p.coeff(a) != 0) terms.push_back({p.coeff(a), a, b});
    }
    if (terms.empty()) throw std::invalid_argument("zero operator");
    int smax = terms[0].b - terms[0].a, smin = smax;
    for (const auto& t : terms) {
        smax = std::max(smax, t.b - t.a);
        smin = std::min(smin, t.b - t.a);
    }
    int r = smax - smin;
    std::vector<UniPoly> cs(size_t(r + 1), UniPoly::zero(Var::n));
    for (const auto& t : terms) {
        int i = smax - (t.b - t.a);
        UniPoly falling = UniPoly::constant(Var::n, t.c);
        for (int k = 0; k < t.b; ++k)
            falling = falling * (UniPoly::monomial(Var::n, 1) - UniPoly::constant(Var::n, Rational(i + k)));
        cs[size_t(i)] = cs[size_t(i)] + falling;
    }
    long offset = std::max(smax, r);

    // trim identically-zero edges; dropping c_0 shifts the whole relation
    while (cs.size() > 1 && cs.front().is_zero()) {
        cs.erase(cs.begin());
        UniPoly nplus1 = UniPoly::monomial(Var::n, 1) + UniPoly::one(Var::n);
        for (auto& c : cs) c = c.compose(nplus1);
        --offset;
    }
    while (cs.size() > 1 && cs.back().is_zero()) cs.pop_back();
    r = static_cast<int>(cs.size()) - 1;
    offset = std::max(offset, long(r));

    // integer content 1, leading coefficient of c_0 positive
    Int gn = 0, ln = 1;
    for (const auto& p : cs)
        for (const auto& c : p.coeffs()) {
            if (c == 0) continue;
            gn = gcd(gn, abs(numerator(c)));
            ln = lcm(ln, denominator(c));
        }
    Rational content(gn, ln);
    if (cs.front().leading() < 0) content = -content;
    Rational inv = Rational(1) / content;
    for (auto& p : cs) p = p * inv;

    // Corollary bound: order <= max_i(deg p_i - i) + d
    int bound = -1;
    for (int i = 0; i <= op.order(); ++i)
        if (!op.coeffs[size_t(i)].is_zero()) bound = std::max(bound, op.coeffs[size_t(i)].degree() - i);
    bound += op.order();
    if (r > bound) throw std::logic_error("ode_to_recurrence: order exceeds transfer bound");

    return ShiftOperator{std::move(cs), offset};
}

struct RecurrenceReport {
    bool pass = false;
    long first_fail = -1;
    Rational residual;                // residual at first_fail
    std::vector<long> leading_zeros;  // n in range where c_0(n) = 0
    std::string detail;
};

// Exact evaluation of sum c_i(n) a(n-i) over [n_from, n_to].
inline RecurrenceReport check_recurrence(const ShiftOperator& rec, const SequenceFn& a,
                                         long n_from, long n_to)
{
    if (n_from < rec.offset || n_from < rec.order())
        throw std::invalid_argument("check_recurrence: range starts before the relation is asserted");
    if (n_to < n_from) throw std::invalid_argument("check_recurrence: empty range");
    RecurrenceReport rep;
    rep.pass = true;
    for (long n = n_from; n <= n_to; ++n) {
        Rational nr{Int(n)};
        if (rec.coeffs[0].evaluate(nr) == 0) rep.leading_zeros.push_back(n);
        Rational acc(0);
        for (int i = 0; i <= rec.order(); ++i) {
            if (rec.coeffs[size_t(i)].is_zero()) continue;
            acc += rec.coeffs[size_t(i)].evaluate(nr) * a(n - i);
        }
        if (acc != 0 && rep.pass) {
            rep.pass = false;
            rep.first_fail = n;
            rep.residual = acc;
            rep.detail = "residual " + rat_to_string(acc) + " at n = " + std::to_string(n);
            break;
        }
    }
    if (rep.pass)
        rep.detail = "recurrence holds for n = " + std::to_string(n_from) + ".." + std::to_string(n_to);
    return rep;
}

// Convert a forward-convention operator (sum c_i(n) a(n+i) = 0 for n >= n0)
// to the backward normal form used everywhere else.
inline ShiftOperator forward_to_backward(const std::vector<UniPoly>& coeffs, long offset)
{
    int r = static_cast<int>(coeffs.size()) - 1;
    UniPoly shift = UniPoly::monomial(Var::n, 1) - UniPoly::constant(Var::n, Rational(r));
    std::vector<UniPoly> out;
    out.reserve(coeffs.size());
    for (int i = r; i >= 0; --i) out.push_back(coeffs[size_t(i)].compose(shift));
    return ShiftOperator{std::move(out), offset + r};
}

} // namespace diagalg

#endif
