#ifndef DIAGALG_A348410_HPP
#define DIAGALG_A348410_HPP

#include "diagalg/burmann.hpp"
#include "diagalg/holonomic.hpp"
#include "diagalg/series.hpp"

#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace diagalg {

// Deterministic cached wrapper around an exact sequence rule. The cache is
// append-only and grown serially; precompute up to the top of a range before
// sharing across threads.
class SequenceOracle {
public:
    SequenceOracle(std::string name, std::function<Rational(long)> eval)
        : name_(std::move(name)), eval_(std::move(eval)),
          cache_(std::make_shared<std::vector<Rational>>())
    {
    }

    const std::string& name() const { return name_; }

    Rational operator()(long n) const
    {
        if (n < 0) return Rational(0);
        auto& cache = *cache_;
        while (static_cast<long>(cache.size()) <= n) cache.push_back(eval_(long(cache.size())));
        return cache[size_t(n)];
    }

    void precompute(long n_to) const { (*this)(n_to); }

    SequenceFn fn() const
    {
        auto self = *this;
        return [self](long n) { return self(n); };
    }

private:
    std::string name_;
    std::function<Rational(long)> eval_;
    std::shared_ptr<std::vector<Rational>> cache_;
};

// f(x) = 1/((1-x)(1-x^2)), the source of A348410's diagonal form.
inline RatFunc a348410_ratfunc()
{
    UniPoly one_minus_x(Var::x, {Rational(1), Rational(-1)});
    UniPoly one_minus_x2(Var::x, {Rational(1), Rational(0), Rational(-1)});
    return RatFunc(UniPoly::one(Var::x), one_minus_x * one_minus_x2);
}

// Single-index binomial sum: sum_k C(2n-2k-1, n-2k) * C(n+k-1, k).
// Both binomials have a fixed difference top-bottom, so consecutive terms
// are related by a small rational ratio; the running term stays integral.
inline Int a348410_binomial(long n)
{
    if (n < 0) throw std::invalid_argument("a348410_binomial: negative index");
    if (n == 0) return 1; // C(-1, 0) * C(-1, 0) under the chosen convention
    // T_0 = C(2n-1, n)
    Int T = 1;
    for (long j = 1; j <= n; ++j) {
        T *= n - 1 + j;
        T /= j; // prefix products of a binomial are integral
    }
    Int sum = T;
    for (long k = 1; 2 * k <= n; ++k) {
        T *= Int(n + k - 1) * Int(n - 2 * k + 1) * Int(n - 2 * k + 2);
        Int den = Int(k) * Int(2 * n - 2 * k) * Int(2 * n - 2 * k + 1);
        Int q, r;
        divide_qr(T, den, q, r);
        if (r != 0) throw std::logic_error("a348410_binomial: ratio step not integral");
        T = q;
        sum += T;
    }
    return sum;
}

// Diagonal route: a(n) = [x^n] f(x)^n for f = 1/((1-x)(1-x^2)).
inline Int a348410_diagonal(long n)
{
    Rational v = diagonal_coeff(a348410_ratfunc(), n);
    if (!is_integer(v)) throw std::logic_error("a348410_diagonal: non-integral value");
    return numerator(v);
}

inline SequenceOracle binomial_oracle()
{
    return SequenceOracle("A348410/binomial-sum", [](long n) { return Rational(a348410_binomial(n)); });
}

inline SequenceOracle diagonal_oracle()
{
    return SequenceOracle("A348410/diagonal", [](long n) { return Rational(a348410_diagonal(n)); });
}

// Kotesovec's conjectured order-2 recurrence in backward normal form,
// asserted for n >= 3:
//   16(n-1)n(2n-1)(51n^2-162n+127) a(n)
//     - (n-1)(5457n^4-22791n^3+32144n^2-17536n+3072) a(n-1)
//     - 8(2n-3)(4n-7)(4n-5)(51n^2-60n+16) a(n-2) = 0.
inline ShiftOperator kotesovec_operator()
{
    auto lin = [](const Rational& a0, const Rational& a1) {
        return UniPoly(Var::n, {a0, a1});
    };
    UniPoly n1 = lin(-1, 1);                       // n - 1
    UniPoly nn = UniPoly::monomial(Var::n, 1);     // n
    UniPoly c0 = UniPoly::constant(Var::n, 16) * n1 * nn * lin(-1, 2) *
                 UniPoly(Var::n, {Rational(127), Rational(-162), Rational(51)});
    UniPoly c1 = -(n1 * UniPoly(Var::n, {Rational(3072), Rational(-17536), Rational(32144),
                                         Rational(-22791), Rational(5457)}));
    UniPoly c2 = UniPoly::constant(Var::n, -8) * lin(-3, 2) * lin(-7, 4) * lin(-5, 4) *
                 UniPoly(Var::n, {Rational(16), Rational(-60), Rational(51)});
    return ShiftOperator{{c0, c1, c2}, 3};
}

// The literal named objects: P1, P2 and the explicit algebraic equation
//   P(t,A) = (256t^2+107t-32)(A^4-A^3) + (96t^2+36t)A^2 - (16t^2+4t)A + t^2,
// independent of the elimination pipeline, for golden comparison.
inline std::pair<ParametricSystem, AlgebraicEquation> reference_objects()
{
    BiPoly P1 = BiPoly::from_unipoly(
                    UniPoly(Var::y, {Rational(0), Rational(1), Rational(-1), Rational(-1), Rational(1)}),
                    Var::y, Var::t) -
                BiPoly::monomial(Var::y, Var::t, 0, 1);

    // P2 = (1-4A)y^2 - Ay + (A-1)
    BiPoly P2 = BiPoly::zero(Var::y, Var::A);
    P2 = P2 + BiPoly::monomial(Var::y, Var::A, 2, 0) + BiPoly::monomial(Var::y, Var::A, 2, 1, Rational(-4));
    P2 = P2 + BiPoly::monomial(Var::y, Var::A, 1, 1, Rational(-1));
    P2 = P2 + BiPoly::monomial(Var::y, Var::A, 0, 1) + BiPoly::monomial(Var::y, Var::A, 0, 0, Rational(-1));

    UniPoly lead(Var::t, {Rational(-32), Rational(107), Rational(256)}); // 256t^2+107t-32
    BiPoly P = BiPoly::from_unipoly(lead, Var::t, Var::A) *
                   (BiPoly::monomial(Var::t, Var::A, 0, 4) - BiPoly::monomial(Var::t, Var::A, 0, 3)) +
               BiPoly::from_unipoly(UniPoly(Var::t, {Rational(0), Rational(36), Rational(96)}), Var::t, Var::A) *
                   BiPoly::monomial(Var::t, Var::A, 0, 2) -
               BiPoly::from_unipoly(UniPoly(Var::t, {Rational(0), Rational(4), Rational(16)}), Var::t, Var::A) *
                   BiPoly::monomial(Var::t, Var::A, 0, 1) +
               BiPoly::monomial(Var::t, Var::A, 2, 0);

    ParametricSystem sys{P1, P2, a348410_ratfunc()};
    AlgebraicEquation eq{P, P.degree2(), P.degree1()};
    return {std::move(sys), std::move(eq)};
}

} // namespace diagalg

#endif
