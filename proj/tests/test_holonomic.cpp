#include "diagalg/a348410.hpp"
#include "diagalg/burmann.hpp"
#include "diagalg/expr.hpp"
#include "diagalg/holonomic.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace diagalg;

namespace {

UniPoly up(Var v, std::initializer_list<int> asc)
{
    std::vector<Rational> cs;
    for (int c : asc) cs.emplace_back(c);
    return UniPoly(v, std::move(cs));
}

// modulus A^2 - (1 - 4t): degree 2 in A with the closed-form root sqrt(1-4t)
AlgebraicEquation sqrt_modulus()
{
    BiPoly P = BiPoly::monomial(Var::t, Var::A, 0, 2) -
               BiPoly::from_unipoly(up(Var::t, {1, -4}), Var::t, Var::A);
    return AlgebraicEquation{P, 2, 1};
}

// modulus (1-4t)A^2 - 1: the OGF of the central binomial coefficients
AlgebraicEquation inverse_sqrt_modulus()
{
    BiPoly P = BiPoly::from_unipoly(up(Var::t, {1, -4}), Var::t, Var::A) *
                   BiPoly::monomial(Var::t, Var::A, 0, 2) -
               BiPoly::one(Var::t, Var::A);
    return AlgebraicEquation{P, 2, 1};
}

// modulus (1-t)A - 1: geometric series, degree 1 in A
AlgebraicEquation geometric_modulus()
{
    BiPoly P = BiPoly::from_unipoly(up(Var::t, {1, -1}), Var::t, Var::A) *
                   BiPoly::monomial(Var::t, Var::A, 0, 1) -
               BiPoly::one(Var::t, Var::A);
    return AlgebraicEquation{P, 1, 1};
}

std::mt19937 rng(77123);

AlgebraicElement random_element(const QuotientRing& ring)
{
    std::uniform_int_distribution<int> coeff(-3, 3);
    AlgebraicElement e = ring.zero();
    for (auto& c : e.coords)
        c = RatFunc(up(Var::t, {coeff(rng), coeff(rng)}), UniPoly::one(Var::t));
    return e;
}

TruncSeries oracle_series(const SequenceFn& a, int N)
{
    std::vector<Rational> cs(N + 1);
    for (int n = 0; n <= N; ++n) cs[n] = a(n);
    return TruncSeries(N, std::move(cs));
}

} // namespace

TEST_CASE("quotient ring multiplication and inverse, modulus A^2 - (1-4t)")
{
    QuotientRing ring(sqrt_modulus());
    AlgebraicElement A = ring.generator();
    AlgebraicElement A2 = ring.mul(A, A);
    CHECK(A2.coords[0] == RatFunc(up(Var::t, {1, -4})));
    CHECK(A2.coords[1].is_zero());

    AlgebraicElement inv = ring.inverse(A);
    CHECK(inv.coords[0].is_zero());
    CHECK(inv.coords[1] == RatFunc(UniPoly::one(Var::t), up(Var::t, {1, -4}))); // A/(1-4t)
    CHECK(ring.is_zero(ring.sub(ring.mul(A, inv), ring.one())));

    CHECK_THROWS_WITH(ring.inverse(ring.zero()), "zero divisor");
}

TEST_CASE("implicit differentiation")
{
    // d = 1: A = 1/(1-t), A' = 1/(1-t)^2
    QuotientRing geo(geometric_modulus());
    AlgebraicElement A = geo.generator();
    CHECK(A.coords[0] == RatFunc(UniPoly::one(Var::t), up(Var::t, {1, -1})));
    AlgebraicElement Ap = geo.derivative(A);
    CHECK(Ap.coords[0] == RatFunc(UniPoly::one(Var::t), up(Var::t, {1, -1}) * up(Var::t, {1, -1})));

    // A^2 = 1-4t: A' = -2A/(1-4t)
    QuotientRing ring(sqrt_modulus());
    AlgebraicElement Bp = ring.derivative(ring.generator());
    CHECK(Bp.coords[0].is_zero());
    CHECK(Bp.coords[1] == RatFunc(UniPoly::constant(Var::t, -2), up(Var::t, {1, -4})));

    // (1-4t)A^2 = 1: A' = 2A/(1-4t), the central binomial generating function
    QuotientRing inv_ring(inverse_sqrt_modulus());
    AlgebraicElement Cp = inv_ring.derivative(inv_ring.generator());
    CHECK(Cp.coords[0].is_zero());
    CHECK(Cp.coords[1] == RatFunc(UniPoly::constant(Var::t, 2), up(Var::t, {1, -4})));
}

TEST_CASE("derivative of A on the explicit equation matches series data")
{
    AlgebraicEquation eq = reference_objects().second;
    QuotientRing ring(eq);
    AlgebraicElement Ap = ring.derivative(ring.generator());

    // substitute the truncated oracle series for A into the coordinate form
    // of A' and compare with the series derivative
    // clear to a common denominator first: the individual coordinates of A'
    // may have poles at t = 0 even though the combination does not
    UniPoly l = UniPoly::one(Var::t);
    for (const auto& c : Ap.coords)
        if (!c.is_zero()) l = lcm(l, c.den());

    int N = 24;
    SequenceOracle oracle = binomial_oracle();
    TruncSeries As = oracle_series(oracle.fn(), N);
    TruncSeries lhs =
        (compose(l, TruncSeries::identity(N - 1)) * As.derivative()).truncate(N - 4);
    TruncSeries rhs(N - 4);
    TruncSeries Apow = TruncSeries::constant(1, N);
    for (int j = 0; j < ring.dim(); ++j) {
        const RatFunc& c = Ap.coords[size_t(j)];
        if (!c.is_zero()) {
            UniPoly cleared = c.num() * exact_div(l, c.den());
            rhs = rhs + (compose(cleared, TruncSeries::identity(N)) * Apow).truncate(N - 4);
        }
        Apow = Apow * As;
    }
    CHECK(lhs == rhs);
}

TEST_CASE("quotient ring algebra properties")
{
    QuotientRing ring(reference_objects().second);
    for (int i = 0; i < 8; ++i) {
        AlgebraicElement u = random_element(ring), v = random_element(ring),
                         w = random_element(ring);
        CHECK(ring.is_zero(ring.sub(ring.mul(u, v), ring.mul(v, u))));
        CHECK(ring.is_zero(ring.sub(ring.mul(ring.mul(u, v), w), ring.mul(u, ring.mul(v, w)))));
        // product rule
        AlgebraicElement lhs = ring.derivative(ring.mul(u, v));
        AlgebraicElement rhs = ring.add(ring.mul(ring.derivative(u), v), ring.mul(u, ring.derivative(v)));
        CHECK(ring.is_zero(ring.sub(lhs, rhs)));
    }
    for (int i = 0; i < 4; ++i) {
        AlgebraicElement u = random_element(ring);
        if (ring.is_zero(u)) continue;
        CHECK(ring.is_zero(ring.sub(ring.inverse(ring.inverse(u)), u)));
    }
    // dP/dA is invertible mod P (squarefreeness)
    auto PA = reference_objects().second.P.differentiate(Var::A);
    auto elem = ring.from_coeffs(detail::bipoly_to_A_coeffs(PA));
    CHECK_NOTHROW(ring.inverse(elem));
}

TEST_CASE("derive_ode on degree-1 and degree-2 moduli")
{
    // (1-t)A' - A = 0, normalized so the leading coefficient of p1 is positive
    DiffOperator geo = derive_ode(geometric_modulus());
    REQUIRE(geo.order() == 1);
    CHECK(geo.coeffs[1] == up(Var::t, {-1, 1}));
    CHECK(geo.coeffs[0] == up(Var::t, {1}));

    // (1-4t)A' - 2A = 0, same sign normalization
    DiffOperator sqrt_op = derive_ode(inverse_sqrt_modulus());
    REQUIRE(sqrt_op.order() == 1);
    CHECK(sqrt_op.coeffs[1] == up(Var::t, {-1, 4}));
    CHECK(sqrt_op.coeffs[0] == up(Var::t, {2}));

    // central binomial series satisfies the derived operator
    auto central = [](long n) { return Rational(binomial(Int(2 * n), n)); };
    TruncSeries s = oracle_series(central, 20);
    CHECK(apply(sqrt_op, s).is_zero());
}

TEST_CASE("derive_ode on the explicit equation")
{
    DiffOperator op = derive_ode(reference_objects().second);
    REQUIRE(op.order() == 4);
    CHECK(op.coeffs[0].is_zero());
    CHECK(op.coeffs[1] == up(Var::t, {-3171840, 2294880, 56280}));
    CHECK(op.coeffs[2] == up(Var::t, {-850176, -6385008, 6565476, 209040}));
    CHECK(op.coeffs[3] == up(Var::t, {102400, -897024, -2275152, 3440644, 128640}));
    CHECK(op.coeffs[4] == up(Var::t, {0, 40960, -187136, -162048, 408577, 17152}));

    SequenceOracle oracle = binomial_oracle();
    TruncSeries s = oracle_series(oracle.fn(), 44);
    CHECK(apply(op, s).is_zero()); // vanishes through order 40
}

TEST_CASE("ode_to_recurrence on first-order operators")
{
    // (1-t)A' - A: n a(n) - n a(n-1) = 0, the constant sequence
    DiffOperator geo{ {up(Var::t, {-1}), up(Var::t, {1, -1})} };
    ShiftOperator r1 = ode_to_recurrence(geo);
    REQUIRE(r1.order() == 1);
    CHECK(r1.coeffs[0] == up(Var::n, {0, 1}));
    CHECK(r1.coeffs[1] == up(Var::n, {0, -1}));
    CHECK(r1.offset == 1);
    auto ones = [](long) { return Rational(1); };
    CHECK(check_recurrence(r1, ones, 1, 40).pass);

    // (1-4t)A' - 2A: n a(n) = (4n-2) a(n-1), central binomials
    DiffOperator sq{ {up(Var::t, {-2}), up(Var::t, {1, -4})} };
    ShiftOperator r2 = ode_to_recurrence(sq);
    REQUIRE(r2.order() == 1);
    CHECK(r2.coeffs[0] == up(Var::n, {0, 1}));
    CHECK(r2.coeffs[1] == up(Var::n, {2, -4}));
    auto central = [](long n) { return Rational(binomial(Int(2 * n), n)); };
    CHECK(check_recurrence(r2, central, 1, 60).pass);

    CHECK_THROWS_AS(ode_to_recurrence(DiffOperator{{UniPoly::zero(Var::t)}}), std::invalid_argument);
}

TEST_CASE("derived recurrence annihilates the oracle end to end")
{
    ShiftOperator rec = ode_to_recurrence(derive_ode(reference_objects().second));
    REQUIRE(rec.order() == 4);
    CHECK(rec.offset == 4);
    SequenceOracle oracle = binomial_oracle();
    oracle.precompute(260);
    CHECK(check_recurrence(rec, oracle.fn(), 4, 260).pass);
}

TEST_CASE("check_recurrence reports fault injection and degenerate leading terms")
{
    ShiftOperator kot = kotesovec_operator();
    auto corrupted = [](long n) {
        return n == 7 ? Rational(7891) : Rational(a348410_binomial(n));
    };
    RecurrenceReport rep = check_recurrence(kot, corrupted, 3, 30);
    CHECK_FALSE(rep.pass);
    CHECK(rep.first_fail >= 7);
    CHECK(rep.first_fail <= 9);
    CHECK(rep.residual != 0);

    // recurrence with c0(n) = n - 10 vanishing inside the range
    ShiftOperator degenerate{{up(Var::n, {-10, 1}), up(Var::n, {10, -1})}, 1};
    auto ones = [](long) { return Rational(1); };
    RecurrenceReport r2 = check_recurrence(degenerate, ones, 1, 20);
    CHECK(r2.pass);
    REQUIRE(r2.leading_zeros.size() == 1);
    CHECK(r2.leading_zeros[0] == 10);

    CHECK_THROWS_AS(check_recurrence(kot, corrupted, 1, 30), std::invalid_argument);
}

TEST_CASE("forward convention converts to backward")
{
    // forward: (n+1) a(n+1) - (4n+2) a(n) = 0 for n >= 0  ==  backward r2 above
    std::vector<UniPoly> fwd{up(Var::n, {-2, -4}), up(Var::n, {1, 1})};
    ShiftOperator back = forward_to_backward(fwd, 0);
    CHECK(back.offset == 1);
    CHECK(back.coeffs[0] == up(Var::n, {0, 1}));
    CHECK(back.coeffs[1] == up(Var::n, {2, -4}));
}
