#include "diagalg/a348410.hpp"
#include "diagalg/burmann.hpp"
#include "diagalg/holonomic.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace diagalg;

namespace {

const Int FIRST_VALUES[] = {1, 1, 5, 19, 85, 376, 1715, 7890, 36693, 171820, 809380};

// Naive transcription of the binomial sum with the generic convention, as an
// independent check of the optimized running-term evaluation.
Int naive_binomial_sum(long n)
{
    Int sum = 0;
    for (long k = 0; 2 * k <= n; ++k)
        sum += binomial(Int(2 * n - 2 * k - 1), n - 2 * k) * binomial(Int(n + k - 1), k);
    return sum;
}

} // namespace

TEST_CASE("first eleven values from both closed forms")
{
    for (long n = 0; n <= 10; ++n) {
        CHECK(a348410_binomial(n) == FIRST_VALUES[n]);
        CHECK(a348410_diagonal(n) == FIRST_VALUES[n]);
    }
}

TEST_CASE("optimized binomial sum matches the naive transcription")
{
    for (long n = 0; n <= 40; ++n) CHECK(a348410_binomial(n) == naive_binomial_sum(n));
}

TEST_CASE("cross-oracle equivalence")
{
    for (long n = 0; n <= 40; ++n) CHECK(a348410_binomial(n) == a348410_diagonal(n));
}

TEST_CASE("values are positive integers and the oracle caches deterministically")
{
    SequenceOracle oracle = binomial_oracle();
    for (long n = 0; n <= 40; ++n) {
        Rational v = oracle(n);
        CHECK(is_integer(v));
        CHECK(v > 0);
        CHECK(oracle(n) == v);
    }
}

TEST_CASE("kotesovec operator coefficients")
{
    ShiftOperator kot = kotesovec_operator();
    REQUIRE(kot.order() == 2);
    CHECK(kot.offset == 3);
    CHECK(kot.coeffs[0].evaluate(3) == 48000);   // 16*2*3*5*100
    CHECK(kot.coeffs[1].evaluate(3) == -132840);
    CHECK(kot.coeffs[2].evaluate(3) == -247800); // -(8*3*5*7*295)

    // n = 3 by hand: 48000*19 = 132840*5 + 247800*1 = 912000
    CHECK(kot.coeffs[0].evaluate(3) * Rational(19) == Rational(912000));
    CHECK(Rational(132840) * 5 + Rational(247800) * 1 == Rational(912000));
}

TEST_CASE("kotesovec recurrence holds on an initial range")
{
    SequenceOracle oracle = binomial_oracle();
    oracle.precompute(200);
    RecurrenceReport rep = check_recurrence(kotesovec_operator(), oracle.fn(), 3, 200);
    CHECK(rep.pass);
    CHECK(rep.leading_zeros.empty());
}

TEST_CASE("reference objects match the pipeline output")
{
    auto [sys, eq] = reference_objects();
    AlgebraicEquation derived = eliminate(parametric_system(a348410_ratfunc()));
    CHECK(derived.P == eq.P);

    // the equation has exactly 7 nonzero (t-degree, A-degree) coefficient groups:
    // A^4 and A^3 share the quadratic 256t^2+107t-32, A^2, A^1, A^0 carry the rest
    int nonzero_groups = 0;
    for (int j = 0; j <= eq.P.degree2(); ++j)
        if (!eq.P.coeff_in(Var::A, j).is_zero()) ++nonzero_groups;
    CHECK(nonzero_groups == 5);
    CHECK(eq.P.coeff_in(Var::A, 0) == UniPoly::monomial(Var::t, 2));
}
