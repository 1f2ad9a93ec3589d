#include "diagalg/expr.hpp"
#include "diagalg/series.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace diagalg;

namespace {

TruncSeries ts(std::initializer_list<int> asc)
{
    std::vector<Rational> cs;
    for (int c : asc) cs.emplace_back(c);
    const int order = int(cs.size()) - 1;
    return TruncSeries(order, std::move(cs));
}

std::mt19937 rng(420061);

TruncSeries random_series(int order, bool invertible)
{
    std::uniform_int_distribution<int> coeff(-6, 6);
    std::vector<Rational> cs(order + 1);
    for (auto& c : cs) c = coeff(rng);
    if (invertible && cs[0] == 0) cs[0] = 1;
    return TruncSeries(order, std::move(cs));
}

} // namespace

TEST_CASE("series multiplication")
{
    CHECK(ts({1, 1}) * ts({1, -1, 0}) == ts({1, 0}));          // truncated to order 1
    CHECK(ts({1, 1, 0}) * ts({1, -1, 0}) == ts({1, 0, -1}));   // 1 - t^2 at full order
    CHECK(ts({1, 1, 6, 22}) * ts({1, 0, -1, -2}) == ts({1, 1, 5, 19}));
}

TEST_CASE("series inverse")
{
    CHECK(ts({1, -1, 0, 0, 0}).inverse() == ts({1, 1, 1, 1, 1}));
    CHECK(ts({1, -1, -5, -11}).inverse() == ts({1, 1, 6, 22}));
    TruncSeries two = TruncSeries::constant(2, 0);
    CHECK(two.inverse().coeff(0) == Rational(1, 2));
    CHECK_THROWS_WITH(ts({0, 1}).inverse(), "series not invertible");

    for (int i = 0; i < 25; ++i) {
        TruncSeries f = random_series(8, true);
        CHECK(f * f.inverse() == TruncSeries::constant(1, 8));
    }
}

TEST_CASE("pow_trunc")
{
    CHECK(ts({1, 1}).pow_trunc(0) == ts({1, 0}));
    CHECK(ts({1, 1, 2, 3}).pow_trunc(1) == ts({1, 1, 2, 3}));
    RatFunc f = parse_ratfunc("1/((1-x)*(1-x^2))");
    CHECK(expand_ratfunc(f, 2).pow_trunc(2).coeff(2) == 5);

    for (int i = 0; i < 20; ++i) {
        TruncSeries f = random_series(7, false);
        std::uniform_int_distribution<int> e(0, 4);
        unsigned a = unsigned(e(rng)), b = unsigned(e(rng));
        CHECK(f.pow_trunc(a + b) == f.pow_trunc(a) * f.pow_trunc(b));
    }
}

TEST_CASE("expand_ratfunc")
{
    CHECK(expand_ratfunc(parse_ratfunc("1/(1-x)"), 3) == ts({1, 1, 1, 1}));
    CHECK(expand_ratfunc(parse_ratfunc("1/((1-x)*(1-x^2))"), 4) == ts({1, 1, 2, 2, 3}));
    CHECK(expand_ratfunc(parse_ratfunc("(1+3*x)/(1-x^2)"), 2) == ts({1, 3, 1}));
    CHECK_THROWS_WITH(expand_ratfunc(parse_ratfunc("1/x"), 3), "pole at origin");

    // expand(f) * expand(den) = expand(num) through order N
    for (const char* expr : {"(1+3*x)/(1-x^2)", "1/((1-x)*(1-x^2))", "(2-x)/(3+x+x^2)"}) {
        RatFunc f = parse_ratfunc(expr);
        TruncSeries fx = expand_ratfunc(f, 12);
        CHECK(fx * compose(f.den(), TruncSeries::identity(12)) ==
              compose(f.num(), TruncSeries::identity(12)));
    }
}

TEST_CASE("reversion")
{
    CHECK(revert(parse_ratfunc("1"), 4) == ts({0, 1, 0, 0, 0}));
    // f = 1/(1-x): y - y^2 = t, Catalan numbers
    CHECK(revert(parse_ratfunc("1/(1-x)"), 4) == ts({0, 1, 1, 2, 5}));
    CHECK(revert(parse_ratfunc("1/((1-x)*(1-x^2))"), 3) == ts({0, 1, 1, 3}));
    CHECK_THROWS_WITH(revert(parse_ratfunc("x"), 3), "reversion requires f(0) != 0");

    // y = t*f(y) holds identically through the truncation order
    for (const char* expr : {"1/(1-x)", "1/((1-x)*(1-x^2))", "(1+x)/(1-2*x^2)"}) {
        RatFunc f = parse_ratfunc(expr);
        int N = 14;
        TruncSeries y = revert(f, N);
        TruncSeries rhs = (compose(f.num(), y) * compose(f.den(), y).inverse()).shift_up(1);
        CHECK(y == rhs);
    }
}

TEST_CASE("diagonal coefficients")
{
    RatFunc f = parse_ratfunc("1/((1-x)*(1-x^2))");
    CHECK(diagonal_coeff(f, 0) == 1);
    CHECK(diagonal_coeff(f, 2) == 5);
    CHECK(diagonal_coeff(f, 3) == 19);

    // [x^n] (1-x)^{-n} = C(2n-1, n): 1, 1, 3, 10, 35, ...
    RatFunc g = parse_ratfunc("1/(1-x)");
    for (long n = 0; n <= 12; ++n)
        CHECK(diagonal_coeff(g, n) == Rational(binomial(Int(2 * n - 1), n)));
}

TEST_CASE("diagonal_sequence matches per-n extraction")
{
    for (const char* expr : {"1/(1-x)", "1/((1-x)*(1-x^2))", "(1+x)/(1-x-x^3)"}) {
        RatFunc f = parse_ratfunc(expr);
        auto seq = diagonal_sequence(f, 20);
        REQUIRE(seq.size() == 21);
        for (long n = 0; n <= 20; ++n) CHECK(seq[size_t(n)] == diagonal_coeff(f, n));
    }
}

TEST_CASE("mixed-order operations truncate to the minimum")
{
    TruncSeries a = random_series(9, false), b = random_series(5, false);
    CHECK((a + b).order() == 5);
    CHECK((a * b).order() == 5);
}
