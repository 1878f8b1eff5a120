#include <random>

#include <gtest/gtest.h>

#include "sympoly/linear.hpp"

using namespace sympoly;

namespace {

RationalFunction s() { return RationalFunction::variable(); }

RatPolynomial rp(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return RatPolynomial(std::move(v));
}

std::vector<Rational> rats(std::initializer_list<long> c)
{
    std::vector<Rational> v;
    for (long x : c)
        v.emplace_back(x);
    return v;
}

} // namespace

TEST(Polynomial, SquareOfOnePlusT)
{
    IntPolynomial p{1, 1};
    EXPECT_EQ(p * p, (IntPolynomial{1, 2, 1}));
}

TEST(Polynomial, DivideHStarByOnePlusT)
{
    auto [q, r] = divmod(IntPolynomial{1, 5, 5, 1}, IntPolynomial{1, 1});
    EXPECT_EQ(q, (IntPolynomial{1, 4, 1}));
    EXPECT_TRUE(r.is_zero());
}

TEST(Polynomial, SelfDifferenceIsZero)
{
    IntPolynomial p{3, -2, 0, 7};
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ((p - p).degree(), -1);
}

TEST(Polynomial, DivisionByZeroThrows)
{
    try {
        divmod(IntPolynomial{1, 2}, IntPolynomial{});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DivisionByZeroPolynomial);
    }
}

TEST(Polynomial, IntegerDivisionMustStayIntegral)
{
    EXPECT_THROW(divmod(IntPolynomial{1, 1}, IntPolynomial{1, 2}), Error);
    EXPECT_THROW(exact_divide(IntPolynomial{1, 0, 1}, IntPolynomial{1, 1}), Error);
}

TEST(Polynomial, DivmodReconstructsOverRationals)
{
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> coef(-5, 5);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<Rational> a(1 + trial % 7), b(1 + trial % 4);
        for (auto& x : a)
            x = coef(rng);
        for (auto& x : b)
            x = coef(rng);
        b.back() = 1 + trial % 3;
        RatPolynomial pa{a}, pb{b};
        auto [q, r] = divmod(pa, pb);
        EXPECT_EQ(q * pb + r, pa);
        EXPECT_LT(r.degree(), pb.degree());
    }
}

TEST(Polynomial, GammaRoundTrip)
{
    IntPolynomial h{1, 5, 5, 1};
    auto gamma = gamma_vector(h, 3);
    EXPECT_EQ(gamma, (std::vector<Integer>{1, 2}));
    EXPECT_EQ(from_gamma(gamma, 3), h);
    EXPECT_THROW(gamma_vector(IntPolynomial{1, 2, 3}, 2), Error);
}

TEST(RationalFunction, ReducedMonicForm)
{
    // (s^2 - 1)/(2s - 2) = (s + 1)/2
    RationalFunction f(rp({-1, 0, 1}), rp({-2, 2}));
    EXPECT_EQ(f.den(), rp({1}));
    EXPECT_EQ(f.num(), RatPolynomial({Rational(1, 2), Rational(1, 2)}));
}

TEST(RationalFunction, FieldInverseProperty)
{
    std::mt19937 rng(11);
    std::uniform_int_distribution<long> coef(-4, 4);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<Rational> a(1 + trial % 4), b(1 + trial % 3);
        for (auto& x : a)
            x = coef(rng);
        for (auto& x : b)
            x = coef(rng);
        a.back() = 1;
        b.back() = -2;
        RationalFunction f{RatPolynomial(a), RatPolynomial(b)};
        EXPECT_EQ(f * f.inverse(), RationalFunction(1));
        EXPECT_EQ(f - f, RationalFunction(0));
    }
}

TEST(RationalFunction, DerivativeOfQuotient)
{
    // d/ds 1/(1-s) = 1/(1-s)^2
    RationalFunction f(rp({1}), rp({1, -1}));
    EXPECT_EQ(f.derivative(), RationalFunction(rp({1}), rp({1, -2, 1})));
}

TEST(SolveLinear, ClusterSystemForPlusMinusAndTripleZero)
{
    // L_{+-} + s L_{-+} = -s^2 ; s L_{+-} + L_{-+} = -s^2 ; (1+s+s^2) L_000 = -s^3
    RatMatrix a(3, 3);
    a(0, 0) = 1;
    a(0, 1) = s();
    a(1, 0) = s();
    a(1, 1) = 1;
    a(2, 2) = RationalFunction(rp({1, 1, 1}));
    std::vector<RationalFunction> b{-(s() * s()), -(s() * s()), -(s() * s() * s())};
    auto x = solve_linear(a, b);
    EXPECT_EQ(x[0], RationalFunction(rp({0, 0, -1}), rp({1, 1})));
    EXPECT_EQ(x[1], x[0]);
    EXPECT_EQ(x[2], RationalFunction(rp({0, 0, 0, -1}), rp({1, 1, 1})));

    // residual check
    for (std::size_t i = 0; i < 3; ++i) {
        RationalFunction lhs;
        for (std::size_t j = 0; j < 3; ++j)
            lhs += a(i, j) * x[j];
        EXPECT_EQ(lhs, b[i]);
    }
}

TEST(SolveLinear, IdentityReturnsRightHandSide)
{
    std::vector<RationalFunction> b{RationalFunction(rp({1, 2})), RationalFunction(rp({0, 0, 3}), rp({1, 1}))};
    EXPECT_EQ(solve_linear(RatMatrix::identity(2), b), b);
}

TEST(SolveLinear, SingularThrows)
{
    RatMatrix a(2, 2);
    a(0, 0) = s();
    a(0, 1) = 1;
    a(1, 0) = s() * s();
    a(1, 1) = s();
    try {
        solve_linear(a, {RationalFunction(1), RationalFunction(0)});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::SingularSystem);
    }
}

TEST(Series, LinearWordCountingFunction)
{
    RationalFunction f(rp({-1, -2, -2, -1}), rp({-1, 1, 2, 2}));
    EXPECT_EQ(series_coefficients(f, 5), rats({1, 3, 7, 16, 36, 82}));
}

TEST(Series, CyclicWordCountingFunction)
{
    RationalFunction f = RationalFunction(rp({-3, 1, 1})) + RationalFunction(rp({4, -6, -2}), rp({1, -2, -1, 0, 2}));
    EXPECT_EQ(series_coefficients(f, 7), rats({1, 3, 7, 14, 26, 62, 138, 310}));
}

TEST(Series, GeometricSeries)
{
    EXPECT_EQ(series_coefficients(RationalFunction(rp({1}), rp({1, -1})), 3), rats({1, 1, 1, 1}));
}

TEST(Series, PoleAtOriginThrows)
{
    try {
        series_coefficients(RationalFunction(rp({1}), rp({0, 1})), 3);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::PoleAtOrigin);
    }
}

TEST(Series, ProductIsCauchyProduct)
{
    std::mt19937 rng(5);
    std::uniform_int_distribution<long> coef(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        auto random_rf = [&] {
            std::vector<Rational> n(3), d(3);
            for (auto& x : n)
                x = coef(rng);
            for (auto& x : d)
                x = coef(rng);
            d[0] = 1 + trial % 2;
            return RationalFunction(RatPolynomial(n), RatPolynomial(d));
        };
        auto f = random_rf();
        auto g = random_rf();
        const std::size_t order = 8;
        auto cf = series_coefficients(f, order);
        auto cg = series_coefficients(g, order);
        auto cfg = series_coefficients(f * g, order);
        for (std::size_t i = 0; i <= order; ++i) {
            Rational acc = 0;
            for (std::size_t j = 0; j <= i; ++j)
                acc += cf[j] * cg[i - j];
            EXPECT_EQ(cfg[i], acc);
        }
    }
}

TEST(Series, ChopRemovesLeadingTerms)
{
    RationalFunction m(rp({0, 0, 1, 3, 2}), rp({1, 1, 1}));
    EXPECT_EQ(chop(m, 3), RationalFunction(rp({0, 0, 0, 2, 1}), rp({1, 1, 1})));
}

TEST(Interpolate, CrossPolygonCounts)
{
    auto p = interpolate({{0, 1}, {1, 5}, {2, 13}});
    EXPECT_EQ(p, rp({1, 2, 2}));
}

TEST(Interpolate, Constant)
{
    EXPECT_EQ(interpolate({{0, Rational(7, 3)}}), RatPolynomial::constant(Rational(7, 3)));
}

TEST(Interpolate, SquareCyclePointCounts)
{
    EXPECT_EQ(interpolate({{0, 1}, {1, 9}, {2, 35}, {3, 91}}), rp({1, 3, 3, 2}));
}

TEST(Interpolate, DuplicateNodesRejected)
{
    try {
        interpolate({{1, 1}, {1, 2}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::DuplicatePoints);
    }
}

TEST(Rank, ExactRank)
{
    std::vector<std::vector<Rational>> rows{{1, -1, 0}, {0, 1, -1}, {1, 0, -1}};
    EXPECT_EQ(rank(rows), 2u);
}
