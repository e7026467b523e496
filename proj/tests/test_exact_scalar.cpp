#include <cmath>
#include <random>
#include <sstream>

#include <gtest/gtest.h>

#include "zonecx/exact_scalar.hpp"

using namespace zonecx;

namespace {

ExactScalar q(long a, long b = 0) { return ExactScalar(Rational(a), Rational(b)); }

ExactScalar random_scalar(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> num(-60, 60), den(1, 12);
    return ExactScalar(ratio(num(rng), den(rng)), ratio(num(rng), den(rng)));
}

}  // namespace

TEST(ExactScalarSign, Examples) {
    EXPECT_EQ(sign(q(0, 0)), 0);
    EXPECT_EQ(sign(q(1, -1)), -1);
    EXPECT_EQ(sign(q(3, -1)), 1);
    EXPECT_EQ(sign(q(-3, 1)), -1);
    EXPECT_EQ(sign(q(0, -2)), -1);
    EXPECT_EQ(sign(q(5, 0)), 1);
    EXPECT_EQ(sign(q(2, 1)), 1);
}

TEST(ExactScalarSign, NearCancellation) {
    // 161^2 - 5 * 72^2 = 1, so 161 - 72 sqrt5 is a tiny positive number
    EXPECT_EQ(sign(q(161, -72)), 1);
    EXPECT_EQ(sign(q(-161, 72)), -1);
    EXPECT_EQ(sign(q(160, -72)), -1);
}

TEST(ExactScalarArith, Examples) {
    EXPECT_EQ(q(1) * q(1), q(1));
    EXPECT_EQ(q(0, 1) * q(0, 1), q(5));
    EXPECT_TRUE((q(1, 1) + q(-1, -1)).is_zero());
    EXPECT_EQ(q(2, 3) - q(5, -1), q(-3, 4));
    EXPECT_EQ(-q(2, -3), q(-2, 3));
    EXPECT_EQ(q(1, 2) * q(3, -1), q(3 - 10, -1 + 6));
}

TEST(ExactScalarArith, GoldenRatio) {
    auto phi = golden_ratio();
    EXPECT_EQ(phi * phi, phi + q(1));
    EXPECT_EQ(phi * phi.inverse(), q(1));
    EXPECT_EQ(phi.inverse(), phi - q(1));
}

TEST(ExactScalarArith, CanonicalRationals) {
    ExactScalar x(ratio(6, -4), ratio(10, 20));
    EXPECT_EQ(x.rational_part().get_num(), -3);
    EXPECT_EQ(x.rational_part().get_den(), 2);
    EXPECT_EQ(x.sqrt5_part().get_den(), 2);
    EXPECT_EQ(x.divided_by(ratio(3, 2)), ExactScalar(Rational(-1), ratio(1, 3)));
    EXPECT_THROW(x.divided_by(Rational(0)), std::domain_error);
    EXPECT_THROW(q(0).inverse(), std::domain_error);
}

TEST(ExactScalarProperties, RandomPairs) {
    std::mt19937_64 rng(20261016);
    for (int i = 0; i < 10000; ++i) {
        auto x = random_scalar(rng), y = random_scalar(rng);
        ASSERT_EQ(sign(x * y), sign(x) * sign(y)) << x << " * " << y;
        ASSERT_EQ(sign(x + x), sign(x));
        ASSERT_EQ(sign(-x), -sign(x));
        ASSERT_EQ(x - y + y, x);
        ASSERT_EQ(x * (y + x), x * y + x * x);
        if (!x.is_zero()) {
            ASSERT_EQ(x * x.inverse(), q(1));
        }
    }
}

TEST(ExactScalarProperties, FloatCrossCheck) {
    std::mt19937_64 rng(7);
    int compared = 0;
    for (int i = 0; i < 10000; ++i) {
        auto x = random_scalar(rng);
        long double v = static_cast<long double>(x.rational_part().get_d()) +
                        static_cast<long double>(x.sqrt5_part().get_d()) * std::sqrt(5.0L);
        if (std::fabs(static_cast<double>(v)) <= 1e-6) continue;
        ++compared;
        ASSERT_EQ(sign(x), v > 0 ? 1 : -1) << x;
        ASSERT_NEAR(to_double(x), static_cast<double>(v), 1e-9 * (1 + std::fabs(static_cast<double>(v))));
    }
    EXPECT_GT(compared, 9000);
}

TEST(RationalText, ParseAndFormat) {
    EXPECT_EQ(parse_rational("3/4"), ratio(3, 4));
    EXPECT_EQ(parse_rational("-6/8"), ratio(-3, 4));
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_EQ(parse_rational("+3"), Rational(3));
    EXPECT_EQ(format_rational(Rational(3)), "3/1");
    EXPECT_EQ(format_rational(ratio(-2, 6)), "-1/3");
    EXPECT_EQ(format_rational(Rational(0)), "0/1");
    for (const char* bad : {"", "1/0", "3/+2", "x", "1/-2", "1.5", "1//2", "/3", "3/"})
        EXPECT_THROW(parse_rational(bad), FormatError) << bad;
}

TEST(RationalText, RoundTrip) {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 1000);
    for (int i = 0; i < 1000; ++i) {
        Rational r = ratio(num(rng), den(rng));
        ASSERT_EQ(parse_rational(format_rational(r)), r);
    }
}

TEST(CheckedInt, ArithmeticAndOverflow) {
    CheckedInt a(1'000'000'007), b(-3);
    EXPECT_EQ((a * b).value(), -3'000'000'021);
    EXPECT_EQ(sign(b), -1);
    EXPECT_EQ(sign(CheckedInt(0)), 0);
    CheckedInt big(std::int64_t{1} << 62);
    EXPECT_THROW(big * CheckedInt(4), ArithmeticOverflow);
    EXPECT_THROW(big + big, ArithmeticOverflow);
    EXPECT_THROW(-CheckedInt(std::numeric_limits<std::int64_t>::min()), ArithmeticOverflow);
}
