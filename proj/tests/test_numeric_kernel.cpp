#include "support/oracles.hpp"
#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace psicert;

TEST(Rational, ParsesFractionsIntegersAndDecimalsExactly)
{
    EXPECT_EQ(parse_rational("3/6"), Rational(1, 2));
    EXPECT_EQ(parse_rational("-7"), Rational(-7));
    EXPECT_EQ(parse_rational("1.25"), Rational(5, 4));
    EXPECT_EQ(parse_rational("-0.001"), Rational(-1, 1000));
    EXPECT_EQ(parse_rational("1e-5"), Rational(1, 100000));
    EXPECT_EQ(parse_rational("2.5E3"), Rational(2500));
    EXPECT_EQ(parse_rational("0.1") * 3, Rational(3, 10));
}

TEST(Rational, RejectsMalformedText)
{
    for (const char* bad : {"", "abc", "1/", "/2", "1.2.3", "1e", "--1", "1x"})
        EXPECT_THROW(parse_rational(bad), std::invalid_argument) << bad;
    EXPECT_THROW(parse_rational("1/0"), DomainError);
}

TEST(Rational, DecimalRenderingRespectsRoundingMode)
{
    EXPECT_EQ(to_decimal(Rational(1, 3), 4, Rounding::down), "0.3333");
    EXPECT_EQ(to_decimal(Rational(1, 3), 4, Rounding::up), "0.3334");
    EXPECT_EQ(to_decimal(Rational(-1, 3), 4, Rounding::down), "-0.3334");
    EXPECT_EQ(to_decimal(Rational(2, 3), 2), "0.67");
    EXPECT_EQ(to_decimal(Rational(5), 0), "5");
}

TEST(Interval, RejectsReversedEndpoints) { EXPECT_THROW(Interval(Rational(1), Rational(0)), std::invalid_argument); }

TEST(Interval, DivisionByIntervalContainingZeroThrows)
{
    EXPECT_THROW(Interval(Rational(1)) / Interval(Rational(-1), Rational(1)), DomainError);
    EXPECT_THROW(reciprocal(Interval(Rational(0), Rational(1))), DomainError);
}

TEST(Interval, EvenPowerOfStraddlingIntervalStartsAtZero)
{
    const Interval sq = pow(Interval(Rational(-2), Rational(1)), 2);
    EXPECT_EQ(sq, Interval(Rational(0), Rational(4)));
}

TEST(Interval, RandomizedSoundness)
{
    const std::string failure = props::interval_soundness(1000);
    EXPECT_TRUE(failure.empty()) << failure;
}

TEST(Interval, RoundingIsOutward)
{
    const Interval a(Rational(1, 3), Rational(2, 3));
    const Interval g = round_to_grid(a, 10);
    EXPECT_TRUE(g.contains(a));
    EXPECT_LE(g.width() - a.width(), Rational(2, 1024));
    const Interval r = round_outward(a, 20);
    EXPECT_TRUE(r.contains(a));
}

TEST(Elementary, ExpMatchesReferenceValues)
{
    for (const auto& s : oracle::kExp) {
        const Interval e = iv_exp(Interval(parse_rational(s.x)), 128);
        EXPECT_TRUE(oracle::agrees(e, s.value)) << s.x << " " << e;
        EXPECT_LT(e.width(), abs(e.hi()) * pow2(-120)) << s.x;
    }
    EXPECT_TRUE(oracle::agrees(iv_exp(Interval(Rational(100)), 128), oracle::kExp100));
    EXPECT_EQ(iv_exp(Interval(Rational(0)), 64), Interval(Rational(1)));
}

TEST(Elementary, LnMatchesReferenceValues)
{
    for (const auto& s : oracle::kLn) {
        const Interval l = iv_ln(Interval(parse_rational(s.x)), 128);
        EXPECT_TRUE(oracle::agrees(l, s.value)) << s.x << " " << l;
        EXPECT_LT(l.width(), pow2(-120)) << s.x;
    }
    EXPECT_TRUE(oracle::agrees(iv_ln2(128), oracle::kLn2));
}

TEST(Elementary, LnRejectsNonPositiveArguments)
{
    EXPECT_THROW(iv_ln(Interval(Rational(0), Rational(1)), 64), DomainError);
    EXPECT_THROW(iv_ln(Interval(Rational(-2)), 64), DomainError);
}

TEST(Elementary, SinhMatchesReferenceValues)
{
    for (const auto& s : oracle::kSinh)
        EXPECT_TRUE(oracle::agrees(iv_sinh(Interval(parse_rational(s.x)), 128), s.value)) << s.x;
}

TEST(Elementary, PiMatchesReferenceAndNarrowsWithPrecision)
{
    const Interval p64 = iv_pi(64), p256 = iv_pi(256);
    EXPECT_TRUE(oracle::agrees(p64, oracle::kPi));
    EXPECT_TRUE(oracle::agrees(p256, oracle::kPi));
    EXPECT_LT(p64.width(), pow2(-64));
    EXPECT_LT(p256.width(), pow2(-256));
    EXPECT_TRUE(p64.overlaps(p256));
}

TEST(Elementary, ExpOfIntervalCoversEndpointValues)
{
    const Interval a(Rational(-1, 2), Rational(3, 2));
    const Interval e = iv_exp(a, 64);
    EXPECT_LE(e.lo(), iv_exp(Interval(a.lo()), 64).lo());
    EXPECT_GE(e.hi(), iv_exp(Interval(a.hi()), 64).hi());
}

TEST(Elementary, ExpAndLnAreMutuallyConsistent)
{
    for (const char* x : {"1/7", "3", "10/3", "1/1000"}) {
        const Rational q = parse_rational(x);
        EXPECT_TRUE(iv_ln(iv_exp(Interval(q), 96), 96).contains(q)) << x;
        EXPECT_TRUE(iv_exp(iv_ln(Interval(q), 96), 96).contains(q)) << x;
    }
}

TEST(Json, IntervalRoundTrips)
{
    const Interval a(Rational(-1, 3), Rational(22, 7));
    EXPECT_EQ(interval_from_json(Json::parse(to_json(a).dump())), a);
}
