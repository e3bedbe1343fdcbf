#include "support/properties.hpp"

#include <gtest/gtest.h>

using namespace psicert;

namespace {

Polynomial P(std::initializer_list<long> descending) { return Polynomial::from_descending(descending); }

} // namespace

TEST(Polynomial, ArithmeticAndDegree)
{
    const Polynomial p = P({1, -3, 2}); // (x-1)(x-2)
    EXPECT_EQ(p.degree(), 2);
    EXPECT_EQ(Polynomial().degree(), -1);
    EXPECT_EQ(p * P({1, 1}), P({1, -2, -1, 2}));
    EXPECT_EQ(p - p, Polynomial());
    EXPECT_EQ(p.derivative(), P({2, -3}));
    EXPECT_EQ(p(Rational(3)), 2);
}

TEST(Polynomial, DivmodAndGcd)
{
    const Polynomial a = P({1, 0, -1}), b = P({1, 1});
    auto [quot, rem] = divmod(a, b);
    EXPECT_EQ(quot, P({1, -1}));
    EXPECT_TRUE(rem.is_zero());
    EXPECT_EQ(gcd(P({1, -3, 2}), P({1, -1}) * P({1, 5})), P({1, -1}));
    EXPECT_THROW(divmod(a, Polynomial()), DomainError);
}

TEST(Polynomial, TaylorShiftBinomialExample)
{
    // x^3 shifted by 2 is (x+2)^3
    EXPECT_EQ(P({1, 0, 0, 0}).taylor_shift(2), P({1, 6, 12, 8}));
    EXPECT_EQ(P({1, 6, 12, 8}).taylor_shift(-2), P({1, 0, 0, 0}));
}

TEST(Polynomial, TaylorShiftHomomorphism)
{
    const std::string failure = props::taylor_shift_homomorphism(300);
    EXPECT_TRUE(failure.empty()) << failure;
}

TEST(Polynomial, IntervalEvaluationEnclosesPointValues)
{
    props::Random rnd(3);
    for (int i = 0; i < 200; ++i) {
        const Polynomial p = props::random_polynomial(rnd, 7);
        const Interval box = rnd.interval(3);
        const Rational x = rnd.inside(box);
        EXPECT_TRUE(p(box).contains(p(x)));
    }
}

TEST(Positivity, CertifiesAfterShift)
{
    const Polynomial p = P({1, -2, 2}); // (x-1)^2 + 1
    EXPECT_FALSE(positivity_on_ray(p, 0).certified());
    const auto cert = positivity_on_ray(p, 1);
    EXPECT_TRUE(cert.certified());
    EXPECT_TRUE(cert.includes_start);
    EXPECT_EQ(cert.shifted, P({1, 0, 1}));
}

TEST(Positivity, ZeroAtStartIsNotIncluded)
{
    const auto cert = positivity_on_ray(P({1, -3}), 3);
    EXPECT_TRUE(cert.certified());
    EXPECT_FALSE(cert.includes_start);
}

TEST(Positivity, NegativeOrZeroPolynomialIsInconclusive)
{
    EXPECT_FALSE(positivity_on_ray(P({-1, 0}), 5).certified());
    EXPECT_FALSE(positivity_on_ray(Polynomial(), 0).certified());
}

TEST(RationalFunction, NormalFormIsUnique)
{
    const RationalFunction a(P({2, -2}), P({4, 0, -4}));                      // 2(x-1) / 4(x-1)(x+1)
    const RationalFunction b(Polynomial::constant(Rational(-1, 2)), P({-1, -1})); // -1/2 / -(x+1)
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.den(), P({1, 1}));
    EXPECT_EQ(a.num(), Polynomial::constant(Rational(1, 2)));
    EXPECT_THROW(RationalFunction(P({1}), Polynomial()), DomainError);
}

TEST(RationalFunction, DerivativeQuotientRule)
{
    const RationalFunction f(P({1, 0}), P({1, 1})); // x/(x+1)
    EXPECT_EQ(f.derivative(), RationalFunction(Polynomial::constant(1), P({1, 2, 1})));
    EXPECT_THROW(f(Rational(-1)), DomainError);
}

TEST(LogExpr, DerivativeEnclosesDifferenceQuotient)
{
    // e(x) = 2 ln(x^2 + 1) - ln(x) + 1/x; by the mean value theorem the
    // difference quotient over [x, x+h] lies in e' evaluated on that interval.
    const LogRationalExpr e = LogRationalExpr::log(2, RationalFunction(P({1, 0, 1}))) -
                              LogRationalExpr::log(1, RationalFunction::x()) +
                              LogRationalExpr(RationalFunction::inverse_power(1, 1));
    const RationalFunction d = logexpr_derivative(e);
    for (const char* xs : {"1/2", "1", "3", "17/4"}) {
        const Rational x = parse_rational(xs), h(1, 1000);
        const Interval quotient = (e.evaluate(x + h, 128) - e.evaluate(x, 128)) / h;
        EXPECT_TRUE(quotient.overlaps(d(Interval(x, x + h)))) << xs;
    }
}

TEST(LogExpr, LimitClassification)
{
    // ln(x+1) - ln(x) -> 0
    const LogRationalExpr a = LogRationalExpr::log(1, RationalFunction(P({1, 1}))) -
                              LogRationalExpr::log(1, RationalFunction::x());
    EXPECT_EQ(logexpr_limit_at_infinity(a).kind, LimitKind::zero);

    // ln(2x) - ln(x) -> ln 2, not rational
    const LogRationalExpr b = LogRationalExpr::log(1, RationalFunction(P({2, 0}))) -
                              LogRationalExpr::log(1, RationalFunction::x());
    EXPECT_EQ(logexpr_limit_at_infinity(b).kind, LimitKind::diverges);

    // (1/2) ln(4x^2) - ln(2x) -> 0 exactly
    const LogRationalExpr c = LogRationalExpr::log(Rational(1, 2), RationalFunction(P({4, 0, 0}))) -
                              LogRationalExpr::log(1, RationalFunction(P({2, 0})));
    EXPECT_EQ(logexpr_limit_at_infinity(c).kind, LimitKind::zero);

    // ln x diverges; (x+1)/x -> 1
    EXPECT_EQ(logexpr_limit_at_infinity(LogRationalExpr::log(1, RationalFunction::x())).kind, LimitKind::diverges);
    const auto v = logexpr_limit_at_infinity(LogRationalExpr(RationalFunction(P({1, 1}), P({1, 0}))));
    EXPECT_EQ(v.kind, LimitKind::value);
    EXPECT_EQ(v.value, 1);
}

TEST(LogExpr, NegativityCertificate)
{
    // ln(x) - ln(x+1) < 0: derivative 1/(x(x+1)) > 0 and limit 0
    const LogRationalExpr e = LogRationalExpr::log(1, RationalFunction::x()) -
                              LogRationalExpr::log(1, RationalFunction(P({1, 1})));
    const auto cert = certify_negative_on_ray(e, 1);
    EXPECT_TRUE(cert.certified());
    EXPECT_TRUE(cert.includes_start);

    // the opposite sign is not certifiable
    EXPECT_FALSE(certify_negative_on_ray(-e, 1).certified());
}

TEST(LogExpr, JsonOfRationalFunction)
{
    const RationalFunction f(P({1, 2}), P({3, 0, 1}));
    const Json j = to_json(f);
    EXPECT_EQ(polynomial_from_json(j.at("num")), f.num());
    EXPECT_EQ(polynomial_from_json(j.at("den")), f.den());
}
