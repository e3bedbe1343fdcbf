// Behavior of the catalog checks, asserted as it actually is. Two catalog
// entries are false as stated (the upper side of THM1 and R1U for large x);
// these tests pin down that the checker detects this rather than hiding it.

#include "support/oracles.hpp"

#include <gtest/gtest.h>

#include <set>
#include <sstream>

using namespace psicert;

namespace {

std::vector<Rational> R(std::initializer_list<long> xs) { return {xs.begin(), xs.end()}; }

Verdict comparison_verdict(const CertReport& r, std::size_t point, const std::string& label)
{
    for (const auto& c : r.points.at(point).comparisons)
        if (c.label == label)
            return c.verdict;
    throw std::runtime_error("no comparison " + label);
}

const CertStep& step(const CertReport& r, const std::string& name)
{
    for (const auto& s : r.steps)
        if (s.name == name)
            return s;
    throw std::runtime_error("no step " + name);
}

} // namespace

TEST(Catalog, HasTwelveEntriesWithDomains)
{
    const auto entries = catalog();
    ASSERT_EQ(entries.size(), 12u);
    std::set<std::string> ids;
    for (const auto& e : entries)
        ids.insert(e.id);
    EXPECT_EQ(ids, (std::set<std::string>{"THM1", "THM2", "THM3a", "THM3b", "ELE", "GUO-QI", "BATIR", "YCT", "XP1",
                                          "R1U", "R1V", "BATIR-THETA"}));
    EXPECT_EQ(catalog_entry("THM1").domain_start, 3);
    EXPECT_EQ(catalog_entry("THM2").domain_start, 3);
    EXPECT_EQ(catalog_entry("THM3a").domain_start, 1);
    EXPECT_EQ(catalog_entry("R1V").domain_start, 1);
    EXPECT_FALSE(catalog_entry("ELE").domain_closed);
    EXPECT_EQ(catalog_entry("ELE").domain_start, 0);
    EXPECT_THROW(catalog_entry("NOPE"), std::invalid_argument);
}

TEST(Catalog, DefaultGridSpansDomainToTenThousand)
{
    for (const auto& e : catalog()) {
        const auto g = default_grid(e);
        ASSERT_EQ(g.size(), 40u) << e.id;
        EXPECT_EQ(g.front(), default_grid_start(e));
        EXPECT_EQ(g.back(), 10000);
        for (std::size_t i = 1; i < g.size(); ++i)
            EXPECT_LT(g[i - 1], g[i]);
    }
}

TEST(GridCheck, RejectsPointsOutsideDomain)
{
    EXPECT_THROW(check_grid("THM1", R({2, 3})), std::invalid_argument);
    EXPECT_THROW(check_grid("ELE", R({0, 1})), std::invalid_argument);
    EXPECT_THROW(check_grid("THM2", {}), std::invalid_argument);
    EXPECT_THROW(check_grid("THM2", R({3}), 5), std::invalid_argument);
}

TEST(GridCheck, GuoQiHolds)
{
    const auto r = check_grid("GUO-QI", {Rational(1, 2), 1, 2, 10});
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.points.size(), 4u);
}

TEST(GridCheck, ThetaDecreasesOnSamples)
{
    const auto r = check_grid("BATIR-THETA", R({1, 2, 4, 8}));
    EXPECT_EQ(r.verdict, Verdict::holds);
    ASSERT_EQ(r.points.size(), 3u);
    for (const auto& p : r.points) {
        const auto& c = p.comparisons.front();
        EXPECT_GT(c.larger->lo(), c.smaller->hi());
    }
}

TEST(GridCheck, Thm2HoldsAndSandwichesTrigamma)
{
    const auto r = check_grid("THM2", R({3, 4, 5, 10, 50, 100}));
    EXPECT_EQ(r.verdict, Verdict::holds);
}

TEST(GridCheck, Thm1LowerHoldsUpperIsViolated)
{
    const auto r = check_grid("THM1", R({3, 4, 5, 10, 50, 100}));
    EXPECT_EQ(r.verdict, Verdict::violated);
    for (std::size_t i = 0; i < r.points.size(); ++i) {
        EXPECT_EQ(comparison_verdict(r, i, "lower"), Verdict::holds);
        EXPECT_EQ(comparison_verdict(r, i, "upper"), Verdict::violated);
    }
}

TEST(GridCheck, R1uChangesSignNearSevenAndAHalf)
{
    const auto r = check_grid("R1U", {1, 2, 7, Rational(15, 2) + Rational(1, 1000), 10, 100});
    EXPECT_EQ(comparison_verdict(r, 0, "negative"), Verdict::holds);
    EXPECT_EQ(comparison_verdict(r, 1, "negative"), Verdict::holds);
    EXPECT_EQ(comparison_verdict(r, 2, "negative"), Verdict::holds);
    EXPECT_EQ(comparison_verdict(r, 3, "negative"), Verdict::violated);
    EXPECT_EQ(comparison_verdict(r, 5, "negative"), Verdict::violated);
}

TEST(GridCheck, PointsAreReportedInGridOrder)
{
    const auto grid = R({100, 3, 50, 4});
    const auto r = check_grid("THM2", grid);
    for (std::size_t i = 0; i < grid.size(); ++i)
        EXPECT_EQ(r.points[i].x, grid[i]);
}

TEST(GridCheck, HigherPrecisionDoesNotFlipHolds)
{
    const auto grid = R({3, 7, 40});
    const auto a = check_grid("THM3b", grid, 10, 64), b = check_grid("THM3b", grid, 40, 256);
    EXPECT_EQ(a.verdict, Verdict::holds);
    EXPECT_EQ(b.verdict, Verdict::holds);
}

TEST(Symbolic, Thm2Holds)
{
    const auto r = certify_symbolic("THM2");
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(step(r, "m1' closed form").verdict, Verdict::holds);
    EXPECT_EQ(step(r, "M1' closed form").verdict, Verdict::holds);
}

TEST(Symbolic, Thm3aLowerHolds)
{
    const auto r = certify_symbolic("THM3a-lower");
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(step(r, "T(x) = P(x)/(5040x^7)").verdict, Verdict::holds);
    EXPECT_EQ(step(r, "Q(x) = P(x+1)").verdict, Verdict::holds);
}

TEST(Symbolic, Thm1CertifiesOnlyTheLowerBranch)
{
    const auto r = certify_symbolic("THM1");
    EXPECT_EQ(step(r, "F1").verdict, Verdict::holds);
    EXPECT_EQ(step(r, "G1").verdict, Verdict::undecided);
    EXPECT_EQ(r.verdict, Verdict::undecided);
    // the closed forms correspond to the 1/240 coefficient, not the exact one
    EXPECT_EQ(step(r, "F1' closed form, x^-4 coefficient 1/240").verdict, Verdict::holds);
    EXPECT_EQ(step(r, "G1' closed form, x^-4 coefficient 1/240").verdict, Verdict::holds);
    EXPECT_EQ(step(r, "G1' closed form, exact coefficient 1/120").verdict, Verdict::violated);
}

TEST(Symbolic, R1uIsNotCertifiable) { EXPECT_EQ(certify_symbolic("R1U").verdict, Verdict::undecided); }

TEST(Symbolic, UnknownIdThrows) { EXPECT_THROW(certify_symbolic("THM3b"), std::invalid_argument); }

TEST(Symbolic, R1vCoefficientsArePositive)
{
    const auto r = r1v_coefficient_signs();
    EXPECT_EQ(r.verdict, Verdict::holds);
    EXPECT_EQ(r.steps.size(), 13u);
    for (const auto& s : r.steps)
        EXPECT_EQ(s.verdict, Verdict::holds) << s.name;
}

TEST(Tightness, ScaledDifferencesStayInTheirBands)
{
    std::vector<Rational> grid;
    for (long x = 1; x <= 1024; x *= 2)
        grid.push_back(x);
    for (const auto& row : tightness_report(grid)) {
        EXPECT_EQ(row.scaled1.verdict, Verdict::holds) << row.x;
        EXPECT_EQ(row.scaled2.verdict, Verdict::holds) << row.x;
        EXPECT_TRUE(row.thm2_gap.is_positive());
        EXPECT_TRUE(row.thm3a_gap.contains(Rational(5, 48) / pow(row.x, 6)));
        EXPECT_TRUE(row.thm3b_gap.contains(Rational(7, 90) / pow(row.x, 8)));
    }
    EXPECT_THROW(tightness_report(R({0})), std::invalid_argument);
}

TEST(Tightness, Thm2GapShrinksLikeSeventhPower)
{
    for (long x : {3L, 4L, 8L, 16L, 64L}) {
        const Interval a = tightness_row(x).thm2_gap, b = tightness_row(2 * x).thm2_gap;
        const Interval ratio = a / b;
        EXPECT_GT(ratio.lo(), 100) << x;
        EXPECT_LT(ratio.hi(), 156) << x;
    }
}

TEST(Compare, BoundsAreSortedAndBracketTrigamma)
{
    const auto c = compare_bounds(3);
    for (std::size_t i = 1; i < c.bounds.size(); ++i)
        EXPECT_LE(c.bounds[i - 1].enclosure.lo(), c.bounds[i].enclosure.lo());
    Interval value;
    for (const auto& b : c.bounds)
        if (b.side == "value")
            value = b.enclosure;
    for (const auto& b : c.bounds) {
        if (b.side == "lower" && b.name != "THM1-lower")
            EXPECT_LT(b.enclosure.hi(), value.lo()) << b.name;
        if (b.side == "upper" && b.name != "THM1-upper")
            EXPECT_GT(b.enclosure.lo(), value.hi()) << b.name;
    }
    EXPECT_THROW(compare_bounds(Rational(1, 2)), std::invalid_argument);
}

TEST(Compare, DominanceAtTwoAndThree)
{
    for (long x : {2L, 3L}) {
        const auto c = compare_bounds(x);
        EXPECT_EQ(c.verdict, Verdict::holds) << x;
    }
}

TEST(Compare, LowerBoundOrderReversesForLargeX)
{
    const auto c = compare_bounds(10);
    EXPECT_EQ(c.claims[0].verdict, Verdict::holds);
    EXPECT_EQ(c.claims[1].verdict, Verdict::violated);
    EXPECT_EQ(c.claims[2].verdict, Verdict::holds);
}

TEST(Samples, BigThetaIsPositiveAndDecreasingOnSamples)
{
    const auto rows = sample_open_claims(geometric_grid(Rational(1, 2), 64, 13));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        EXPECT_TRUE(rows[i].big_theta.is_positive()) << rows[i].x;
        if (i + 1 < rows.size())
            EXPECT_GT(rows[i].big_theta.lo(), rows[i + 1].big_theta.hi()) << rows[i].x;
    }
}

TEST(Report, JsonRoundTrip)
{
    for (const auto& r : {check_grid("YCT", {Rational(1, 3), 2, 30}), certify_symbolic("THM2")}) {
        const Json j = to_json(r);
        const CertReport back = cert_report_from_json(Json::parse(j.dump()));
        EXPECT_EQ(to_json(back), j);
        EXPECT_EQ(back.points.size(), r.points.size());
    }
}

TEST(Report, CsvHasOneRowPerComparison)
{
    const auto r = check_grid("XP1", R({1, 2}));
    std::ostringstream os;
    write_csv(os, r);
    const std::string out = os.str();
    EXPECT_EQ(std::count(out.begin(), out.end(), '\n'), 6);
    EXPECT_EQ(csv_field("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_field("say \"hi\""), "\"say \"\"hi\"\"\"");
}

TEST(Expr, EvaluationIsIndependentOfTemporaries)
{
    // evaluating many short-lived trees in one evaluator must not mix results
    Evaluator ev(2, {});
    const Interval a = ev(pow(var(), 2) + 1);
    const Interval b = ev(pow(var(), 3) + 1);
    EXPECT_EQ(a, Interval(Rational(5)));
    EXPECT_EQ(b, Interval(Rational(9)));
    EXPECT_EQ(to_string(exp(var()) / 2), "(exp(x)/2)");
}
