#pragma once

// Certification of catalog entries: interval grid checks, exact replays of the
// monotonicity proofs, and tables of bound gaps.

#include "psicert/catalog.hpp"
#include "psicert/logexpr.hpp"
#include "psicert/series.hpp"

#include <atomic>
#include <future>
#include <optional>
#include <thread>

namespace psicert {

enum class Verdict { holds, undecided, violated };

inline std::string to_string(Verdict v)
{
    switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::undecided: return "undecided";
    case Verdict::violated: return "violated";
    }
    return "?";
}

/// violated beats undecided beats holds.
inline Verdict combine(Verdict a, Verdict b)
{
    if (a == Verdict::violated || b == Verdict::violated)
        return Verdict::violated;
    if (a == Verdict::undecided || b == Verdict::undecided)
        return Verdict::undecided;
    return Verdict::holds;
}

enum class Method { grid, symbolic, coefficient_signs };

inline std::string to_string(Method m)
{
    switch (m) {
    case Method::grid: return "grid";
    case Method::symbolic: return "symbolic";
    case Method::coefficient_signs: return "coefficient-signs";
    }
    return "?";
}

struct ComparisonResult {
    std::string label;
    std::optional<Interval> smaller; ///< empty when evaluation failed (e.g. ln of a non-positive enclosure)
    std::optional<Interval> larger;
    bool strict = true;
    Verdict verdict = Verdict::undecided;
};

struct PointResult {
    Rational x;
    Rational shift_target;
    long work_precision = 0;
    int attempts = 0;
    Verdict verdict = Verdict::undecided;
    std::vector<ComparisonResult> comparisons;
};

struct CertStep {
    std::string name;
    Verdict verdict = Verdict::undecided;
    bool informational = false; ///< cross-checks that do not enter the total verdict
    std::string detail;
    Json data = Json::object();
};

struct CertReport {
    std::string id;
    Method method = Method::grid;
    Verdict verdict = Verdict::holds;
    std::vector<PointResult> points;
    std::vector<CertStep> steps;
};

struct GridOptions {
    Rational shift_target = kDefaultShiftTarget;
    long work_precision = 64;
    int retries = 4; ///< each retry doubles shift_target and work_precision
};

/// Decisive separation of two enclosures, in either direction.
inline Verdict separation(const Interval& smaller, const Interval& larger, bool strict)
{
    if (strict ? smaller.hi() < larger.lo() : smaller.hi() <= larger.lo())
        return Verdict::holds;
    if (strict ? smaller.lo() >= larger.hi() : smaller.lo() > larger.hi())
        return Verdict::violated;
    return Verdict::undecided;
}

namespace detail {

template <class F>
auto parallel_map(std::size_t n, F f) -> std::vector<decltype(f(std::size_t{0}))>
{
    std::vector<decltype(f(std::size_t{0}))> out(n);
    const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(std::thread::hardware_concurrency(), n));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i)
            out[i] = f(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::future<void>> tasks;
    for (std::size_t w = 0; w < workers; ++w)
        tasks.push_back(std::async(std::launch::async, [&] {
            for (std::size_t i = next++; i < n; i = next++)
                out[i] = f(i);
        }));
    for (auto& t : tasks)
        t.get();
    return out;
}

inline std::optional<Interval> try_evaluate(Evaluator& ev, const Expr& e)
{
    try {
        return ev(e);
    } catch (const DomainError&) {
        return std::nullopt;
    }
}

inline ComparisonResult compare(Evaluator& ev, const Comparison& c)
{
    ComparisonResult r{c.label, try_evaluate(ev, c.smaller), try_evaluate(ev, c.larger), c.strict, Verdict::undecided};
    if (r.smaller && r.larger)
        r.verdict = separation(*r.smaller, *r.larger, c.strict);
    return r;
}

inline Verdict point_verdict(const std::vector<ComparisonResult>& rs)
{
    Verdict v = Verdict::holds;
    for (const auto& r : rs)
        v = combine(v, r.verdict);
    return v;
}

// Compares f(x) > f(y) for x < y, evaluating at both points.
inline ComparisonResult compare_decreasing(const Expr& f, const Rational& x, const Rational& y, const EvalContext& ctx)
{
    Evaluator at_x(x, ctx), at_y(y, ctx);
    ComparisonResult r{"f(" + to_string(x) + ") > f(" + to_string(y) + ")", try_evaluate(at_y, f),
                       try_evaluate(at_x, f), true, Verdict::undecided};
    if (r.smaller && r.larger)
        r.verdict = separation(*r.smaller, *r.larger, true);
    return r;
}

} // namespace detail

/// Evaluates comparisons at one point, refining until nothing is undecided or
/// the retry budget is spent. A decisive violation is final.
inline PointResult check_point(const std::vector<Comparison>& comparisons, const Rational& x, const GridOptions& opt)
{
    PointResult p;
    p.x = x;
    Rational shift = opt.shift_target;
    long prec = opt.work_precision;
    for (int attempt = 0; attempt <= opt.retries; ++attempt, shift *= 2, prec *= 2) {
        Evaluator ev(x, {shift, prec});
        p.comparisons.clear();
        for (const auto& c : comparisons)
            p.comparisons.push_back(detail::compare(ev, c));
        p.shift_target = shift;
        p.work_precision = prec;
        p.attempts = attempt + 1;
        p.verdict = detail::point_verdict(p.comparisons);
        if (p.verdict != Verdict::undecided)
            break;
    }
    return p;
}

inline CertReport check_grid(const InequalityEntry& entry, const std::vector<Rational>& grid,
                             const GridOptions& opt = {})
{
    if (grid.empty())
        throw std::invalid_argument("empty grid for " + entry.id);
    for (const auto& x : grid)
        if (!entry.in_domain(x))
            throw std::invalid_argument("grid point " + to_string(x) + " is outside the domain of " + entry.id +
                                        (entry.domain_closed ? " (x >= " : " (x > ") + to_string(entry.domain_start) +
                                        ")");
    if (opt.shift_target < 10)
        throw std::invalid_argument("shift_target must be at least 10");
    if (opt.work_precision < 8)
        throw std::invalid_argument("work_precision must be at least 8");

    CertReport report;
    report.id = entry.id;
    report.method = Method::grid;

    if (entry.kind == EntryKind::pointwise) {
        report.points = detail::parallel_map(grid.size(), [&](std::size_t i) {
            return check_point(entry.comparisons, grid[i], opt);
        });
    } else {
        std::vector<Rational> sorted(grid);
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        if (sorted.size() < 2)
            throw std::invalid_argument("monotonicity check needs at least two distinct grid points");
        report.points = detail::parallel_map(sorted.size() - 1, [&](std::size_t i) {
            PointResult p;
            p.x = sorted[i];
            Rational shift = opt.shift_target;
            long prec = opt.work_precision;
            for (int attempt = 0; attempt <= opt.retries; ++attempt, shift *= 2, prec *= 2) {
                p.comparisons = {detail::compare_decreasing(entry.function, sorted[i], sorted[i + 1], {shift, prec})};
                p.shift_target = shift;
                p.work_precision = prec;
                p.attempts = attempt + 1;
                p.verdict = p.comparisons.front().verdict;
                if (p.verdict != Verdict::undecided)
                    break;
            }
            return p;
        });
    }
    for (const auto& p : report.points)
        report.verdict = combine(report.verdict, p.verdict);
    return report;
}

inline CertReport check_grid(const std::string& id, const std::vector<Rational>& grid,
                             const Rational& shift_target = kDefaultShiftTarget, long work_precision = 64)
{
    return check_grid(catalog_entry(id), grid, GridOptions{shift_target, work_precision});
}

// ---------------------------------------------------------------------------
// Exact replays

namespace detail {

// sum_{k=1}^{K} a_k x^-k of an expansion without ln term, as N(x)/x^K.
inline RationalFunction expansion_part(const AsymptoticExpansion& e, long K)
{
    std::vector<Rational> num(static_cast<std::size_t>(K + 1));
    for (long k = 0; k <= K; ++k)
        num[static_cast<std::size_t>(K - k)] = e.coeff(k);
    return {Polynomial(std::move(num)), Polynomial::monomial(1, static_cast<std::size_t>(K))};
}

inline RationalFunction poly(std::initializer_list<long> descending)
{
    return RationalFunction(Polynomial::from_descending(descending));
}

inline RationalFunction inv(const Rational& c, std::size_t k) { return RationalFunction::inverse_power(c, k); }

inline const RationalFunction& X()
{
    static const RationalFunction x = RationalFunction::x();
    return x;
}

inline Json signs_json(const Polynomial& p)
{
    std::string s;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        s += sgn(*it) > 0 ? '+' : (sgn(*it) < 0 ? '-' : '0');
    return s;
}

inline CertStep negativity_step(const std::string& name, const std::string& expression, const LogRationalExpr& e,
                                const Rational& s)
{
    const NegativityCertificate cert = certify_negative_on_ray(e, s);
    CertStep step;
    step.name = name;
    step.verdict = cert.certified() && cert.includes_start ? Verdict::holds : Verdict::undecided;
    const bool increasing = cert.derivative_num.certified() && cert.derivative_den.certified();
    step.detail = expression + " < 0 on [" + to_string(s) + ", inf): derivative numerator/denominator after shift " +
                  to_string(s) + ": " + (cert.derivative_num.certified() ? "nonnegative" : "not nonnegative") + "/" +
                  (cert.derivative_den.certified() ? "nonnegative" : "not nonnegative") +
                  ", limit at infinity: " + to_string(cert.limit.kind) +
                  (increasing ? "" : ", monotonicity not certified");

    Json logs = Json::array();
    for (std::size_t i = 0; i < e.log_terms().size(); ++i)
        logs.push_back({{"coeff", to_string(e.log_terms()[i].coeff)},
                        {"arg", to_json(e.log_terms()[i].arg)},
                        {"arg_positive", cert.log_arg_nums[i].certified() && cert.log_arg_dens[i].certified()}});
    step.data = {{"shift", to_string(s)},
                 {"log_terms", logs},
                 {"rational_part", to_json(e.rational_part())},
                 {"derivative", to_json(cert.derivative)},
                 {"shifted_numerator", to_json(cert.derivative_num.shifted)},
                 {"shifted_numerator_signs", signs_json(cert.derivative_num.shifted)},
                 {"shifted_denominator", to_json(cert.derivative_den.shifted)},
                 {"shifted_denominator_signs", signs_json(cert.derivative_den.shifted)},
                 {"limit", to_string(cert.limit.kind)},
                 {"includes_start", cert.includes_start}};
    return step;
}

inline CertStep identity_step(const std::string& name, const RationalFunction& computed,
                              const RationalFunction& expected)
{
    CertStep step;
    step.name = name;
    step.informational = true;
    step.verdict = computed == expected ? Verdict::holds : Verdict::violated;
    step.detail = step.verdict == Verdict::holds ? "exact identity" : "differs";
    step.data = {{"computed", to_json(computed)}, {"expected", to_json(expected)}};
    return step;
}

inline CertStep positive_coefficients_step(const std::string& name, const Polynomial& p)
{
    CertStep step;
    step.name = name;
    step.informational = true;
    step.verdict = positivity_on_ray(p, 0).certified() ? Verdict::holds : Verdict::violated;
    step.detail = "coefficient signs " + signs_json(p).get<std::string>();
    step.data = {{"polynomial", to_json(p)}};
    return step;
}

inline RationalFunction shifted(const RationalFunction& f, const Rational& s)
{
    return {f.num().taylor_shift(s), f.den().taylor_shift(s)};
}

// psi(x+1) series truncated through x^-K (ln x term excluded).
inline RationalFunction digamma_part(long K) { return expansion_part(digamma_expansion(K), K); }
// psi'(x+1) series truncated through x^-K.
inline RationalFunction trigamma_part(long K) { return expansion_part(trigamma_expansion(K), K); }

inline LogRationalExpr ln(const RationalFunction& f) { return LogRationalExpr::log(1, f); }

inline CertReport replay_thm1()
{
    CertReport r{"THM1", Method::symbolic, Verdict::holds, {}, {}};
    const RationalFunction alpha = RationalFunction::constant(Rational(1, 2)) + inv(Rational(1, 90), 3) -
                                   inv(Rational(1, 60), 4);
    const RationalFunction beta = RationalFunction::constant(Rational(1, 2)) + inv(Rational(1, 90), 3);
    const RationalFunction q4 = inv(Rational(1, 120), 4);

    // psi(x+1) - ln x lies between the order-6 and order-4 truncations;
    // psi'(x+1) lies between the order-9 and order-7 truncations.
    auto f1 = [&](const RationalFunction& psi_lower) {
        return ln(X() + alpha) - 2 * (ln(X()) + psi_lower) - ln(trigamma_part(9)) - q4;
    };
    auto g1 = [&](const RationalFunction& psi_upper) {
        return -ln(X() + beta) + ln(trigamma_part(7)) + 2 * (ln(X()) + psi_upper) + q4;
    };
    // with exact coefficients the x^-4 term of the psi series is +1/120
    const LogRationalExpr F1 = f1(digamma_part(6));
    const LogRationalExpr G1 = g1(digamma_part(4));
    r.steps.push_back(negativity_step("F1", "F1(x)", F1, 3));
    r.steps.push_back(negativity_step("G1", "G1(x)", G1, 3));

    // Known factorizations of the same construction when the x^-4 term of the
    // psi series is taken as 1/240.
    RationalFunction legacy_lower = digamma_part(6) - inv(Rational(1, 240), 4);
    RationalFunction legacy_upper = digamma_part(4) - inv(Rational(1, 240), 4);
    const Polynomial A = Polynomial::from_descending(
        {84000, 3753750, 75109720, 896904120, 7160223140, 40457327085, 166700796732, 507517074474, 1141703970759,
         1873185114060, 2175691772642, 1690072075536, 783944661553, 162974708124});
    const Polynomial B = Polynomial::from_descending(
        {210, 4935, 50750, 298305, 1096193, 2578821, 3792857, 3188649, 1173161});
    const Polynomial C = Polynomial::from_descending(
        {23625, 604200, 6818475, 44510545, 184933335, 506070905, 909421185, 1030441127, 663679092, 183168418});
    const Polynomial D = Polynomial::from_descending({210, 3675, 26810, 104370, 228683, 267393, 130352});
    const RationalFunction F1_closed(
        A.taylor_shift(-3), Polynomial::monomial(105, 7) * Polynomial::from_descending({180, 90, 0, 0, 2, -3}) *
                                B.taylor_shift(-3));
    const RationalFunction G1_closed(
        C.taylor_shift(-3), Polynomial::monomial(15, 5) * Polynomial::from_descending({90, 45, 0, 0, 1}) *
                                D.taylor_shift(-3));
    r.steps.push_back(identity_step("F1' closed form, x^-4 coefficient 1/240", logexpr_derivative(f1(legacy_lower)),
                                    F1_closed));
    r.steps.push_back(identity_step("G1' closed form, x^-4 coefficient 1/240", logexpr_derivative(g1(legacy_upper)),
                                    G1_closed));
    r.steps.push_back(identity_step("F1' closed form, exact coefficient 1/120", logexpr_derivative(F1), F1_closed));
    r.steps.push_back(identity_step("G1' closed form, exact coefficient 1/120", logexpr_derivative(G1), G1_closed));
    for (auto [name, p] : {std::pair{"A", &A}, {"B", &B}, {"C", &C}, {"D", &D}})
        r.steps.push_back(positive_coefficients_step(std::string(name) + " has positive coefficients", *p));
    return r;
}

inline CertReport replay_thm2()
{
    CertReport r{"THM2", Method::symbolic, Verdict::holds, {}, {}};
    const RationalFunction m = inv(1, 1) - inv(Rational(1, 24), 4) + inv(Rational(7, 360), 6);
    const RationalFunction M = m + inv(Rational(1, 90), 7);
    // psi'(x) = psi'(x+1) + 1/x^2, bracketed by the order-9 and order-11 truncations
    const RationalFunction one = RationalFunction::constant(1);
    const RationalFunction lower = one + trigamma_part(9) + inv(1, 2);
    const RationalFunction upper = one + trigamma_part(11) + inv(1, 2);
    const LogRationalExpr m1 = LogRationalExpr(m) - ln(lower);
    const LogRationalExpr M1 = LogRationalExpr(M) - ln(upper);
    r.steps.push_back(negativity_step("m1", "m1(x)", m1, 3));
    r.steps.push_back(negativity_step("-M1", "-M1(x)", -M1, 3));

    const Polynomial E = Polynomial::from_descending(
        {980, 22485, 221130, 1212855, 4032099, 8229303, 9865371, 6074127, 1290163});
    const Polynomial F = Polynomial::from_descending({66495, 2146155, 31007240, 263913573, 1464790565, 5537745108,
                                                      14437981040, 25626153678, 29624987873, 20135221233,
                                                      6106987838});
    const Polynomial G = Polynomial::from_descending(
        {210, 5880, 73185, 531440, 2481255, 7724423, 16033731, 21398207, 16660569, 5765861});
    const Polynomial H = Polynomial::from_descending({2310, 78540, 1213905, 11258170, 69614160, 301344043,
                                                      931827204, 2058324400, 3182887290, 3281444518, 2029943157,
                                                      570820414});
    r.steps.push_back(identity_step("m1' closed form", logexpr_derivative(m1),
                                    {E.taylor_shift(-3), Polynomial::monomial(60, 7) * G.taylor_shift(-3)}));
    r.steps.push_back(identity_step("M1' closed form", logexpr_derivative(M1),
                                    {-F.taylor_shift(-3), Polynomial::monomial(180, 8) * H.taylor_shift(-3)}));
    for (auto [name, p] : {std::pair{"E", &E}, {"F", &F}, {"G", &G}, {"H", &H}})
        r.steps.push_back(positive_coefficients_step(std::string(name) + " has positive coefficients", *p));
    return r;
}

inline CertReport replay_thm3a_lower()
{
    CertReport r{"THM3a-lower", Method::symbolic, Verdict::holds, {}, {}};
    // 2c(x) < e^{1/(x+1)} - T(x) with e^{-1/x} > sum_{k<=7} (-1/x)^k/k! and
    // psi'(x+1) > order-5 truncation.
    RationalFunction taylor;
    for (unsigned k = 0; k <= 7; ++k)
        taylor = taylor + inv(Rational((k % 2 ? -1 : 1)) / Rational(factorial(k)), k);
    const RationalFunction T = taylor - inv(Rational(1, 12), 5) + inv(Rational(5, 24), 6) + 2 * trigamma_part(5);
    const LogRationalExpr c1 = LogRationalExpr(RationalFunction(Polynomial::constant(1), Polynomial::from_descending({1, 1}))) - ln(T);
    r.steps.push_back(negativity_step("c1", "c1(x)", c1, 1));

    const Polynomial P = Polynomial::from_descending({5040, 5040, -2520, 840, 210, -798, 1057, -1});
    const Polynomial Q = Polynomial::from_descending({5040, 40320, 133560, 240240, 255570, 161112, 56371, 8868});
    r.steps.push_back(identity_step("T(x) = P(x)/(5040x^7)", T, {P, Polynomial::monomial(5040, 7)}));
    const Polynomial x1sq = Polynomial::from_descending({1, 2, 1});
    r.steps.push_back(identity_step("c1' closed form", logexpr_derivative(c1),
                                    {Polynomial::from_descending({7630, 6329, -7}),
                                     Polynomial::x() * x1sq * P}));
    r.steps.push_back(identity_step("c1' numerator shifted by 1",
                                    RationalFunction(Polynomial::from_descending({7630, 6329, -7}).taylor_shift(1)),
                                    RationalFunction(Polynomial::from_descending({7630, 21589, 13952}))));
    r.steps.push_back(identity_step("Q(x) = P(x+1)", RationalFunction(P.taylor_shift(1)), RationalFunction(Q)));
    r.steps.push_back(positive_coefficients_step("Q has positive coefficients", Q));
    return r;
}

inline CertReport replay_r1u()
{
    CertReport r{"R1U", Method::symbolic, Verdict::holds, {}, {}};
    const RationalFunction alpha = RationalFunction::constant(Rational(1, 2)) + inv(Rational(1, 90), 3) -
                                   inv(Rational(1, 60), 4);
    const LogRationalExpr u = ln(X() + alpha) - ln(X() + RationalFunction::constant(Rational(1, 2))) -
                              LogRationalExpr(inv(Rational(1, 120), 4));
    r.steps.push_back(negativity_step("u", "u(x)", u, 1));
    return r;
}

} // namespace detail

/// Ids accepted by certify_symbolic.
inline const std::vector<std::string>& symbolic_ids()
{
    static const std::vector<std::string> ids{"THM1", "THM2", "THM3a-lower", "R1U"};
    return ids;
}

/// Exact replay of a monotonicity proof. "holds" needs every non-informational
/// step to be a complete certificate; otherwise the total is "undecided".
inline CertReport certify_symbolic(const std::string& id)
{
    CertReport r;
    if (id == "THM1")
        r = detail::replay_thm1();
    else if (id == "THM2")
        r = detail::replay_thm2();
    else if (id == "THM3a-lower")
        r = detail::replay_thm3a_lower();
    else if (id == "R1U")
        r = detail::replay_r1u();
    else
        throw std::invalid_argument("no symbolic replay for '" + id + "'");
    r.verdict = Verdict::holds;
    for (const auto& s : r.steps)
        if (!s.informational && s.verdict != Verdict::holds)
            r.verdict = Verdict::undecided;
    return r;
}

/// Sign certificates for the nine coefficients of the derivative numerator of
/// v(x) (a polynomial in x-1 whose coefficients are a pi^2 + b e^{2 gamma}),
/// plus an enclosure check that the closed form matches v' at sample points.
inline CertReport r1v_coefficient_signs(long work_precision = 64)
{
    CertReport r{"R1V", Method::coefficient_signs, Verdict::holds, {}, {}};
    static const std::vector<std::pair<long, long>> ab{
        {2700, -8100},          {21600, -64800},       {75600, -226800},
        {180 * 840, -180 * 2521}, {630 * 300, -630 * 901}, {45 * 3361, -45 * 10096},
        {45 * 1683, -45 * 5044},  {3 * 7245, -3 * 21538},  {2 * 1373, -2 * 4002}};
    GridOptions opt;
    opt.work_precision = work_precision;
    const Expr pi2 = pow(constant(NamedConstant::pi), 2);
    const Expr e2g = exp(2 * constant(NamedConstant::euler_gamma));
    std::vector<Expr> coeff;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        coeff.push_back(ab[i].first * pi2 + ab[i].second * e2g);
        const long degree = static_cast<long>(ab.size() - 1 - i);
        PointResult p = check_point({{"coefficient of (x-1)^" + std::to_string(degree), Expr(0L), coeff.back()}}, 1,
                                    opt);
        CertStep step;
        step.name = "coefficient of (x-1)^" + std::to_string(degree) + " > 0";
        step.verdict = p.verdict;
        step.detail = std::to_string(ab[i].first) + " pi^2 " + std::to_string(ab[i].second) + " e^{2 gamma}";
        if (p.comparisons.front().larger)
            step.data = {{"enclosure", to_json(*p.comparisons.front().larger)}};
        r.steps.push_back(std::move(step));
    }

    // v'(x) = (1 - 1/(30x^4))/(x + beta) + 1/(30x^5) - 1/(x + bstar)
    const Expr v = var();
    const Expr vprime = (1 - 1 / (30 * pow(v, 4))) / (v + bounds::beta()) + 1 / (30 * pow(v, 5)) -
                        1 / (v + constant(NamedConstant::batir_bstar));
    Expr numerator = coeff.front();
    for (std::size_t i = 1; i < coeff.size(); ++i)
        numerator = numerator * (v - 1) + coeff[i];
    const Expr closed = numerator / (30 * pow(v, 5) * (90 * pow(v, 4) + 45 * pow(v, 3) + 1) *
                                     (6 * e2g * v + pi2));
    for (const Rational& x : {Rational(1), Rational(2), Rational(5), Rational(40)}) {
        CertStep step;
        step.name = "closed form of v' at x = " + to_string(x);
        step.informational = true;
        Evaluator ev(x, {kDefaultShiftTarget, 2 * work_precision});
        const Interval a = ev(vprime), b = ev(closed);
        step.verdict = a.overlaps(b) ? Verdict::holds : Verdict::violated;
        step.detail = step.verdict == Verdict::holds ? "enclosures overlap" : "enclosures disjoint";
        step.data = {{"direct", to_json(a)}, {"closed_form", to_json(b)}};
        r.steps.push_back(std::move(step));
    }
    for (const auto& s : r.steps)
        if (!s.informational && s.verdict != Verdict::holds)
            r.verdict = combine(r.verdict, s.verdict);
    return r;
}

// ---------------------------------------------------------------------------
// Tables

/// An enclosure that should lie inside [lo, hi].
struct RangeCheck {
    Interval value;
    Rational lo, hi;
    Verdict verdict = Verdict::undecided;
};

inline Verdict containment(const Interval& v, const Rational& lo, const Rational& hi)
{
    if (lo <= v.lo() && v.hi() <= hi)
        return Verdict::holds;
    if (v.hi() < lo || v.lo() > hi)
        return Verdict::violated;
    return Verdict::undecided;
}

struct TightnessRow {
    Rational x;
    Interval d1;       ///< psi'(x+1) - theta(x,1)
    Interval d2;       ///< psi'(x+1) - theta(x,2)
    RangeCheck scaled1; ///< x^5 d1 in [1/24 - 5/(48x), 1/24]
    RangeCheck scaled2; ///< x^7 d2 in [-1/45, -1/45 + 7/(90x)]
    Interval thm1_gap; ///< upper - lower of the psi'(x+1) bounds
    Interval thm2_gap; ///< e^M - e^m
    Interval thm3a_gap;
    Interval thm3b_gap;
    Rational shift_target;
    long work_precision = 0;
};

inline TightnessRow tightness_row(const Rational& x, const GridOptions& opt = {})
{
    if (x < 1)
        throw std::invalid_argument("tightness report needs x >= 1, got " + to_string(x));
    using namespace bounds;
    const Expr v = var();
    const Expr tri1 = trigamma(v + 1);
    const Expr d1 = tri1 - theta(1), d2 = tri1 - theta(2);
    const Expr s1 = pow(v, 5) * d1, s2 = pow(v, 7) * d2;
    const Rational lo1 = Rational(1, 24) - Rational(5, 48) / x, hi1(1, 24);
    const Rational lo2(-1, 45), hi2 = Rational(-1, 45) + Rational(7, 90) / x;

    TightnessRow row;
    row.x = x;
    Rational shift = opt.shift_target;
    long prec = opt.work_precision;
    for (int attempt = 0; attempt <= opt.retries; ++attempt, shift *= 2, prec *= 2) {
        Evaluator ev(x, {shift, prec});
        row.d1 = ev(d1);
        row.d2 = ev(d2);
        row.scaled1 = {ev(s1), lo1, hi1, containment(ev(s1), lo1, hi1)};
        row.scaled2 = {ev(s2), lo2, hi2, containment(ev(s2), lo2, hi2)};
        row.thm1_gap = ev(thm1_upper() - thm1_lower());
        row.thm2_gap = ev(exp(big_m()) - exp(small_m()));
        row.thm3a_gap = ev(thm3a_upper() - thm3a_lower());
        row.thm3b_gap = ev(thm3b_upper() - thm3b_lower());
        row.shift_target = shift;
        row.work_precision = prec;
        if (row.scaled1.verdict != Verdict::undecided && row.scaled2.verdict != Verdict::undecided)
            break;
    }
    return row;
}

inline std::vector<TightnessRow> tightness_report(const std::vector<Rational>& grid, const GridOptions& opt = {})
{
    for (const auto& x : grid)
        if (x < 1)
            throw std::invalid_argument("tightness report needs x >= 1, got " + to_string(x));
    return detail::parallel_map(grid.size(), [&](std::size_t i) { return tightness_row(grid[i], opt); });
}

struct BoundRow {
    std::string name;
    std::string side; ///< "lower" or "upper" bound of psi'(x+1); "value" for psi'(x+1) itself
    Interval enclosure;
};

struct BoundComparison {
    Rational x;
    std::vector<BoundRow> bounds; ///< sorted by enclosure
    std::vector<ComparisonResult> claims;
    Verdict verdict = Verdict::holds;
};

/// Every catalog bound on psi'(x+1), at one x >= 1, plus the dominance claims
/// between them.
inline BoundComparison compare_bounds(const Rational& x, const GridOptions& opt = {})
{
    if (x < 1)
        throw std::invalid_argument("compare_bounds needs x >= 1, got " + to_string(x));
    using namespace bounds;
    const Expr v = var();
    const Expr tri1 = trigamma(v + 1);
    const Expr inv_sq = 1 / pow(v, 2);
    // bounds on psi'(x) become bounds on psi'(x+1) = psi'(x) - 1/x^2
    const std::vector<std::tuple<std::string, std::string, Expr>> named{
        {"psi'(x+1)", "value", tri1},
        {"THM1-lower", "lower", thm1_lower()},
        {"THM1-upper", "upper", thm1_upper()},
        {"THM2-lower", "lower", exp(small_m()) - 1 - inv_sq},
        {"THM2-upper", "upper", exp(big_m()) - 1 - inv_sq},
        {"THM3a-lower", "lower", thm3a_lower()},
        {"THM3a-upper", "upper", thm3a_upper()},
        {"THM3b-lower", "lower", thm3b_lower()},
        {"THM3b-upper", "upper", thm3b_upper()},
        {"ELE-upper", "upper", exp(-digamma(v)) - inv_sq},
        {"GUO-QI-upper", "upper", exp(1 / v) - 1 - inv_sq},
        {"BATIR-lower", "lower", batir_lower()},
        {"BATIR-upper", "upper", batir_upper()},
        {"YCT-lower", "lower", theta(1)},
        {"YCT-upper", "upper", theta(2)},
        {"XP1-lower", "lower", exp(1 / (v + 1)) - constant(NamedConstant::e) + trigamma(Expr(1))},
        {"XP1-upper", "upper", exp(1 / (v + 1)) - 1},
    };
    const std::vector<Comparison> claims{
        {"THM1-upper < BATIR-upper", thm1_upper(), batir_upper()},
        {"THM1-lower < BATIR-lower", thm1_lower(), batir_lower()},
        {"1/x^2 + theta(x,2) < e^{1/x} - 1", inv_sq + theta(2), exp(1 / v) - 1},
    };

    BoundComparison out;
    out.x = x;
    const PointResult p = check_point(claims, x, opt);
    out.claims = p.comparisons;
    out.verdict = p.verdict;
    Evaluator ev(x, {p.shift_target, p.work_precision});
    for (const auto& [name, side, e] : named)
        out.bounds.push_back({name, side, ev(e)});
    std::stable_sort(out.bounds.begin(), out.bounds.end(), [](const BoundRow& a, const BoundRow& b) {
        return a.enclosure.lo() != b.enclosure.lo() ? a.enclosure.lo() < b.enclosure.lo()
                                                    : a.enclosure.hi() < b.enclosure.hi();
    });
    return out;
}

/// Samples for two open claims: g(x) = e^{M(x)} - psi'(x) - 1 and
/// h(x) = psi'(x) - e^{m(x)} + 1 with forward differences, and
/// Theta(x) = psi'(x) e^{2 psi(x)} - x + 1/2. Nothing is asserted.
struct SampleRow {
    Rational x;
    Interval g, h, big_theta;
    std::optional<Interval> dg, dh, d2g, d2h; ///< forward differences along the grid
};

inline std::vector<SampleRow> sample_open_claims(const std::vector<Rational>& grid, const GridOptions& opt = {})
{
    using namespace bounds;
    const Expr v = var();
    const Expr g = exp(big_m()) - trigamma(v) - 1;
    const Expr h = trigamma(v) - exp(small_m()) + 1;
    const Expr big_theta = trigamma(v) * exp(2 * digamma(v)) - v + Rational(1, 2);
    for (const auto& x : grid)
        if (x <= 0)
            throw std::invalid_argument("sample grid needs x > 0");
    std::vector<SampleRow> rows = detail::parallel_map(grid.size(), [&](std::size_t i) {
        Evaluator ev(grid[i], {opt.shift_target, opt.work_precision});
        return SampleRow{grid[i], ev(g), ev(h), ev(big_theta), {}, {}, {}, {}};
    });
    for (std::size_t i = 0; i + 1 < rows.size(); ++i) {
        rows[i].dg = rows[i + 1].g - rows[i].g;
        rows[i].dh = rows[i + 1].h - rows[i].h;
    }
    for (std::size_t i = 0; i + 2 < rows.size(); ++i) {
        rows[i].d2g = *rows[i + 1].dg - *rows[i].dg;
        rows[i].d2h = *rows[i + 1].dh - *rows[i].dh;
    }
    return rows;
}

} // namespace psicert
