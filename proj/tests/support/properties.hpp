#pragma once

// Randomized property checks shared by the unit tests and the acceptance run.
// Each returns an empty string on success and a description of the first
// counterexample otherwise.

#include "psicert/psicert.hpp"

#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <string>

namespace props {

using namespace psicert;

class Random {
public:
    explicit Random(std::uint64_t seed) : gen_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(gen_); }

    Rational rational(long range = 50, long max_den = 40)
    {
        Rational q(integer(-range * max_den, range * max_den), integer(1, max_den));
        q.canonicalize();
        return q;
    }

    Interval interval(long range = 20)
    {
        Rational a = rational(range), b = rational(range);
        return a <= b ? Interval(a, b) : Interval(b, a);
    }

    /// A rational inside iv, endpoints included now and then.
    Rational inside(const Interval& iv)
    {
        const long n = integer(0, 16);
        return iv.lo() + iv.width() * Rational(n, 16);
    }

    std::mt19937_64& engine() { return gen_; }

private:
    std::mt19937_64 gen_;
};

// --- interval soundness -----------------------------------------------------

/// For random intervals a, b and random points x in a, y in b, the exact value
/// of x op y must lie in a op b. Transcendental functions are checked at random
/// points against the C library in long double.
inline std::string interval_soundness(int cases, std::uint64_t seed = 20240607)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        const Interval a = rnd.interval(), b = rnd.interval();
        const Rational x = rnd.inside(a), y = rnd.inside(b);
        auto fail = [&](const std::string& what) {
            return "case " + std::to_string(i) + ": " + what + " with a = " + to_string(a) + ", b = " + to_string(b) +
                   ", x = " + to_string(x) + ", y = " + to_string(y);
        };
        if (!(a + b).contains(Rational(x + y)))
            return fail("sum");
        if (!(a - b).contains(Rational(x - y)))
            return fail("difference");
        if (!(a * b).contains(Rational(x * y)))
            return fail("product");
        if (!b.contains_zero() && !(a / b).contains(Rational(x / y)))
            return fail("quotient");
        const long n = rnd.integer(0, 5);
        if (!pow(a, n).contains(pow(x, n)))
            return fail("power " + std::to_string(n));

        // elementary functions on a narrow interval around a moderate point
        const Rational t = rnd.rational(6);
        const Interval near(t - Rational(1, 1000), t + Rational(1, 1000));
        const Rational u = rnd.inside(near);
        const long double ud = static_cast<long double>(u.get_d());
        auto within = [&](const Interval& enc, long double ref) {
            // u was rounded to double before the reference call, so the
            // reference itself is off by about |u| ulp relative
            const long double tol = 1e-15L * (1 + std::fabs(ud)) * (1 + std::fabs(ref));
            return static_cast<long double>(enc.lo().get_d()) <= ref + tol &&
                   ref - tol <= static_cast<long double>(enc.hi().get_d());
        };
        if (!within(iv_exp(near, 64), std::exp(ud)))
            return fail("exp at " + to_string(u));
        if (!within(iv_sinh(near, 64), std::sinh(ud)))
            return fail("sinh at " + to_string(u));
        const Rational v = abs(u) + Rational(1, 100);
        if (!within(iv_ln(Interval(v - Rational(1, 200), v + Rational(1, 200)), 64),
                    std::log(static_cast<long double>(v.get_d()))))
            return fail("ln at " + to_string(v));
    }
    return {};
}

// --- series -----------------------------------------------------------------

inline AsymptoticExpansion random_expansion(Random& rnd, long max_low, long max_order)
{
    const long d = rnd.integer(0, max_low);
    const long K = rnd.integer(0, max_order);
    AsymptoticExpansion e(0, d, K);
    for (long k = -d; k <= K; ++k)
        e.set(k, rnd.integer(0, 3) == 0 ? Rational(0) : rnd.rational(5, 9));
    return e;
}

/// series_mul against a direct double loop over all term pairs, on the range
/// of powers the product claims to know.
inline std::string series_mul_matches_convolution(int cases, std::uint64_t seed = 7)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        const auto u = random_expansion(rnd, 2, 8), v = random_expansion(rnd, 2, 8);
        const auto w = series_mul(u, v);
        std::map<long, Rational> brute;
        for (long a = -u.low_degree(); a <= u.order(); ++a)
            for (long b = -v.low_degree(); b <= v.order(); ++b)
                brute[a + b] += u.coeff(a) * v.coeff(b);
        const long expected_order = std::min(u.order() - v.low_degree(), v.order() - u.low_degree());
        if (w.order() != expected_order && expected_order >= -w.low_degree())
            return "case " + std::to_string(i) + ": product order " + std::to_string(w.order());
        for (long k = -w.low_degree(); k <= w.order(); ++k)
            if (w.coeff(k) != brute[k])
                return "case " + std::to_string(i) + ": coefficient of x^" + std::to_string(-k);
    }
    return {};
}

/// exp(f + g) = exp(f) exp(g) for expansions without constant term or
/// positive powers.
inline std::string series_exp_functional_equation(int cases, std::uint64_t seed = 11)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        const long K = rnd.integer(1, 9);
        AsymptoticExpansion f(0, 0, K), g(0, 0, K);
        for (long k = 1; k <= K; ++k) {
            f.set(k, rnd.rational(4, 7));
            g.set(k, rnd.rational(4, 7));
        }
        const auto lhs = series_exp(series_add(f, g));
        const auto rhs = series_mul(series_exp(f), series_exp(g));
        for (long k = 0; k <= std::min(lhs.order(), rhs.order()); ++k)
            if (lhs.coeff(k) != rhs.coeff(k))
                return "case " + std::to_string(i) + ": coefficient of x^-" + std::to_string(k);
    }
    return {};
}

/// alpha_k = sum_j 1/j! sum over compositions k = i_1 + ... + i_j (i >= 1) of
/// a_{i_1} ... a_{i_j}, enumerated directly.
inline Rational exp_coefficient_by_compositions(const AsymptoticExpansion& f, long k)
{
    if (k == 0)
        return 1;
    Rational total = 0;
    // compositions of k into j positive parts
    std::function<void(long, long, Rational)> walk = [&](long remaining, long parts, Rational product) {
        if (remaining == 0) {
            total += product / Rational(factorial(static_cast<unsigned long>(parts)));
            return;
        }
        for (long i = 1; i <= remaining; ++i)
            walk(remaining - i, parts + 1, product * f.coeff(i));
    };
    walk(k, 0, 1);
    return total;
}

inline std::string series_exp_matches_compositions(int cases, std::uint64_t seed = 13)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        AsymptoticExpansion f(0, 0, 6);
        for (long k = 1; k <= 6; ++k)
            f.set(k, rnd.rational(4, 6));
        const auto e = series_exp(f);
        for (long k = 0; k <= 6; ++k)
            if (e.coeff(k) != exp_coefficient_by_compositions(f, k))
                return "case " + std::to_string(i) + ": alpha_" + std::to_string(k);
    }
    return {};
}

// --- polygamma recurrences ---------------------------------------------------

/// psi(x) + 1/x overlaps psi(x+1) and psi'(x) - 1/x^2 overlaps psi'(x+1).
inline std::string recurrence_invariants(int cases, std::uint64_t seed = 17)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        Rational x(rnd.integer(1, 4000), rnd.integer(1, 100));
        x.canonicalize();
        const Interval psi_x = digamma_enclosure(x), psi_x1 = digamma_enclosure(x + 1);
        if (!(psi_x + Rational(1 / x)).overlaps(psi_x1))
            return "digamma recurrence at x = " + to_string(x);
        const Interval tri_x = trigamma_enclosure(x), tri_x1 = trigamma_enclosure(x + 1);
        if (!(tri_x - Rational(1 / (x * x))).overlaps(tri_x1))
            return "trigamma recurrence at x = " + to_string(x);
    }
    return {};
}

// --- Taylor shift -------------------------------------------------------------

inline Polynomial random_polynomial(Random& rnd, long max_degree)
{
    std::vector<Rational> c(static_cast<std::size_t>(rnd.integer(0, max_degree) + 1));
    for (auto& q : c)
        q = rnd.rational(20, 5);
    return Polynomial(std::move(c));
}

/// Shifting commutes with + and *, composes additively, and agrees with
/// evaluation: p(x + s) at x equals p at x + s.
inline std::string taylor_shift_homomorphism(int cases, std::uint64_t seed = 19)
{
    Random rnd(seed);
    for (int i = 0; i < cases; ++i) {
        const Polynomial p = random_polynomial(rnd, 8), q = random_polynomial(rnd, 8);
        const Rational s = rnd.rational(10, 6), t = rnd.rational(10, 6), x = rnd.rational(10, 6);
        const std::string tag = "case " + std::to_string(i) + ": ";
        if ((p + q).taylor_shift(s) != p.taylor_shift(s) + q.taylor_shift(s))
            return tag + "sum";
        if ((p * q).taylor_shift(s) != p.taylor_shift(s) * q.taylor_shift(s))
            return tag + "product";
        if (p.taylor_shift(s).taylor_shift(t) != p.taylor_shift(s + t))
            return tag + "composition";
        if (p.taylor_shift(s)(x) != p(Rational(x + s)))
            return tag + "evaluation";
    }
    return {};
}

} // namespace props
