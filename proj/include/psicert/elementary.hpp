#pragma once

// Rigorous enclosures of exp, ln, sinh and pi over rational intervals.
//
// Every function takes a work precision p. For point inputs of moderate size
// the returned width is at most 2^-p (relative to the value's magnitude for
// exp/sinh of large arguments); for wide inputs only containment is promised.

#include "psicert/interval.hpp"

#include <cmath>
#include <map>
#include <mutex>

namespace psicert {

/// Extra bits carried beyond the requested precision before final rounding.
inline constexpr long kGuardBits = 32;

namespace detail {

// Smallest N with 2 * (1/2)^(N+1) / (N+1)! <= 2^-bits.
inline long exp_terms(long bits)
{
    double log2_term = 1.0; // log2 of 2*(1/2)^(N+1)/(N+1)! at N = 0
    long n = 0;
    while (log2_term > -static_cast<double>(bits)) {
        ++n;
        log2_term -= 1.0 + std::log2(static_cast<double>(n + 1));
    }
    return n;
}

// Enclosure of e^q, relative width about 2^-bits.
inline Interval exp_point(const Rational& q, long bits)
{
    if (q == 0)
        return Interval(Rational(1));

    // Argument reduction: r = q / 2^j with |r| <= 1/2.
    const Rational half(1, 2);
    Rational aq = abs(q);
    long j = std::max(0L, log2_estimate(aq) - 1);
    while (ldexp(aq, -j) > half)
        ++j;
    const long w = bits + j + 8;

    Interval r = round_to_grid(Interval(ldexp(q, -j)), w + 4);
    long n = exp_terms(w + 4);

    // Horner: 1 + r(1 + r/2(1 + r/3(...)))
    Interval h(Rational(1));
    for (long k = n; k >= 1; --k)
        h = round_outward(Rational(1) + (h * r) / Rational(k), w + 4);

    // |R_N| <= |t|^(N+1) / ((N+1)! (1 - |t|)), with |t| bounded by a short dyadic.
    Rational t_bound = ldexp(Rational(ceil_int(ldexp(r.magnitude(), 10))), -10);
    Rational remainder = pow(t_bound, n + 1) / (Rational(factorial(static_cast<unsigned long>(n + 1))) * (1 - t_bound));
    remainder = ldexp(Rational(ceil_int(ldexp(remainder, w + 8))), -(w + 8));
    h = Interval(h.lo() - remainder, h.hi() + remainder);

    for (long i = 0; i < j; ++i)
        h = round_outward(Interval(h.lo() * h.lo(), h.hi() * h.hi()), w);
    return round_outward(h, bits);
}

// 2 * atanh(u) for |u| <= 1/3, absolute width about 2^-bits.
inline Interval twice_atanh(const Rational& u, long bits)
{
    const long w = bits + 8;
    Interval ui = round_to_grid(Interval(u), w + 4);
    Interval v = pow(ui, 2);

    // Smallest N with (1/3)^(2N+3) / ((2N+3) * 8/9) <= 2^-(w+4).
    long n = 0;
    while ((2.0 * n + 3.0) * std::log2(3.0) + std::log2(2.0 * n + 3.0) + std::log2(8.0 / 9.0) < static_cast<double>(w + 4))
        ++n;

    // sum_{i<=N} v^i / (2i+1), Horner from the top coefficient down.
    Interval h(Rational(1, 2 * n + 1));
    for (long i = n - 1; i >= 0; --i)
        h = round_to_grid(Rational(1, 2 * i + 1) + v * h, w + 4);
    Interval series = ui * h;

    // Geometric tail: sum_{i>N} |u|^(2i+1)/(2i+1) <= |u|^(2N+3) / ((2N+3)(1-u^2)).
    Rational ub = ldexp(Rational(ceil_int(ldexp(ui.magnitude(), 10))), -10);
    Rational tail = pow(ub, 2 * n + 3) / (Rational(2 * n + 3) * (1 - ub * ub));
    tail = ldexp(Rational(ceil_int(ldexp(tail, w + 8))), -(w + 8));
    series = Interval(series.lo() - tail, series.hi() + tail);
    return round_to_grid(series * Rational(2), w);
}

template <class Compute>
Interval memoized(std::mutex& mutex, std::map<long, Interval>& cache, long bits, Compute compute)
{
    {
        std::lock_guard lock(mutex);
        if (auto it = cache.find(bits); it != cache.end())
            return it->second;
    }
    Interval value = compute();
    std::lock_guard lock(mutex);
    return cache.emplace(bits, std::move(value)).first->second;
}

// ln 2 = 2 atanh(1/3), memoized per bit count.
inline Interval ln2_bits(long bits)
{
    static std::mutex mutex;
    static std::map<long, Interval> cache;
    return memoized(mutex, cache, bits, [bits] { return twice_atanh(Rational(1, 3), bits); });
}

// Enclosure of ln y, y > 0, absolute width about 2^-bits.
inline Interval ln_point(const Rational& y, long bits)
{
    if (y == 1)
        return Interval(Rational(0));
    // y = z * 2^k with z in [1/2, 2].
    long k = log2_estimate(y);
    Rational z = ldexp(y, -k);
    while (z > 2) {
        z = ldexp(z, -1);
        ++k;
    }
    while (z < Rational(1, 2)) {
        z = ldexp(z, 1);
        --k;
    }
    Interval result = twice_atanh((z - 1) / (z + 1), bits + 2);
    if (k != 0) {
        long extra = static_cast<long>(std::ceil(std::log2(std::abs(static_cast<double>(k)) + 1.0)));
        result = result + ln2_bits(bits + extra + 2) * Rational(k);
    }
    return round_to_grid(result, bits);
}

// arctan(1/n) for integer n >= 2 by its alternating series; the true value
// lies between consecutive partial sums.
inline Interval arctan_reciprocal(long n, long bits)
{
    const Rational inv(1, n);
    const Rational inv2 = inv * inv;
    Rational power = inv; // n^-(2k+1)
    Rational sum = 0;
    for (long k = 0;; ++k) {
        Rational term = power / (2 * k + 1);
        Rational next = sum + ((k % 2 == 0) ? term : Rational(-term));
        if (log2_estimate(term) < -bits - 4) {
            // sum and next are consecutive partial sums.
            return Interval(std::min(sum, next), std::max(sum, next));
        }
        sum = next;
        power *= inv2;
    }
}

} // namespace detail

/// e^x over an interval; monotone, so each endpoint is enclosed separately.
inline Interval iv_exp(const Interval& a, long work_precision)
{
    const long bits = work_precision + kGuardBits;
    if (a.is_point())
        return detail::exp_point(a.lo(), bits);
    return {detail::exp_point(a.lo(), bits).lo(), detail::exp_point(a.hi(), bits).hi()};
}

/// ln x over an interval with lo > 0.
inline Interval iv_ln(const Interval& a, long work_precision)
{
    if (a.lo() <= 0)
        throw DomainError("ln of a nonpositive interval " + to_string(a));
    const long bits = work_precision + kGuardBits;
    if (a.is_point())
        return detail::ln_point(a.lo(), bits);
    return {detail::ln_point(a.lo(), bits).lo(), detail::ln_point(a.hi(), bits).hi()};
}

/// sinh x = (e^x - e^-x)/2; monotone, so each endpoint is enclosed separately.
inline Interval iv_sinh(const Interval& a, long work_precision)
{
    const long bits = work_precision + kGuardBits;
    auto at = [bits](const Rational& q) {
        return (detail::exp_point(q, bits) - detail::exp_point(Rational(-q), bits)) / Rational(2);
    };
    if (a.is_point())
        return at(a.lo());
    return {at(a.lo()).lo(), at(a.hi()).hi()};
}

/// ln 2, memoized per precision.
inline Interval iv_ln2(long work_precision) { return detail::ln2_bits(work_precision + kGuardBits); }

/// pi = 16 arctan(1/5) - 4 arctan(1/239), width <= 2^-work_precision; memoized.
inline Interval iv_pi(long work_precision)
{
    static std::mutex mutex;
    static std::map<long, Interval> cache;
    const long bits = work_precision + kGuardBits;
    return detail::memoized(mutex, cache, bits, [bits] {
        Interval pi = detail::arctan_reciprocal(5, bits + 6) * Rational(16) -
                      detail::arctan_reciprocal(239, bits + 6) * Rational(4);
        return round_to_grid(pi, bits);
    });
}

} // namespace psicert
