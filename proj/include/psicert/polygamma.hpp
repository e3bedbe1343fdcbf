#pragma once

// Certified enclosures of psi and psi' at rational points.
//
// The argument is raised by the exact recurrences
//     psi(y) = psi(y+1) - 1/y,      psi'(y) = psi'(y+1) + 1/y^2
// until it reaches shift_target, where the two-sided truncated series
//     ln y + 1/(2y) - 1/(12y^2) + 1/(120y^4) - 1/(252y^6) < psi(y+1) < ln y + 1/(2y) - 1/(12y^2) + 1/(120y^4)
//     S(y) - 1/(30y^9) < psi'(y+1) < S(y),  S(y) = 1/y - 1/(2y^2) + 1/(6y^3) - 1/(30y^5) + 1/(42y^7)
// hold for every y > 0.

#include "psicert/elementary.hpp"

#include <cmath>
#include <stdexcept>

namespace psicert {

inline const Rational kDefaultShiftTarget{10};

namespace detail {

inline void check_enclosure_args(const Rational& x, const Rational& shift_target)
{
    if (x <= 0)
        throw DomainError("polygamma enclosure needs x > 0, got " + to_string(x));
    if (shift_target < 10)
        throw std::invalid_argument("shift_target must be at least 10, got " + to_string(shift_target));
}

// Smallest n >= 1 with x + n - 1 >= shift_target.
inline long shift_count(const Rational& x, const Rational& shift_target)
{
    Integer n = ceil_int(shift_target - x + 1);
    return std::max(1L, n.get_si());
}

} // namespace detail

/// Enclosure of psi(x), x > 0.
///
/// The ln term is computed with enough bits that its error stays below the
/// 1/(252 y^6) gap of the series bounds; `work_precision` can only raise that.
inline Interval digamma_enclosure(const Rational& x, const Rational& shift_target = kDefaultShiftTarget,
                                  long work_precision = 0)
{
    detail::check_enclosure_args(x, shift_target);
    const long n = detail::shift_count(x, shift_target);
    const Rational y = x + (n - 1);

    const long gap_bits = static_cast<long>(std::ceil(std::log2(252.0) + 6.0 * std::log2(y.get_d())));
    const long precision = std::max(work_precision, gap_bits + 40);

    const Rational inv = 1 / y;
    const Rational inv2 = inv * inv;
    const Rational inv4 = inv2 * inv2;
    const Rational upper_tail = inv / 2 - inv2 / 12 + inv4 / 120;
    const Rational lower_tail = upper_tail - inv4 * inv2 / 252;
    Interval value = iv_ln(Interval(y), precision) + Interval(lower_tail, upper_tail);

    Rational harmonic = 0;
    for (long i = 0; i < n; ++i)
        harmonic += 1 / (x + i);
    return value - harmonic;
}

/// Enclosure of psi'(x), x > 0. Purely rational, no transcendental step.
inline Interval trigamma_enclosure(const Rational& x, const Rational& shift_target = kDefaultShiftTarget)
{
    detail::check_enclosure_args(x, shift_target);
    const long n = detail::shift_count(x, shift_target);
    const Rational y = x + (n - 1);

    const Rational inv = 1 / y;
    const Rational inv2 = inv * inv;
    const Rational inv3 = inv2 * inv;
    const Rational inv5 = inv3 * inv2;
    const Rational inv7 = inv5 * inv2;
    const Rational upper = inv - inv2 / 2 + inv3 / 6 - inv5 / 30 + inv7 / 42;
    const Rational lower = upper - inv7 * inv2 / 30;

    Rational squares = 0;
    for (long i = 0; i < n; ++i)
        squares += 1 / ((x + i) * (x + i));
    return Interval(lower + squares, upper + squares);
}

/// Euler-Mascheroni constant as -psi(1).
inline Interval euler_gamma_enclosure(const Rational& shift_target = kDefaultShiftTarget)
{
    return -digamma_enclosure(1, shift_target);
}

/// b* = pi^2 / (6 e^{2 gamma}).
inline Interval batir_bstar_enclosure(const Rational& shift_target = kDefaultShiftTarget, long work_precision = 64)
{
    Interval pi = iv_pi(work_precision);
    Interval e2g = iv_exp(euler_gamma_enclosure(shift_target) * Rational(2), work_precision);
    return pow(pi, 2) / (e2g * Rational(6));
}

namespace detail {

// Sign of psi at x, refining shift_target up to four doublings; 0 if undecided.
inline int digamma_sign(const Rational& x)
{
    Rational shift = kDefaultShiftTarget;
    for (int attempt = 0; attempt <= 4; ++attempt, shift *= 2) {
        Interval v = digamma_enclosure(x, shift);
        if (v.is_positive())
            return 1;
        if (v.is_negative())
            return -1;
    }
    return 0;
}

} // namespace detail

/// Enclosure of width <= tolerance of the positive zero of psi, by bisection on [1, 2].
inline Interval digamma_zero(const Rational& tolerance)
{
    if (tolerance <= 0)
        throw std::invalid_argument("tolerance must be positive");
    Rational lo = 1, hi = 2; // psi(1) = -gamma < 0 < 1 - gamma = psi(2)
    while (hi - lo > tolerance) {
        const Rational mid = (lo + hi) / 2;
        const int s = detail::digamma_sign(mid);
        if (s > 0) {
            hi = mid;
            continue;
        }
        if (s < 0) {
            lo = mid;
            continue;
        }
        // The zero sits inside the undecidable band around mid: probe a
        // quarter-width away on each side instead.
        const Rational quarter = (hi - lo) / 4;
        const Rational a = mid - quarter, b = mid + quarter;
        const int sa = detail::digamma_sign(a), sb = detail::digamma_sign(b);
        if (sa > 0) {
            hi = a;
        } else if (sb < 0) {
            lo = b;
        } else if (sa < 0 && sb > 0) {
            lo = a;
            hi = b;
        } else {
            throw std::runtime_error("digamma_zero: enclosures too wide to reach tolerance " + to_string(tolerance));
        }
    }
    return {lo, hi};
}

} // namespace psicert
