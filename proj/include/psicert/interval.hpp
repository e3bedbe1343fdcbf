#pragma once

#include "psicert/rational.hpp"

#include <algorithm>
#include <initializer_list>
#include <ostream>
#include <string>

namespace psicert {

/// Closed interval [lo, hi] with exact rational endpoints.
///
/// Field operations are exact on the endpoints, so they never need rounding;
/// the transcendental enclosures in elementary.hpp round outward afterwards to
/// keep endpoint sizes bounded.
class Interval {
public:
    Interval() = default;
    explicit Interval(Rational point) : lo_(point), hi_(std::move(point)) {}
    Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi))
    {
        if (lo_ > hi_)
            throw std::invalid_argument("interval with lo > hi: [" + to_string(lo_) + ", " + to_string(hi_) + "]");
    }

    const Rational& lo() const noexcept { return lo_; }
    const Rational& hi() const noexcept { return hi_; }

    Rational width() const { return hi_ - lo_; }
    Rational midpoint() const { return (lo_ + hi_) / 2; }
    Rational magnitude() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

    bool is_point() const { return lo_ == hi_; }
    bool contains(const Rational& q) const { return lo_ <= q && q <= hi_; }
    bool contains(const Interval& other) const { return lo_ <= other.lo_ && other.hi_ <= hi_; }
    bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
    bool overlaps(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }
    bool is_positive() const { return lo_ > 0; }
    bool is_negative() const { return hi_ < 0; }

    /// Certainly less than: every point of *this is below every point of other.
    bool certainly_less(const Interval& other) const { return hi_ < other.lo_; }

    friend bool operator==(const Interval&, const Interval&) = default;

private:
    Rational lo_{0};
    Rational hi_{0};
};

inline std::string to_string(const Interval& iv) { return "[" + to_string(iv.lo()) + ", " + to_string(iv.hi()) + "]"; }

inline std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << to_string(iv); }

inline Interval operator-(const Interval& a) { return {-a.hi(), -a.lo()}; }

inline Interval operator+(const Interval& a, const Interval& b) { return {a.lo() + b.lo(), a.hi() + b.hi()}; }
inline Interval operator-(const Interval& a, const Interval& b) { return {a.lo() - b.hi(), a.hi() - b.lo()}; }

inline Interval operator*(const Interval& a, const Interval& b)
{
    if (a.lo() >= 0 && b.lo() >= 0)
        return {a.lo() * b.lo(), a.hi() * b.hi()};
    Rational p1 = a.lo() * b.lo(), p2 = a.lo() * b.hi(), p3 = a.hi() * b.lo(), p4 = a.hi() * b.hi();
    return {std::min({p1, p2, p3, p4}), std::max({p1, p2, p3, p4})};
}

inline Interval reciprocal(const Interval& b)
{
    if (b.contains_zero())
        throw DomainError("division by an interval containing zero: " + to_string(b));
    return {1 / b.hi(), 1 / b.lo()};
}

inline Interval operator/(const Interval& a, const Interval& b) { return a * reciprocal(b); }

inline Interval operator+(const Interval& a, const Rational& q) { return {a.lo() + q, a.hi() + q}; }
inline Interval operator+(const Rational& q, const Interval& a) { return a + q; }
inline Interval operator-(const Interval& a, const Rational& q) { return {a.lo() - q, a.hi() - q}; }
inline Interval operator-(const Rational& q, const Interval& a) { return {q - a.hi(), q - a.lo()}; }

inline Interval operator*(const Interval& a, const Rational& q)
{
    if (q >= 0)
        return {a.lo() * q, a.hi() * q};
    return {a.hi() * q, a.lo() * q};
}
inline Interval operator*(const Rational& q, const Interval& a) { return a * q; }

inline Interval operator/(const Interval& a, const Rational& q)
{
    if (q == 0)
        throw DomainError("division by zero");
    return a * Rational(1 / q);
}
inline Interval operator/(const Rational& q, const Interval& b) { return reciprocal(b) * q; }

/// Integer power. Negative exponents require 0 outside a.
inline Interval pow(const Interval& a, long n)
{
    if (n < 0) {
        if (a.contains_zero())
            throw DomainError("negative power of an interval containing zero: " + to_string(a));
        return pow(reciprocal(a), -n);
    }
    if (n == 0)
        return Interval(Rational(1));
    Rational l = pow(a.lo(), n), h = pow(a.hi(), n);
    if (n % 2 == 1 || a.lo() >= 0)
        return {l, h};
    if (a.hi() <= 0)
        return {h, l};
    return {Rational(0), std::max(l, h)};
}

inline Interval hull(const Interval& a, const Interval& b)
{
    return {std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi())};
}

/// Intersection; the intervals must overlap.
inline Interval intersect(const Interval& a, const Interval& b)
{
    if (!a.overlaps(b))
        throw std::invalid_argument("intersect of disjoint intervals " + to_string(a) + " and " + to_string(b));
    return {std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi())};
}

/// Outward rounding to dyadic endpoints on the grid 2^-k. Only ever widens.
inline Interval round_to_grid(const Interval& a, long k)
{
    Rational lo = ldexp(Rational(floor_int(ldexp(a.lo(), k))), -k);
    Rational hi = ldexp(Rational(ceil_int(ldexp(a.hi(), k))), -k);
    return {std::move(lo), std::move(hi)};
}

/// Outward rounding keeping about `bits` significant bits relative to the
/// larger endpoint magnitude.
inline Interval round_outward(const Interval& a, long bits)
{
    Rational m = a.magnitude();
    if (m == 0)
        return a;
    return round_to_grid(a, bits - log2_estimate(m));
}

} // namespace psicert
