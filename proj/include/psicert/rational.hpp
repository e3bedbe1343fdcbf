#pragma once

// Exact rational scalars. Everything in psicert is built on GMP's mpq_class,
// which is always kept in canonical form (positive denominator, gcd 1).

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace psicert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Thrown for arguments outside a function's mathematical domain.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Thrown when an operation is not defined for the given symbolic object.
class UnsupportedOperation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Rational make_rational(long num, long den = 1)
{
    if (den == 0)
        throw DomainError("zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer floor_int(const Rational& q)
{
    Integer r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Integer ceil_int(const Rational& q)
{
    Integer r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

inline Rational pow2(long e)
{
    Integer p = 1;
    if (e >= 0) {
        mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(e));
        return Rational(p);
    }
    mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<mp_bitcnt_t>(-e));
    return Rational(Integer(1), p);
}

/// q * 2^e, exact.
inline Rational ldexp(const Rational& q, long e)
{
    Rational r;
    if (e >= 0)
        mpq_mul_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(e));
    else
        mpq_div_2exp(r.get_mpq_t(), q.get_mpq_t(), static_cast<mp_bitcnt_t>(-e));
    return r;
}

/// Integer e with 2^(e-1) <= |q| < 2^(e+1); a cheap magnitude estimate, q != 0.
inline long log2_estimate(const Rational& q)
{
    return static_cast<long>(mpz_sizeinbase(q.get_num_mpz_t(), 2)) -
           static_cast<long>(mpz_sizeinbase(q.get_den_mpz_t(), 2));
}

inline Rational pow(const Rational& base, long e)
{
    if (e < 0) {
        if (base == 0)
            throw DomainError("negative power of zero");
        return pow(Rational(1 / base), -e);
    }
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(e));
    mpz_pow_ui(r.get_den_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(e));
    r.canonicalize();
    return r;
}

inline Integer factorial(unsigned long n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// Canonical "p/q" (or "p" for integers) form.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p/q", integers, and decimal literals such as "-1.25" or "1e-5".
/// Decimals are converted exactly; nothing is rounded.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&] { return std::invalid_argument("malformed rational: '" + std::string(text) + "'"); };
    if (text.empty())
        throw fail();

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        Integer num, den;
        std::string a(text.substr(0, slash)), b(text.substr(slash + 1));
        if (a.empty() || b.empty() || num.set_str(a, 10) != 0 || den.set_str(b, 10) != 0)
            throw fail();
        if (den == 0)
            throw DomainError("zero denominator in '" + std::string(text) + "'");
        Rational q(num, den);
        q.canonicalize();
        return q;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (text[pos] == '+' || text[pos] == '-') {
        negative = text[pos] == '-';
        ++pos;
    }
    std::string digits;
    long scale = 0;
    bool seen_point = false, seen_digit = false;
    for (; pos < text.size(); ++pos) {
        char c = text[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            seen_digit = true;
            if (seen_point)
                --scale;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!seen_digit)
        throw fail();
    if (pos < text.size()) {
        if (text[pos] != 'e' && text[pos] != 'E')
            throw fail();
        std::string exponent(text.substr(pos + 1));
        if (exponent.empty())
            throw fail();
        try {
            std::size_t used = 0;
            long e = std::stol(exponent, &used);
            if (used != exponent.size())
                throw fail();
            scale += e;
        } catch (const std::logic_error&) {
            throw fail();
        }
    }
    Integer mantissa(digits, 10);
    Integer ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale >= 0 ? Rational(mantissa * ten_power) : Rational(mantissa, ten_power);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

enum class Rounding { down, up, nearest };

/// Decimal rendering with `digits` digits after the point.
inline std::string to_decimal(const Rational& q, int digits, Rounding mode = Rounding::nearest)
{
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    Rational scaled = q * scale;
    Integer n;
    switch (mode) {
    case Rounding::down: n = floor_int(scaled); break;
    case Rounding::up: n = ceil_int(scaled); break;
    case Rounding::nearest: n = floor_int(scaled + Rational(1, 2)); break;
    }
    bool negative = n < 0;
    if (negative)
        n = -n;
    std::string s = n.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits))
            s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

inline double to_double(const Rational& q) { return q.get_d(); }

} // namespace psicert
