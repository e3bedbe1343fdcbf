#pragma once

#include "psicert/interval.hpp"
#include "psicert/json.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace psicert {

/// Dense univariate polynomial over Q, coefficients in ascending degree.
/// Trailing zeros are always trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static Polynomial constant(const Rational& c) { return Polynomial(std::vector<Rational>{c}); }
    static Polynomial x() { return Polynomial(std::vector<Rational>{0, 1}); }
    static Polynomial monomial(const Rational& c, std::size_t degree)
    {
        std::vector<Rational> v(degree + 1);
        v[degree] = c;
        return Polynomial(std::move(v));
    }
    /// From integer coefficients listed highest degree first, the way they are usually written.
    static Polynomial from_descending(std::initializer_list<long> coeffs)
    {
        std::vector<Rational> v(coeffs.begin(), coeffs.end());
        std::reverse(v.begin(), v.end());
        return Polynomial(std::move(v));
    }

    bool is_zero() const { return c_.empty(); }
    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    Rational leading() const { return c_.empty() ? Rational(0) : c_.back(); }
    Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
    const std::vector<Rational>& coeffs() const { return c_; }

    Rational operator()(const Rational& x) const
    {
        Rational r = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Interval operator()(const Interval& x) const
    {
        Interval r(Rational(0));
        for (auto it = c_.rbegin(); it != c_.rend(); ++it)
            r = r * x + *it;
        return r;
    }

    Polynomial derivative() const
    {
        std::vector<Rational> v;
        for (std::size_t i = 1; i < c_.size(); ++i)
            v.push_back(c_[i] * Rational(static_cast<long>(i)));
        return Polynomial(std::move(v));
    }

    /// q(x) = p(x + s), by repeated synthetic multiplication with (x + s).
    Polynomial taylor_shift(const Rational& s) const
    {
        if (s == 0)
            return *this;
        std::vector<Rational> r;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            // r <- r * (x + s) + c
            r.push_back(0);
            for (std::size_t i = r.size() - 1; i > 0; --i)
                r[i] = r[i - 1] + s * r[i];
            r[0] = s * r[0] + *it;
        }
        return Polynomial(std::move(r));
    }

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b)
    {
        std::vector<Rational> v(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = a.coeff(i) + b.coeff(i);
        return Polynomial(std::move(v));
    }
    friend Polynomial operator-(const Polynomial& a) { return a * Rational(-1); }
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        if (a.is_zero() || b.is_zero())
            return {};
        std::vector<Rational> v(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0)
                continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j)
                v[i + j] += a.c_[i] * b.c_[j];
        }
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Polynomial& a, const Rational& q)
    {
        std::vector<Rational> v(a.c_);
        for (auto& c : v)
            c *= q;
        return Polynomial(std::move(v));
    }
    friend Polynomial operator*(const Rational& q, const Polynomial& a) { return a * q; }

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0)
            c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline Polynomial pow(const Polynomial& p, unsigned n)
{
    Polynomial r = Polynomial::constant(1);
    for (unsigned i = 0; i < n; ++i)
        r = r * p;
    return r;
}

/// Euclidean division: a = q*b + r with deg r < deg b.
inline std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b)
{
    if (b.is_zero())
        throw DomainError("polynomial division by zero");
    std::vector<Rational> rem(a.coeffs());
    const long db = b.degree();
    std::vector<Rational> quot(static_cast<std::size_t>(std::max(0L, a.degree() - db + 1)));
    const Rational lead = b.leading();
    for (long i = a.degree(); i >= db; --i) {
        Rational factor = rem[static_cast<std::size_t>(i)] / lead;
        if (factor == 0)
            continue;
        quot[static_cast<std::size_t>(i - db)] = factor;
        for (long j = 0; j <= db; ++j)
            rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coeff(static_cast<std::size_t>(j));
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

/// Monic gcd over Q (zero if both are zero).
inline Polynomial gcd(Polynomial a, Polynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero())
        return a;
    return a * Rational(1 / a.leading());
}

/// Outcome of the coefficient-sign test after a Taylor shift.
enum class PositivityVerdict { certified_positive, inconclusive };

struct PositivityCertificate {
    PositivityVerdict verdict = PositivityVerdict::inconclusive;
    Rational shift;
    Polynomial shifted; // p(x + shift)
    /// p(shift) > 0 as well, so positivity extends to the closed ray.
    bool includes_start = false;

    bool certified() const { return verdict == PositivityVerdict::certified_positive; }
};

/// p(x + s) with only nonnegative coefficients, at least one positive, proves
/// p(x) > 0 for every x > s. Anything else is inconclusive (never a disproof).
inline PositivityCertificate positivity_on_ray(const Polynomial& p, const Rational& s)
{
    PositivityCertificate cert;
    cert.shift = s;
    cert.shifted = p.taylor_shift(s);
    if (cert.shifted.is_zero())
        return cert;
    for (const auto& c : cert.shifted.coeffs())
        if (c < 0)
            return cert;
    cert.verdict = PositivityVerdict::certified_positive;
    cert.includes_start = cert.shifted.coeff(0) > 0;
    return cert;
}

/// Quotient of polynomials, kept in lowest terms with a primitive integer
/// denominator whose leading coefficient is positive.
class RationalFunction {
public:
    RationalFunction() : num_(), den_(Polynomial::constant(1)) {}
    RationalFunction(Polynomial num) : num_(std::move(num)), den_(Polynomial::constant(1)) { normalize(); }
    RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero())
            throw DomainError("rational function with zero denominator");
        normalize();
    }

    static RationalFunction constant(const Rational& c) { return RationalFunction(Polynomial::constant(c)); }
    static RationalFunction x() { return RationalFunction(Polynomial::x()); }
    /// c * x^-k
    static RationalFunction inverse_power(const Rational& c, std::size_t k)
    {
        return {Polynomial::constant(c), Polynomial::monomial(1, k)};
    }

    const Polynomial& num() const { return num_; }
    const Polynomial& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    Rational operator()(const Rational& x) const
    {
        Rational d = den_(x);
        if (d == 0)
            throw DomainError("rational function evaluated at a pole");
        return num_(x) / d;
    }

    Interval operator()(const Interval& x) const
    {
        if (x.is_point())
            return Interval((*this)(x.lo()));
        return num_(x) / den_(x);
    }

    RationalFunction derivative() const
    {
        return {num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_};
    }

    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
    }
    friend RationalFunction operator-(const RationalFunction& a) { return {-a.num_, a.den_}; }
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b)
    {
        return {a.num_ * b.num_, a.den_ * b.den_};
    }
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b)
    {
        if (b.is_zero())
            throw DomainError("division by the zero rational function");
        return {a.num_ * b.den_, a.den_ * b.num_};
    }
    friend RationalFunction operator*(const RationalFunction& a, const Rational& q) { return {a.num_ * q, a.den_}; }
    friend RationalFunction operator*(const Rational& q, const RationalFunction& a) { return a * q; }

    /// Equality as rational functions (both sides are in normal form).
    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    void normalize()
    {
        if (num_.is_zero()) {
            den_ = Polynomial::constant(1);
            return;
        }
        Polynomial g = gcd(num_, den_);
        if (g.degree() > 0) {
            num_ = divmod(num_, g).first;
            den_ = divmod(den_, g).first;
        }
        // Scale so den has coprime integer coefficients and a positive leading one.
        Integer lcm_den = 1;
        for (const auto& c : den_.coeffs())
            mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.get_den_mpz_t());
        Integer content = 0;
        for (const auto& c : den_.coeffs()) {
            Integer n = c.get_num() * (lcm_den / c.get_den());
            mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
        }
        Rational scale(lcm_den, content);
        scale.canonicalize();
        if (den_.leading() < 0)
            scale = -scale;
        num_ = num_ * scale;
        den_ = den_ * scale;
    }

    Polynomial num_;
    Polynomial den_;
};

inline RationalFunction pow(const RationalFunction& f, unsigned n)
{
    RationalFunction r = RationalFunction::constant(1);
    for (unsigned i = 0; i < n; ++i)
        r = r * f;
    return r;
}

inline Json to_json(const Polynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(to_string(c));
    return arr;
}

inline Polynomial polynomial_from_json(const Json& j)
{
    std::vector<Rational> v;
    for (const auto& c : j)
        v.push_back(parse_rational(c.get<std::string>()));
    return Polynomial(std::move(v));
}

inline Json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

} // namespace psicert
