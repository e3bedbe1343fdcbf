#pragma once

// Expressions  sum_i c_i ln(r_i(x)) + r_0(x)  with rational c_i and rational
// functions r_i. Their derivative is again a rational function, which is what
// makes monotonicity arguments mechanical.

#include "psicert/elementary.hpp"
#include "psicert/polynomial.hpp"

#include <string>
#include <vector>

namespace psicert {

struct LogTerm {
    Rational coeff;
    RationalFunction arg;
};

class LogRationalExpr {
public:
    LogRationalExpr() = default;
    LogRationalExpr(RationalFunction rational) : rational_(std::move(rational)) {}

    /// c * ln(arg)
    static LogRationalExpr log(const Rational& c, RationalFunction arg)
    {
        LogRationalExpr e;
        e.logs_.push_back({c, std::move(arg)});
        return e;
    }

    const std::vector<LogTerm>& log_terms() const { return logs_; }
    const RationalFunction& rational_part() const { return rational_; }

    friend LogRationalExpr operator+(LogRationalExpr a, const LogRationalExpr& b)
    {
        a.logs_.insert(a.logs_.end(), b.logs_.begin(), b.logs_.end());
        a.rational_ = a.rational_ + b.rational_;
        return a;
    }
    friend LogRationalExpr operator*(const Rational& q, LogRationalExpr a)
    {
        for (auto& t : a.logs_)
            t.coeff *= q;
        a.rational_ = a.rational_ * q;
        return a;
    }
    friend LogRationalExpr operator-(const LogRationalExpr& a) { return Rational(-1) * a; }
    friend LogRationalExpr operator-(const LogRationalExpr& a, const LogRationalExpr& b) { return a + (-b); }

    /// Enclosure at a rational point. Every log argument must be positive there.
    Interval evaluate(const Rational& x, long work_precision) const
    {
        Interval sum(rational_(x));
        for (const auto& t : logs_)
            sum = sum + iv_ln(Interval(t.arg(x)), work_precision) * t.coeff;
        return sum;
    }

private:
    std::vector<LogTerm> logs_;
    RationalFunction rational_;
};

/// Exact derivative: sum c_i r_i'/r_i + r_0'.
inline RationalFunction logexpr_derivative(const LogRationalExpr& e)
{
    RationalFunction d = e.rational_part().derivative();
    for (const auto& t : e.log_terms())
        d = d + t.arg.derivative() / t.arg * t.coeff;
    return d;
}

/// Limit classification at +infinity. `diverges` also covers finite limits
/// that are not rational (a ln of a leading-coefficient ratio other than 1).
enum class LimitKind { zero, value, diverges };

struct LimitResult {
    LimitKind kind = LimitKind::diverges;
    Rational value; // meaningful for LimitKind::value
};

inline std::string to_string(LimitKind k)
{
    switch (k) {
    case LimitKind::zero: return "zero";
    case LimitKind::value: return "value";
    case LimitKind::diverges: return "diverges";
    }
    return "?";
}

inline LimitResult logexpr_limit_at_infinity(const LogRationalExpr& e)
{
    // c ln(N/D) = c (deg N - deg D) ln x + c ln(lc N / lc D) + o(1).
    Rational ln_x_coeff = 0;
    Integer common_den = 1;
    for (const auto& t : e.log_terms()) {
        if (t.arg.is_zero())
            return {};
        ln_x_coeff += t.coeff * Rational(t.arg.num().degree() - t.arg.den().degree());
        mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), t.coeff.get_den_mpz_t());
    }
    if (ln_x_coeff != 0)
        return {};

    // sum c_i ln rho_i = 0  <=>  prod rho_i^(L c_i) = 1 for the common denominator L.
    Rational product = 1;
    for (const auto& t : e.log_terms()) {
        Rational rho = t.arg.num().leading() / t.arg.den().leading();
        if (rho <= 0)
            return {};
        Rational exponent = t.coeff * Rational(common_den);
        product *= pow(rho, exponent.get_num().get_si());
    }
    if (product != 1)
        return {};

    const auto& r = e.rational_part();
    if (r.is_zero() || r.num().degree() < r.den().degree())
        return {LimitKind::zero, 0};
    if (r.num().degree() > r.den().degree())
        return {};
    return {LimitKind::value, r.num().leading() / r.den().leading()};
}

enum class CertVerdict { certified, inconclusive };

struct NegativityCertificate {
    CertVerdict verdict = CertVerdict::inconclusive;
    Rational shift;
    RationalFunction derivative;
    PositivityCertificate derivative_num;
    PositivityCertificate derivative_den;
    LimitResult limit;
    std::vector<PositivityCertificate> log_arg_nums;
    std::vector<PositivityCertificate> log_arg_dens;
    /// The conclusion also holds at x = shift (closed ray).
    bool includes_start = false;

    bool certified() const { return verdict == CertVerdict::certified; }
};

/// Certifies e(x) < 0 for all x > s: e' > 0 there (numerator and denominator
/// both positive after the shift), e -> 0 at infinity, and every log argument
/// positive on the ray.
inline NegativityCertificate certify_negative_on_ray(const LogRationalExpr& e, const Rational& s)
{
    NegativityCertificate cert;
    cert.shift = s;
    cert.derivative = logexpr_derivative(e);
    cert.derivative_num = positivity_on_ray(cert.derivative.num(), s);
    cert.derivative_den = positivity_on_ray(cert.derivative.den(), s);
    cert.limit = logexpr_limit_at_infinity(e);

    bool args_ok = true;
    bool closed = cert.derivative_den.includes_start;
    for (const auto& t : e.log_terms()) {
        cert.log_arg_nums.push_back(positivity_on_ray(t.arg.num(), s));
        cert.log_arg_dens.push_back(positivity_on_ray(t.arg.den(), s));
        args_ok = args_ok && cert.log_arg_nums.back().certified() && cert.log_arg_dens.back().certified();
        closed = closed && cert.log_arg_nums.back().includes_start && cert.log_arg_dens.back().includes_start;
    }
    const bool ok = cert.derivative_num.certified() && cert.derivative_den.certified() &&
                    cert.limit.kind == LimitKind::zero && args_ok;
    cert.verdict = ok ? CertVerdict::certified : CertVerdict::inconclusive;
    cert.includes_start = ok && closed;
    return cert;
}

} // namespace psicert
