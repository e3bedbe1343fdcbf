#pragma once

// Bernoulli numbers and exact truncated asymptotic expansions
//
//     f(x) ~ lambda * ln x + sum_{k=-d}^{K} a_k x^{-k},   x -> infinity,
//
// with the product and exponential rules of asymptotic series.

#include "psicert/json.hpp"
#include "psicert/rational.hpp"

#include <algorithm>
#include <mutex>
#include <string>
#include <vector>

namespace psicert {

/// B_n with B_1 = -1/2 (generating function t/(e^t - 1)). Memoized, thread-safe.
inline Rational bernoulli(unsigned n)
{
    static std::mutex mutex;
    static std::vector<Rational> table{Rational(1)};
    std::lock_guard lock(mutex);
    // sum_{j=0}^{k} C(k+1, j) B_j = 0  =>  B_k = -1/(k+1) sum_{j<k} C(k+1, j) B_j
    while (table.size() <= n) {
        const unsigned long k = table.size();
        Rational sum = 0;
        for (unsigned long j = 0; j < k; ++j)
            sum += Rational(binomial(k + 1, j)) * table[j];
        table.push_back(-sum / Rational(static_cast<long>(k + 1)));
    }
    return table[n];
}

/// Truncated asymptotic expansion in powers of 1/x.
///
/// Coefficient a_k multiplies x^-k and is stored for k in [-low_degree, order];
/// terms with k > order are unknown.
class AsymptoticExpansion {
public:
    AsymptoticExpansion() = default;

    AsymptoticExpansion(Rational log_coeff, long low_degree, long order)
        : log_coeff_(std::move(log_coeff)), low_degree_(low_degree), order_(order),
          coeffs_(static_cast<std::size_t>(std::max(0L, order + low_degree + 1)))
    {
        if (low_degree < 0)
            throw std::invalid_argument("low_degree must be nonnegative");
        if (order < -low_degree - 1)
            throw std::invalid_argument("order below the leading power");
    }

    /// The constant c, known to all orders.
    static AsymptoticExpansion constant(const Rational& c, long order)
    {
        AsymptoticExpansion e(0, 0, order);
        if (order >= 0)
            e.set(0, c);
        return e;
    }

    /// c * x^-k, known to `order`.
    static AsymptoticExpansion monomial(const Rational& c, long k, long order)
    {
        AsymptoticExpansion e(0, std::max(0L, -k), order);
        if (k <= order)
            e.set(k, c);
        return e;
    }

    const Rational& log_coeff() const { return log_coeff_; }
    long low_degree() const { return low_degree_; }
    long order() const { return order_; }

    /// a_k; zero outside [-low_degree, order].
    Rational coeff(long k) const
    {
        if (k < -low_degree_ || k > order_)
            return 0;
        return coeffs_[static_cast<std::size_t>(k + low_degree_)];
    }

    void set(long k, const Rational& value)
    {
        if (k < -low_degree_ || k > order_)
            throw std::out_of_range("coefficient index " + std::to_string(k) + " outside [-" +
                                    std::to_string(low_degree_) + ", " + std::to_string(order_) + "]");
        coeffs_[static_cast<std::size_t>(k + low_degree_)] = value;
    }

    /// Drops exactly-zero leading positive powers.
    AsymptoticExpansion normalized() const
    {
        long d = low_degree_;
        while (d > 0 && coeff(-d) == 0)
            --d;
        AsymptoticExpansion out(log_coeff_, d, order_);
        for (long k = -d; k <= order_; ++k)
            out.set(k, coeff(k));
        return out;
    }

    /// Same expansion with fewer known terms.
    AsymptoticExpansion truncated(long order) const
    {
        order = std::min(order, order_);
        AsymptoticExpansion out(log_coeff_, low_degree_, order);
        for (long k = -low_degree_; k <= order; ++k)
            out.set(k, coeff(k));
        return out;
    }

    /// Sum of the known terms at a rational point; the ln term must be absent.
    Rational evaluate(const Rational& x) const
    {
        if (log_coeff_ != 0)
            throw UnsupportedOperation("rational evaluation of an expansion with a ln x term");
        if (x == 0)
            throw DomainError("expansion evaluated at x = 0");
        Rational sum = 0;
        for (long k = -low_degree_; k <= order_; ++k)
            if (coeff(k) != 0)
                sum += coeff(k) * pow(x, -k);
        return sum;
    }

    friend bool operator==(const AsymptoticExpansion& u, const AsymptoticExpansion& v)
    {
        if (u.log_coeff_ != v.log_coeff_ || u.order_ != v.order_)
            return false;
        const long d = std::max(u.low_degree_, v.low_degree_);
        for (long k = -d; k <= u.order_; ++k)
            if (u.coeff(k) != v.coeff(k))
                return false;
        return true;
    }

private:
    Rational log_coeff_{0};
    long low_degree_ = 0;
    long order_ = 0;
    std::vector<Rational> coeffs_;
};

inline AsymptoticExpansion series_add(const AsymptoticExpansion& u, const AsymptoticExpansion& v)
{
    const long d = std::max(u.low_degree(), v.low_degree());
    const long order = std::min(u.order(), v.order());
    AsymptoticExpansion out(u.log_coeff() + v.log_coeff(), d, order);
    for (long k = -d; k <= order; ++k)
        out.set(k, u.coeff(k) + v.coeff(k));
    return out;
}

inline AsymptoticExpansion series_scale(const AsymptoticExpansion& u, const Rational& c)
{
    AsymptoticExpansion out(u.log_coeff() * c, u.low_degree(), u.order());
    for (long k = -u.low_degree(); k <= u.order(); ++k)
        out.set(k, u.coeff(k) * c);
    return out;
}

inline AsymptoticExpansion series_sub(const AsymptoticExpansion& u, const AsymptoticExpansion& v)
{
    return series_add(u, series_scale(v, -1));
}

/// Cauchy product r_k = sum_{i+j=k} p_i q_j. The tail of u (x^-(K_u+1) and
/// beyond) meets the leading x^(d_v) of v, so the result is only known through
/// x^-min(K_u - d_v, K_v - d_u).
inline AsymptoticExpansion series_mul(const AsymptoticExpansion& u, const AsymptoticExpansion& v)
{
    if (u.log_coeff() != 0 || v.log_coeff() != 0)
        throw UnsupportedOperation("series_mul: expansions carrying ln x cannot be multiplied");
    const long d = u.low_degree() + v.low_degree();
    const long order = std::min(u.order() - v.low_degree(), v.order() - u.low_degree());
    AsymptoticExpansion out(0, d, std::max(order, -d - 1));
    for (long k = -d; k <= order; ++k) {
        Rational r = 0;
        for (long i = -u.low_degree(); i <= u.order(); ++i) {
            const long j = k - i;
            if (j < -v.low_degree() || j > v.order())
                continue;
            r += u.coeff(i) * v.coeff(j);
        }
        out.set(k, r);
    }
    return out;
}

/// exp of an expansion with no positive powers and a_0 = 0, using
/// alpha_0 = 1, alpha_k = (1/k) sum_{j=1}^{k} j a_j alpha_{k-j}.
/// An integer lambda >= 0 turns exp(lambda ln x) into the factor x^lambda.
inline AsymptoticExpansion series_exp(const AsymptoticExpansion& f)
{
    if (f.low_degree() != 0 && [&] {
            for (long k = -f.low_degree(); k < 0; ++k)
                if (f.coeff(k) != 0)
                    return true;
            return false;
        }())
        throw UnsupportedOperation("series_exp: positive powers of x in the exponent");
    if (f.coeff(0) != 0)
        throw UnsupportedOperation("series_exp: nonzero constant term gives a non-rational factor exp(a_0)");
    const Rational& lambda = f.log_coeff();
    if (lambda.get_den() != 1 || lambda < 0)
        throw UnsupportedOperation("series_exp: ln x coefficient must be a nonnegative integer");
    const long shift = lambda.get_num().get_si();

    const long order = f.order();
    std::vector<Rational> alpha(static_cast<std::size_t>(std::max(0L, order) + 1));
    alpha[0] = 1;
    for (long k = 1; k <= order; ++k) {
        Rational s = 0;
        for (long j = 1; j <= k; ++j)
            if (f.coeff(j) != 0)
                s += Rational(j) * f.coeff(j) * alpha[static_cast<std::size_t>(k - j)];
        alpha[static_cast<std::size_t>(k)] = s / Rational(k);
    }

    // alpha_k multiplies x^(lambda - k), i.e. index k - lambda.
    AsymptoticExpansion out(0, shift, order - shift);
    for (long k = 0; k <= order; ++k)
        out.set(k - shift, alpha[static_cast<std::size_t>(k)]);
    return out;
}

/// Termwise d/dx: lambda ln x -> lambda/x, a_k x^-k -> -k a_k x^-(k+1).
inline AsymptoticExpansion series_derivative(const AsymptoticExpansion& u)
{
    const long d = std::max(0L, u.low_degree() - 1);
    AsymptoticExpansion out(0, d, u.order() + 1);
    for (long k = -u.low_degree(); k <= u.order(); ++k)
        if (k != 0 && u.coeff(k) != 0)
            out.set(k + 1, Rational(-k) * u.coeff(k));
    out.set(1, out.coeff(1) + u.log_coeff());
    return out;
}

/// 1/(x + a) = sum_{k>=1} (-a)^(k-1) x^-k.
inline AsymptoticExpansion reciprocal_shift_expansion(const Rational& a, long order)
{
    AsymptoticExpansion out(0, 0, order);
    Rational p = 1;
    for (long k = 1; k <= order; ++k) {
        out.set(k, p);
        p *= -a;
    }
    return out;
}

/// psi(x+1) ~ ln x + 1/(2x) - sum_{k>=2} B_k / (k x^k).
inline AsymptoticExpansion digamma_expansion(long order)
{
    if (order < 1)
        throw std::invalid_argument("digamma_expansion needs order >= 1");
    AsymptoticExpansion out(1, 0, order);
    out.set(1, Rational(1, 2));
    for (long k = 2; k <= order; ++k)
        out.set(k, -bernoulli(static_cast<unsigned>(k)) / Rational(k));
    return out;
}

/// psi'(x+1) ~ 1/x - 1/(2x^2) + sum_{k>=3} B_{k-1} / x^k.
inline AsymptoticExpansion trigamma_expansion(long order)
{
    if (order < 1)
        throw std::invalid_argument("trigamma_expansion needs order >= 1");
    AsymptoticExpansion out(0, 0, order);
    out.set(1, 1);
    if (order >= 2)
        out.set(2, Rational(-1, 2));
    for (long k = 3; k <= order; ++k)
        out.set(k, bernoulli(static_cast<unsigned>(k - 1)));
    return out;
}

/// theta(x, m) = (e^{m/(x+1)} - e^{-m/x}) / (2m).
inline AsymptoticExpansion theta_expansion(const Rational& m, long order)
{
    if (m == 0)
        throw DomainError("theta_expansion needs m != 0");
    auto shifted = series_exp(series_scale(reciprocal_shift_expansion(1, order), m));
    auto plain = series_exp(AsymptoticExpansion::monomial(-m, 1, order));
    return series_scale(series_sub(shifted, plain), 1 / (2 * m));
}

/// psi'(x+1) e^{2 psi(x+1)} known through x^-order.
inline AsymptoticExpansion trigamma_exp_digamma_product(long order)
{
    const long inner = order + 2;
    return series_mul(trigamma_expansion(inner), series_exp(series_scale(digamma_expansion(inner), 2))).normalized();
}

inline Json to_json(const AsymptoticExpansion& e)
{
    Json coeffs = Json::object();
    for (long k = -e.low_degree(); k <= e.order(); ++k)
        coeffs[std::to_string(k)] = to_string(e.coeff(k));
    return {{"log_coeff", to_string(e.log_coeff())},
            {"low_degree", e.low_degree()},
            {"order", e.order()},
            {"coeffs", coeffs}};
}

inline AsymptoticExpansion expansion_from_json(const Json& j)
{
    AsymptoticExpansion e(parse_rational(j.at("log_coeff").get<std::string>()), j.at("low_degree").get<long>(),
                          j.at("order").get<long>());
    for (const auto& [key, value] : j.at("coeffs").items())
        e.set(std::stol(key), parse_rational(value.get<std::string>()));
    return e;
}

} // namespace psicert
