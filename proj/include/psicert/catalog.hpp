#pragma once

// The inequalities for psi' (and psi) that psicert knows how to check.

#include "psicert/expr.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

namespace psicert {

/// One side-by-side comparison `smaller < larger` (or `<=`).
struct Comparison {
    std::string label;
    Expr smaller;
    Expr larger;
    bool strict = true;
};

enum class EntryKind {
    pointwise,  ///< every comparison holds at every x in the domain
    decreasing, ///< `function` is strictly decreasing on the domain
};

struct InequalityEntry {
    std::string id;
    std::string statement;
    Rational domain_start;
    bool domain_closed = true; ///< x >= domain_start, otherwise x > domain_start
    EntryKind kind = EntryKind::pointwise;
    std::vector<Comparison> comparisons;
    Expr function{0L}; ///< used by EntryKind::decreasing

    bool in_domain(const Rational& x) const { return domain_closed ? x >= domain_start : x > domain_start; }
};

/// Named building blocks shared by the catalog, comparisons and reports.
namespace bounds {

inline Expr x() { return var(); }

/// (e^{m/(x+1)} - e^{-m/x}) / (2m)
inline Expr theta(long m)
{
    const Expr v = var();
    return (exp(Expr(m) / (v + 1)) - exp(Expr(-m) / v)) / (2 * m);
}

inline Expr alpha() { return Rational(1, 2) + 1 / (90 * pow(var(), 3)) - 1 / (60 * pow(var(), 4)); }
inline Expr beta() { return Rational(1, 2) + 1 / (90 * pow(var(), 3)); }

/// exp(-2 psi(x+1) - 1/(120 x^4))
inline Expr thm1_factor() { return exp(-2 * digamma(var() + 1) - 1 / (120 * pow(var(), 4))); }

inline Expr thm1_lower() { return (var() + alpha()) * thm1_factor(); }
inline Expr thm1_upper() { return (var() + beta()) * thm1_factor(); }

inline Expr small_m() { return 1 / var() - 1 / (24 * pow(var(), 4)) + Rational(7, 360) / pow(var(), 6); }
inline Expr big_m() { return small_m() + 1 / (90 * pow(var(), 7)); }

inline Expr batir_lower() { return (var() + Rational(1, 2)) * exp(-2 * digamma(var() + 1)); }
inline Expr batir_upper() { return (var() + constant(NamedConstant::batir_bstar)) * exp(-2 * digamma(var() + 1)); }

inline Expr thm3a_lower() { return theta(1) + 1 / (24 * pow(var(), 5)) - 5 / (48 * pow(var(), 6)); }
inline Expr thm3a_upper() { return theta(1) + 1 / (24 * pow(var(), 5)); }
inline Expr thm3b_lower() { return theta(2) - 1 / (45 * pow(var(), 7)); }
inline Expr thm3b_upper() { return theta(2) - 1 / (45 * pow(var(), 7)) + 7 / (90 * pow(var(), 8)); }

inline Expr u_function()
{
    const Expr v = var();
    return ln(v + alpha()) - ln(v + Rational(1, 2)) - 1 / (120 * pow(v, 4));
}

inline Expr v_function()
{
    const Expr v = var();
    return ln(v + beta()) - 1 / (120 * pow(v, 4)) - ln(v + constant(NamedConstant::batir_bstar));
}

/// psi'(x+1) e^{2 psi(x+1)} - x
inline Expr batir_theta() { return trigamma(var() + 1) * exp(2 * digamma(var() + 1)) - var(); }

} // namespace bounds

/// All catalogued inequalities, in a fixed order.
inline std::vector<InequalityEntry> catalog()
{
    using namespace bounds;
    const Expr v = var();
    const Expr tri1 = trigamma(v + 1);
    const Expr tri = trigamma(v);
    std::vector<InequalityEntry> out;

    out.push_back({"THM1",
                   "(x+alpha(x)) exp(-2psi(x+1)-1/(120x^4)) <= psi'(x+1) <= (x+beta(x)) exp(-2psi(x+1)-1/(120x^4)), "
                   "alpha = 1/2+1/(90x^3)-1/(60x^4), beta = 1/2+1/(90x^3)",
                   3, true, EntryKind::pointwise,
                   {{"lower", thm1_lower(), tri1, false}, {"upper", tri1, thm1_upper(), false}}});

    out.push_back({"THM2",
                   "e^m(x) - 1 < psi'(x) < e^M(x) - 1, m = 1/x-1/(24x^4)+7/(360x^6), M = m+1/(90x^7)",
                   3, true, EntryKind::pointwise,
                   {{"lower", exp(small_m()) - 1, tri}, {"upper", tri, exp(big_m()) - 1}}});

    out.push_back({"THM3a",
                   "theta(x,1) + 1/(24x^5) - 5/(48x^6) < psi'(x+1) < theta(x,1) + 1/(24x^5)",
                   1, true, EntryKind::pointwise,
                   {{"lower", thm3a_lower(), tri1}, {"upper", tri1, thm3a_upper()}}});

    out.push_back({"THM3b",
                   "theta(x,2) - 1/(45x^7) < psi'(x+1) < theta(x,2) - 1/(45x^7) + 7/(90x^8)",
                   1, true, EntryKind::pointwise,
                   {{"lower", thm3b_lower(), tri1}, {"upper", tri1, thm3b_upper()}}});

    out.push_back({"ELE", "psi'(x) < e^{-psi(x)}", 0, false, EntryKind::pointwise,
                   {{"upper", tri, exp(-digamma(v))}}});

    out.push_back({"GUO-QI", "psi'(x) < e^{1/x} - 1", 0, false, EntryKind::pointwise,
                   {{"upper", tri, exp(1 / v) - 1}}});

    out.push_back({"BATIR",
                   "(x + 1/2) e^{-2psi(x+1)} < psi'(x+1) <= (x + bstar) e^{-2psi(x+1)}, bstar = pi^2/(6e^{2gamma})",
                   0, false, EntryKind::pointwise,
                   {{"lower", batir_lower(), tri1}, {"upper", tri1, batir_upper(), false}}});

    out.push_back({"YCT", "theta(x,1) < psi'(x+1) < theta(x,2)", 0, false, EntryKind::pointwise,
                   {{"lower", theta(1), tri1}, {"upper", tri1, theta(2)}}});

    out.push_back({"XP1",
                   "e^{1/(x+1)} - e + psi'(1) < psi'(x+1) < e^{1/(x+1)} - 1 < sinh(2/x)/2",
                   0, false, EntryKind::pointwise,
                   {{"lower", exp(1 / (v + 1)) - constant(NamedConstant::e) + trigamma(Expr(1)), tri1},
                    {"upper", tri1, exp(1 / (v + 1)) - 1},
                    {"sinh", exp(1 / (v + 1)) - 1, sinh(2 / v) / 2}}});

    out.push_back({"R1U", "u(x) = ln(x+alpha(x)) - ln(x+1/2) - 1/(120x^4) < 0", 1, true, EntryKind::pointwise,
                   {{"negative", u_function(), Expr(0L)}}});

    out.push_back({"R1V", "v(x) = ln(x+beta(x)) - 1/(120x^4) - ln(x+bstar) < 0", 1, true, EntryKind::pointwise,
                   {{"negative", v_function(), Expr(0L)}}});

    InequalityEntry theta_entry{"BATIR-THETA", "psi'(x+1) e^{2psi(x+1)} - x is strictly decreasing", 0, false,
                                EntryKind::decreasing, {}};
    theta_entry.function = batir_theta();
    out.push_back(std::move(theta_entry));
    return out;
}

inline InequalityEntry catalog_entry(const std::string& id)
{
    for (auto& e : catalog())
        if (e.id == id)
            return e;
    throw std::invalid_argument("unknown catalog id '" + id + "'");
}

/// Geometric grid from start to stop. Interior points are rounded to six
/// significant decimal digits so every grid point is a short exact rational.
inline std::vector<Rational> geometric_grid(const Rational& start, const Rational& stop, int count)
{
    if (start <= 0 || stop < start)
        throw std::invalid_argument("geometric grid needs 0 < start <= stop");
    if (count < 1)
        throw std::invalid_argument("geometric grid needs count >= 1");
    if (count == 1)
        return {start};
    std::vector<Rational> grid;
    const double a = start.get_d(), b = stop.get_d();
    for (int i = 0; i < count; ++i) {
        if (i == 0) {
            grid.push_back(start);
            continue;
        }
        if (i == count - 1) {
            grid.push_back(stop);
            continue;
        }
        const double value = a * std::pow(b / a, static_cast<double>(i) / (count - 1));
        const int exponent = static_cast<int>(std::floor(std::log10(value)));
        const int digits = 5 - exponent; // six significant digits
        Rational q = parse_rational(to_decimal(Rational(value), std::max(digits, 0)));
        if (q <= grid.back() || q >= stop)
            continue;
        grid.push_back(q);
    }
    return grid;
}

/// First grid point for an entry: its threshold, or 1/10 for open domains at 0.
inline Rational default_grid_start(const InequalityEntry& e)
{
    if (e.domain_closed)
        return e.domain_start;
    return std::max(e.domain_start, Rational(1, 10));
}

inline constexpr int kDefaultGridPoints = 40;
inline const Rational kDefaultGridStop{10000};

inline std::vector<Rational> default_grid(const InequalityEntry& e)
{
    return geometric_grid(default_grid_start(e), kDefaultGridStop, kDefaultGridPoints);
}

} // namespace psicert
