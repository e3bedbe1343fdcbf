#pragma once

// JSON, CSV and plain-text renderings of certification reports and tables.
// Rationals are "p/q" strings in JSON and CSV; text output uses decimals.

#include "psicert/theorems.hpp"

#include <ostream>
#include <sstream>

namespace psicert {

inline Json to_json(const ComparisonResult& c)
{
    return {{"label", c.label},
            {"strict", c.strict},
            {"verdict", to_string(c.verdict)},
            {"smaller", c.smaller ? to_json(*c.smaller) : Json(nullptr)},
            {"larger", c.larger ? to_json(*c.larger) : Json(nullptr)}};
}

inline Json to_json(const PointResult& p)
{
    Json comps = Json::array();
    for (const auto& c : p.comparisons)
        comps.push_back(to_json(c));
    return {{"x", to_string(p.x)},
            {"verdict", to_string(p.verdict)},
            {"shift_target", to_string(p.shift_target)},
            {"work_precision", p.work_precision},
            {"attempts", p.attempts},
            {"comparisons", comps}};
}

inline Json to_json(const CertStep& s)
{
    return {{"name", s.name},
            {"verdict", to_string(s.verdict)},
            {"informational", s.informational},
            {"detail", s.detail},
            {"data", s.data}};
}

inline Json to_json(const CertReport& r)
{
    Json points = Json::array(), steps = Json::array();
    for (const auto& p : r.points)
        points.push_back(to_json(p));
    for (const auto& s : r.steps)
        steps.push_back(to_json(s));
    return {{"id", r.id},
            {"method", to_string(r.method)},
            {"verdict", to_string(r.verdict)},
            {"points", points},
            {"steps", steps}};
}

inline Verdict verdict_from_string(const std::string& s)
{
    if (s == "holds")
        return Verdict::holds;
    if (s == "undecided")
        return Verdict::undecided;
    if (s == "violated")
        return Verdict::violated;
    throw std::invalid_argument("unknown verdict '" + s + "'");
}

inline Method method_from_string(const std::string& s)
{
    if (s == "grid")
        return Method::grid;
    if (s == "symbolic")
        return Method::symbolic;
    if (s == "coefficient-signs")
        return Method::coefficient_signs;
    throw std::invalid_argument("unknown method '" + s + "'");
}

inline CertReport cert_report_from_json(const Json& j)
{
    CertReport r;
    r.id = j.at("id").get<std::string>();
    r.method = method_from_string(j.at("method").get<std::string>());
    r.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    auto opt_interval = [](const Json& v) -> std::optional<Interval> {
        if (v.is_null())
            return std::nullopt;
        return interval_from_json(v);
    };
    for (const auto& jp : j.at("points")) {
        PointResult p;
        p.x = parse_rational(jp.at("x").get<std::string>());
        p.verdict = verdict_from_string(jp.at("verdict").get<std::string>());
        p.shift_target = parse_rational(jp.at("shift_target").get<std::string>());
        p.work_precision = jp.at("work_precision").get<long>();
        p.attempts = jp.at("attempts").get<int>();
        for (const auto& jc : jp.at("comparisons"))
            p.comparisons.push_back({jc.at("label").get<std::string>(), opt_interval(jc.at("smaller")),
                                     opt_interval(jc.at("larger")), jc.at("strict").get<bool>(),
                                     verdict_from_string(jc.at("verdict").get<std::string>())});
        r.points.push_back(std::move(p));
    }
    for (const auto& js : j.at("steps"))
        r.steps.push_back({js.at("name").get<std::string>(), verdict_from_string(js.at("verdict").get<std::string>()),
                           js.at("informational").get<bool>(), js.at("detail").get<std::string>(), js.at("data")});
    return r;
}

inline Json to_json(const RangeCheck& c)
{
    return {{"value", to_json(c.value)}, {"lo", to_string(c.lo)}, {"hi", to_string(c.hi)},
            {"verdict", to_string(c.verdict)}};
}

inline Json to_json(const TightnessRow& r)
{
    return {{"x", to_string(r.x)},
            {"d1", to_json(r.d1)},
            {"d2", to_json(r.d2)},
            {"x5_d1", to_json(r.scaled1)},
            {"x7_d2", to_json(r.scaled2)},
            {"thm1_gap", to_json(r.thm1_gap)},
            {"thm2_gap", to_json(r.thm2_gap)},
            {"thm3a_gap", to_json(r.thm3a_gap)},
            {"thm3b_gap", to_json(r.thm3b_gap)},
            {"shift_target", to_string(r.shift_target)},
            {"work_precision", r.work_precision}};
}

inline Json to_json(const BoundComparison& c)
{
    Json bounds = Json::array(), claims = Json::array();
    for (const auto& b : c.bounds)
        bounds.push_back({{"name", b.name}, {"side", b.side}, {"enclosure", to_json(b.enclosure)}});
    for (const auto& cl : c.claims)
        claims.push_back(to_json(cl));
    return {{"x", to_string(c.x)}, {"verdict", to_string(c.verdict)}, {"bounds", bounds}, {"claims", claims}};
}

inline Json to_json(const SampleRow& r)
{
    auto opt = [](const std::optional<Interval>& v) { return v ? to_json(*v) : Json(nullptr); };
    return {{"x", to_string(r.x)},   {"g", to_json(r.g)},   {"h", to_json(r.h)},
            {"Theta", to_json(r.big_theta)}, {"dg", opt(r.dg)}, {"dh", opt(r.dh)},
            {"d2g", opt(r.d2g)},     {"d2h", opt(r.d2h)}};
}

// ---------------------------------------------------------------------------
// CSV

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& fields)
{
    std::string line;
    for (std::size_t i = 0; i < fields.size(); ++i)
        line += (i ? "," : "") + csv_field(fields[i]);
    return line + "\n";
}

inline const std::vector<std::string> kCertCsvHeader{"id",        "method",    "x",        "label",    "verdict",
                                                     "smaller_lo", "smaller_hi", "larger_lo", "larger_hi"};

inline void write_csv(std::ostream& os, const CertReport& r)
{
    auto ends = [](const std::optional<Interval>& v) {
        return v ? std::pair{to_string(v->lo()), to_string(v->hi())} : std::pair{std::string(), std::string()};
    };
    for (const auto& p : r.points)
        for (const auto& c : p.comparisons) {
            auto [slo, shi] = ends(c.smaller);
            auto [llo, lhi] = ends(c.larger);
            os << csv_row({r.id, to_string(r.method), to_string(p.x), c.label, to_string(c.verdict), slo, shi, llo, lhi});
        }
    for (const auto& s : r.steps)
        os << csv_row({r.id, to_string(r.method), "", s.name,
                       to_string(s.verdict) + (s.informational ? " (informational)" : ""), "", "", "", ""});
}

inline const std::vector<std::string> kTightnessCsvHeader{
    "x",        "d1_lo",    "d1_hi",    "d2_lo",       "d2_hi",       "x5_d1_lo",    "x5_d1_hi",    "x5_d1_verdict",
    "x7_d2_lo", "x7_d2_hi", "x7_d2_verdict", "thm1_gap_lo", "thm1_gap_hi", "thm2_gap_lo", "thm2_gap_hi",
    "thm3a_gap", "thm3b_gap"};

inline void write_csv(std::ostream& os, const TightnessRow& r)
{
    os << csv_row({to_string(r.x), to_string(r.d1.lo()), to_string(r.d1.hi()), to_string(r.d2.lo()),
                   to_string(r.d2.hi()), to_string(r.scaled1.value.lo()), to_string(r.scaled1.value.hi()),
                   to_string(r.scaled1.verdict), to_string(r.scaled2.value.lo()), to_string(r.scaled2.value.hi()),
                   to_string(r.scaled2.verdict), to_string(r.thm1_gap.lo()), to_string(r.thm1_gap.hi()),
                   to_string(r.thm2_gap.lo()), to_string(r.thm2_gap.hi()), to_string(r.thm3a_gap.lo()),
                   to_string(r.thm3b_gap.lo())});
}

inline const std::vector<std::string> kCompareCsvHeader{"x", "kind", "name", "side_or_verdict", "lo", "hi"};

inline void write_csv(std::ostream& os, const BoundComparison& c)
{
    for (const auto& b : c.bounds)
        os << csv_row({to_string(c.x), "bound", b.name, b.side, to_string(b.enclosure.lo()),
                       to_string(b.enclosure.hi())});
    for (const auto& cl : c.claims)
        os << csv_row({to_string(c.x), "claim", cl.label, to_string(cl.verdict), "", ""});
}

inline const std::vector<std::string> kSampleCsvHeader{"x", "g_lo", "g_hi", "h_lo", "h_hi", "Theta_lo", "Theta_hi"};

inline void write_csv(std::ostream& os, const SampleRow& r)
{
    os << csv_row({to_string(r.x), to_string(r.g.lo()), to_string(r.g.hi()), to_string(r.h.lo()),
                   to_string(r.h.hi()), to_string(r.big_theta.lo()), to_string(r.big_theta.hi())});
}

// ---------------------------------------------------------------------------
// Text

inline std::string decimal_interval(const Interval& v, int digits = 15)
{
    return "[" + to_decimal(v.lo(), digits, Rounding::down) + ", " + to_decimal(v.hi(), digits, Rounding::up) + "]";
}

inline void write_text(std::ostream& os, const CertReport& r)
{
    os << r.id << " (" << to_string(r.method) << "): " << to_string(r.verdict) << "\n";
    for (const auto& p : r.points) {
        os << "  x = " << to_string(p.x) << ": " << to_string(p.verdict);
        if (p.attempts > 1)
            os << " after " << p.attempts << " attempts";
        os << "\n";
        for (const auto& c : p.comparisons) {
            os << "    " << c.label << ": " << to_string(c.verdict);
            if (c.smaller && c.larger)
                os << "  " << decimal_interval(*c.smaller) << (c.strict ? " < " : " <= ") << decimal_interval(*c.larger);
            os << "\n";
        }
    }
    for (const auto& s : r.steps)
        os << "  " << s.name << ": " << to_string(s.verdict) << (s.informational ? " (informational)" : "") << "  "
           << s.detail << "\n";
}

inline void write_text(std::ostream& os, const TightnessRow& r)
{
    os << "x = " << to_string(r.x) << "\n"
       << "  psi'(x+1) - theta(x,1)      " << decimal_interval(r.d1, 20) << "\n"
       << "  psi'(x+1) - theta(x,2)      " << decimal_interval(r.d2, 24) << "\n"
       << "  x^5 (psi'(x+1) - theta(x,1)) " << decimal_interval(r.scaled1.value, 10) << " "
       << to_string(r.scaled1.verdict) << "\n"
       << "  x^7 (psi'(x+1) - theta(x,2)) " << decimal_interval(r.scaled2.value, 10) << " "
       << to_string(r.scaled2.verdict) << "\n"
       << "  gap THM1 " << decimal_interval(r.thm1_gap, 20) << "\n"
       << "  gap THM2 " << decimal_interval(r.thm2_gap, 20) << "\n"
       << "  gap THM3a " << decimal_interval(r.thm3a_gap, 20) << "\n"
       << "  gap THM3b " << decimal_interval(r.thm3b_gap, 24) << "\n";
}

inline void write_text(std::ostream& os, const BoundComparison& c)
{
    os << "x = " << to_string(c.x) << ": " << to_string(c.verdict) << "\n";
    for (const auto& b : c.bounds)
        os << "  " << b.name << " (" << b.side << ") " << decimal_interval(b.enclosure, 18) << "\n";
    for (const auto& cl : c.claims)
        os << "  claim " << cl.label << ": " << to_string(cl.verdict) << "\n";
}

inline void write_text(std::ostream& os, const SampleRow& r)
{
    os << "x = " << to_string(r.x) << "  g " << decimal_interval(r.g, 18) << "  h " << decimal_interval(r.h, 18)
       << "  Theta " << decimal_interval(r.big_theta, 12) << "\n";
}

} // namespace psicert
