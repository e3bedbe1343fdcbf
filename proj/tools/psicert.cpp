// psicert command-line front end.
//
// Exit status: 0 when every requested verdict is "holds", 1 when something is
// undecided or violated, 2 for usage errors.

#include "psicert/psicert.hpp"

#include <CLI11.hpp>

#include <iomanip>
#include <iostream>
#include <sstream>
#include <map>

using namespace psicert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNotHolds = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Format { text, json, csv };

struct Config {
    long precision = 64;
    std::string shift = "10";
    Format format = Format::text;
};

Rational rational_arg(const std::string& text, const std::string& what)
{
    try {
        return parse_rational(text);
    } catch (const std::exception& e) {
        throw UsageError("malformed " + what + " '" + text + "': " + e.what());
    }
}

struct GridSpec {
    Rational start, stop;
    int count = 0;
};

GridSpec parse_grid(const std::string& spec)
{
    const auto a = spec.find(':');
    const auto b = a == std::string::npos ? a : spec.find(':', a + 1);
    if (b == std::string::npos)
        throw UsageError("grid must be START:STOP:COUNT, got '" + spec + "'");
    GridSpec g{rational_arg(spec.substr(0, a), "grid start"), rational_arg(spec.substr(a + 1, b - a - 1), "grid stop")};
    try {
        std::size_t used = 0;
        g.count = std::stoi(spec.substr(b + 1), &used);
        if (used != spec.size() - b - 1)
            throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
        throw UsageError("malformed grid count in '" + spec + "'");
    }
    if (g.start <= 0 || g.stop < g.start || g.count < 1)
        throw UsageError("grid needs 0 < START <= STOP and COUNT >= 1");
    return g;
}

GridOptions grid_options(const Config& cfg)
{
    if (cfg.precision < 8)
        throw UsageError("--precision must be at least 8");
    GridOptions opt;
    opt.shift_target = rational_arg(cfg.shift, "shift target");
    if (opt.shift_target < 10)
        throw UsageError("--shift must be at least 10");
    opt.work_precision = cfg.precision;
    return opt;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

int exit_for(Verdict v) { return v == Verdict::holds ? kExitOk : kExitNotHolds; }

// bern N ----------------------------------------------------------------------

int run_bern(const Config& cfg, unsigned n)
{
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (unsigned k = 0; k <= n; ++k)
            arr.push_back(to_string(bernoulli(k)));
        print_json(arr);
    } else if (cfg.format == Format::csv) {
        std::cout << csv_row({"n", "B_n"});
        for (unsigned k = 0; k <= n; ++k)
            std::cout << csv_row({std::to_string(k), to_string(bernoulli(k))});
    } else {
        for (unsigned k = 0; k <= n; ++k)
            std::cout << "B_" << k << " = " << to_string(bernoulli(k)) << "\n";
    }
    return kExitOk;
}

// series ----------------------------------------------------------------------

int run_series(const Config& cfg, const std::string& which, long order, const std::string& m)
{
    if (order < 1)
        throw UsageError("--order must be at least 1");
    AsymptoticExpansion e;
    if (which == "digamma")
        e = digamma_expansion(order);
    else if (which == "trigamma")
        e = trigamma_expansion(order);
    else if (which == "theta")
        e = theta_expansion(rational_arg(m, "--m"), order);
    else
        e = trigamma_exp_digamma_product(order);
    if (cfg.format == Format::csv) {
        std::cout << csv_row({"power_of_x", "coefficient"});
        if (e.log_coeff() != 0)
            std::cout << csv_row({"ln", to_string(e.log_coeff())});
        for (long k = -e.low_degree(); k <= e.order(); ++k)
            std::cout << csv_row({std::to_string(-k), to_string(e.coeff(k))});
    } else {
        print_json(to_json(e));
    }
    return kExitOk;
}

// enclose / const -------------------------------------------------------------

Json interval_record(const Interval& v)
{
    Json j = to_json(v);
    j["lo_decimal"] = to_decimal(v.lo(), 30, Rounding::down);
    j["hi_decimal"] = to_decimal(v.hi(), 30, Rounding::up);
    std::ostringstream width;
    width << std::setprecision(3) << to_double(v.width());
    j["width"] = width.str();
    return j;
}

void print_interval(const Config& cfg, const std::string& name, const Interval& v)
{
    if (cfg.format == Format::json) {
        Json j{{"name", name}};
        j.update(interval_record(v));
        print_json(j);
    } else if (cfg.format == Format::csv) {
        std::cout << csv_row({"name", "lo", "hi"}) << csv_row({name, to_string(v.lo()), to_string(v.hi())});
    } else {
        std::cout << name << " in " << decimal_interval(v, 30) << "\n";
    }
}

int run_enclose(const Config& cfg, const std::string& which, const std::string& x_text)
{
    const GridOptions opt = grid_options(cfg);
    const Rational x = rational_arg(x_text, "x");
    if (x <= 0)
        throw UsageError("x must be positive");
    const Interval v = which == "digamma" ? digamma_enclosure(x, opt.shift_target, opt.work_precision)
                                          : trigamma_enclosure(x, opt.shift_target);
    print_interval(cfg, which + "(" + to_string(x) + ")", v);
    return kExitOk;
}

// Refines a shift-dependent enclosure until its width is at most tol.
template <class F>
Interval refine(F f, Rational shift, const Rational& tol)
{
    Interval v = f(shift);
    for (int i = 0; i < 12 && v.width() > tol; ++i) {
        shift *= 2;
        v = f(shift);
    }
    return v;
}

int run_const(const Config& cfg, const std::string& which, const std::string& tol_text)
{
    const GridOptions opt = grid_options(cfg);
    const Rational tol = rational_arg(tol_text, "--tol");
    if (tol <= 0)
        throw UsageError("--tol must be positive");
    Interval v;
    if (which == "gamma")
        v = refine([](const Rational& s) { return euler_gamma_enclosure(s); }, opt.shift_target, tol);
    else if (which == "bstar")
        v = refine([&](const Rational& s) { return batir_bstar_enclosure(s, opt.work_precision); }, opt.shift_target,
                   tol);
    else if (which == "pi")
        v = iv_pi(opt.work_precision);
    else
        v = digamma_zero(tol);
    print_interval(cfg, which, v);
    return v.width() <= tol ? kExitOk : kExitNotHolds;
}

// certify ---------------------------------------------------------------------

const std::map<std::string, std::vector<std::string>> kGridGroups{
    {"thm1", {"THM1"}},
    {"thm2", {"THM2"}},
    {"thm3", {"THM3a", "THM3b"}},
    {"classical", {"ELE", "GUO-QI", "BATIR", "YCT", "XP1", "BATIR-THETA"}},
    {"remark1", {"R1U", "R1V"}},
    {"all", {"THM1", "THM2", "THM3a", "THM3b", "ELE", "GUO-QI", "BATIR", "YCT", "XP1", "R1U", "R1V", "BATIR-THETA"}},
};

const std::map<std::string, std::vector<std::string>> kSymbolicGroups{
    {"thm1", {"THM1"}},
    {"thm2", {"THM2"}},
    {"thm3", {"THM3a-lower"}},
    {"remark1", {"R1U", "R1V"}},
    {"all", {"THM1", "THM2", "THM3a-lower", "R1U", "R1V"}},
};

int emit_reports(const Config& cfg, const std::vector<CertReport>& reports)
{
    Verdict total = Verdict::holds;
    for (const auto& r : reports)
        total = combine(total, r.verdict);
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : reports)
            arr.push_back(to_json(r));
        print_json({{"verdict", to_string(total)}, {"reports", arr}});
    } else if (cfg.format == Format::csv) {
        std::cout << csv_row(kCertCsvHeader);
        for (const auto& r : reports)
            write_csv(std::cout, r);
    } else {
        for (const auto& r : reports)
            write_text(std::cout, r);
        std::cout << "total: " << to_string(total) << "\n";
    }
    return exit_for(total);
}

int run_certify(const Config& cfg, const std::string& group, bool symbolic, const std::string& grid_text)
{
    const GridOptions opt = grid_options(cfg);
    std::vector<CertReport> reports;
    if (symbolic) {
        auto it = kSymbolicGroups.find(group);
        if (it == kSymbolicGroups.end())
            throw UsageError("no symbolic replay for '" + group + "'");
        for (const auto& id : it->second)
            reports.push_back(id == "R1V" ? r1v_coefficient_signs(opt.work_precision) : certify_symbolic(id));
        return emit_reports(cfg, reports);
    }

    std::vector<InequalityEntry> entries;
    for (const auto& id : kGridGroups.at(group))
        entries.push_back(catalog_entry(id));
    std::optional<GridSpec> spec;
    if (!grid_text.empty()) {
        spec = parse_grid(grid_text);
        for (const auto& e : entries)
            if (!e.in_domain(spec->start))
                throw UsageError("grid start " + to_string(spec->start) + " is outside the domain of " + e.id);
    }
    for (const auto& e : entries) {
        const auto grid = spec ? geometric_grid(spec->start, spec->stop, spec->count) : default_grid(e);
        reports.push_back(check_grid(e, grid, opt));
    }
    return emit_reports(cfg, reports);
}

// report ----------------------------------------------------------------------

std::vector<Rational> report_grid(const std::string& grid_text, const std::vector<std::string>& at,
                                  std::vector<Rational> fallback)
{
    if (!grid_text.empty() && !at.empty())
        throw UsageError("use either --grid or --at");
    if (!grid_text.empty()) {
        const GridSpec g = parse_grid(grid_text);
        return geometric_grid(g.start, g.stop, g.count);
    }
    if (!at.empty()) {
        std::vector<Rational> out;
        for (const auto& a : at)
            out.push_back(rational_arg(a, "--at"));
        return out;
    }
    return fallback;
}

template <class Row>
void emit_rows(const Config& cfg, const std::vector<Row>& rows, const std::vector<std::string>& header)
{
    if (cfg.format == Format::json) {
        Json arr = Json::array();
        for (const auto& r : rows)
            arr.push_back(to_json(r));
        print_json(arr);
    } else if (cfg.format == Format::csv) {
        std::cout << csv_row(header);
        for (const auto& r : rows)
            write_csv(std::cout, r);
    } else {
        for (const auto& r : rows)
            write_text(std::cout, r);
    }
}

int run_report(const Config& cfg, const std::string& which, const std::string& grid_text,
               const std::vector<std::string>& at)
{
    const GridOptions opt = grid_options(cfg);
    if (which == "tightness") {
        std::vector<Rational> powers;
        for (long x = 1; x <= 1024; x *= 2)
            powers.push_back(x);
        const auto grid = report_grid(grid_text, at, powers);
        for (const auto& x : grid)
            if (x < 1)
                throw UsageError("tightness grid points must be >= 1");
        const auto rows = tightness_report(grid, opt);
        emit_rows(cfg, rows, kTightnessCsvHeader);
        Verdict v = Verdict::holds;
        for (const auto& r : rows)
            v = combine(v, combine(r.scaled1.verdict, r.scaled2.verdict));
        return exit_for(v);
    }
    if (which == "compare") {
        const auto grid = report_grid(grid_text, at, {2, 3, 10});
        std::vector<BoundComparison> rows;
        for (const auto& x : grid) {
            if (x < 1)
                throw UsageError("compare points must be >= 1");
            rows.push_back(compare_bounds(x, opt));
        }
        emit_rows(cfg, rows, kCompareCsvHeader);
        Verdict v = Verdict::holds;
        for (const auto& r : rows)
            v = combine(v, r.verdict);
        return exit_for(v);
    }
    const auto grid = report_grid(grid_text, at, geometric_grid(Rational(1, 2), 64, 13));
    for (const auto& x : grid)
        if (x <= 0)
            throw UsageError("sample points must be positive");
    emit_rows(cfg, sample_open_claims(grid, opt), kSampleCsvHeader);
    return kExitOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Certified enclosures and inequality checks for digamma and trigamma"};
    app.require_subcommand(1);
    app.fallthrough();
    Config cfg;
    std::string format = "text";
    app.add_option("--precision", cfg.precision, "working precision in bits (>= 8)")->capture_default_str();
    app.add_option("--shift", cfg.shift, "shift target for the polygamma recurrences (>= 10)")->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    unsigned bern_n = 0;
    auto* bern = app.add_subcommand("bern", "Bernoulli numbers B_0..B_N");
    bern->add_option("N", bern_n)->required();

    std::string series_kind;
    long order = 6;
    std::string theta_m = "1";
    auto* series = app.add_subcommand("series", "asymptotic expansion as x -> infinity");
    series->add_option("kind", series_kind, "digamma: psi(x+1), trigamma: psi'(x+1), theta, product: "
                                             "psi'(x+1) exp(2 psi(x+1))")
        ->required()
        ->check(CLI::IsMember({"digamma", "trigamma", "theta", "product"}));
    series->add_option("--order", order, "highest power of 1/x")->capture_default_str();
    series->add_option("--m", theta_m, "parameter of theta(x, m)")->capture_default_str();

    std::string enclose_kind, enclose_x;
    auto* enclose = app.add_subcommand("enclose", "certified enclosure at a rational point");
    enclose->add_option("function", enclose_kind)->required()->check(CLI::IsMember({"digamma", "trigamma"}));
    enclose->add_option("x", enclose_x, "p/q or decimal")->required();

    std::string const_kind, tol = "1/1000000";
    auto* constant_cmd = app.add_subcommand("const", "enclosure of a constant");
    constant_cmd->add_option("name", const_kind)
        ->required()
        ->check(CLI::IsMember({"gamma", "bstar", "pi", "digamma-zero"}));
    constant_cmd->add_option("--tol", tol, "target width")->capture_default_str();

    std::string certify_group, grid_text;
    bool symbolic = false;
    auto* certify = app.add_subcommand("certify", "check catalog inequalities");
    certify->add_option("group", certify_group)
        ->required()
        ->check(CLI::IsMember({"thm1", "thm2", "thm3", "classical", "remark1", "all"}));
    auto* symbolic_flag = certify->add_flag("--symbolic", symbolic, "exact proof replay instead of a grid");
    certify->add_option("--grid", grid_text, "START:STOP:COUNT geometric grid")->excludes(symbolic_flag);

    std::string report_kind, report_grid_text;
    std::vector<std::string> report_at;
    auto* report = app.add_subcommand("report", "tables of bound gaps and comparisons");
    report->add_option("kind", report_kind)->required()->check(CLI::IsMember({"tightness", "compare", "samples"}));
    report->add_option("--grid", report_grid_text, "START:STOP:COUNT geometric grid");
    report->add_option("--at", report_at, "explicit points");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }
    cfg.format = format == "json" ? Format::json : format == "csv" ? Format::csv : Format::text;

    try {
        if (*bern)
            return run_bern(cfg, bern_n);
        if (*series)
            return run_series(cfg, series_kind, order, theta_m);
        if (*enclose)
            return run_enclose(cfg, enclose_kind, enclose_x);
        if (*constant_cmd)
            return run_const(cfg, const_kind, tol);
        if (*certify)
            return run_certify(cfg, certify_group, symbolic, grid_text);
        if (*report)
            return run_report(cfg, report_kind, report_grid_text, report_at);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
