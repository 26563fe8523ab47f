#include "arcsin_bounds/cli.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "arcsin_bounds/analysis.hpp"
#include "arcsin_bounds/verify.hpp"
#include "json.hpp"

namespace asinb::cli {

using nlohmann::json;

namespace {

constexpr int kSchemaVersion = 1;

double parse_real(std::string_view s, const char* what) {
    double v = 0.0;
    const auto* end = s.data() + s.size();
    const auto res = std::from_chars(s.data(), end, v);
    if (res.ec != std::errc() || res.ptr != end) {
        throw UsageError(std::string("invalid ") + what + ": '" + std::string(s) + "'");
    }
    return v;
}

std::size_t parse_count(std::string_view s) {
    const double v = parse_real(s, "grid count");
    if (!(v >= 2.0) || v != std::floor(v) || v > 1e9) {
        throw UsageError("grid count must be an integer >= 2, got '" + std::string(s) + "'");
    }
    return static_cast<std::size_t>(v);
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while (true) {
        const auto next = s.find(sep, pos);
        parts.emplace_back(s.substr(pos, next - pos));
        if (next == std::string_view::npos) break;
        pos = next + 1;
    }
    return parts;
}

std::vector<BoundId> parse_bounds(const std::vector<std::string>& names) {
    std::vector<BoundId> ids;
    for (const auto& n : names) {
        if (n == "all") {
            ids.insert(ids.end(), std::begin(kAllBounds), std::end(kAllBounds));
            continue;
        }
        const auto id = parse_bound_id(n);
        if (!id) throw UsageError("unknown bound id '" + n + "'");
        ids.push_back(*id);
    }
    if (ids.empty()) throw UsageError("empty bound list");
    return ids;
}

BoundId parse_one_bound(const std::string& name) {
    const auto id = parse_bound_id(name);
    if (!id) throw UsageError("unknown bound id '" + name + "'");
    return *id;
}

json grid_json(const GridSpec& g) {
    return {{"start", g.start},
            {"end", g.end},
            {"count", g.count},
            {"spacing", g.spacing == Spacing::Chebyshev ? "chebyshev" : "uniform"}};
}

json report_json(const VerificationReport& r) {
    return {{"check", r.check},
            {"grid", grid_json(r.grid)},
            {"passed", r.passed},
            {"worst_violation", r.worst_violation},
            {"worst_x", r.worst_x},
            {"min_margin", r.min_margin},
            {"tolerance", r.tolerance},
            {"refined_nodes", r.refined_nodes}};
}

// Emits CSV rows with a fixed precision.
class CsvWriter {
public:
    CsvWriter(std::ostream& out, int precision) : out_(out), precision_(precision) {}

    template <typename... Fields>
    void row(const Fields&... fields) {
        bool first = true;
        ((write_field(fields, first)), ...);
        out_ << '\n';
    }

    void row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << fields[i];
        }
        out_ << '\n';
    }

    [[nodiscard]] std::string num(double v) const { return format_number(v, precision_); }

private:
    template <typename T>
    void write_field(const T& v, bool& first) {
        if (!first) out_ << ',';
        first = false;
        if constexpr (std::is_floating_point_v<T>) {
            out_ << num(v);
        } else {
            out_ << v;
        }
    }

    std::ostream& out_;
    int precision_;
};

void emit_json(std::ostream& out, json body, std::string_view command) {
    json doc = {{"schema", kSchemaVersion}, {"command", command}};
    doc.update(body);
    out << doc.dump(2) << '\n';
}

// ---------------------------------------------------------------------------

struct CommonOptions {
    std::string grid;
    bool chebyshev = false;
    double tol = kDefaultTol;
    std::string format;
    int precision = 17;
};

OutputFormat resolve_format(const CommonOptions& o, FormatKind fallback) {
    OutputFormat f{fallback, o.precision};
    if (o.format == "csv") {
        f.kind = FormatKind::Csv;
    } else if (o.format == "json") {
        f.kind = FormatKind::Json;
    } else if (!o.format.empty()) {
        throw UsageError("--format must be csv or json");
    }
    if (o.precision < 1 || o.precision > 17) {
        throw UsageError("--precision must be in [1, 17]");
    }
    return f;
}

GridSpec resolve_grid(const CommonOptions& o, std::string_view fallback) {
    return parse_grid(o.grid.empty() ? fallback : std::string_view(o.grid), o.chebyshev);
}

int cmd_table(const std::vector<BoundId>& ids, const GridSpec& grid, const OutputFormat& fmt,
              std::ostream& out) {
    if (!(grid.start >= 0.0 && grid.end <= 1.0)) throw UsageError("table grid must lie in [0, 1]");
    if (fmt.kind == FormatKind::Json) {
        json rows = json::array();
        for (std::size_t i = 0; i < grid.count; ++i) {
            const double x = grid.node(i);
            const double ref = arcsin_ref(x);
            json row = {{"x", x}, {"arcsin_ref", ref}};
            for (BoundId id : ids) {
                const double v = eval_bound(id, x);
                row[std::string(to_string(id))] = v;
                row[std::string(to_string(id)) + "_err"] = v - ref;
            }
            rows.push_back(row);
        }
        emit_json(out, {{"grid", grid_json(grid)}, {"rows", rows}}, "table");
        return kExitOk;
    }
    CsvWriter csv(out, fmt.precision);
    std::vector<std::string> header = {"x", "arcsin_ref"};
    for (BoundId id : ids) {
        header.emplace_back(to_string(id));
        header.push_back(std::string(to_string(id)) + "_err");
    }
    csv.row(header);
    for (std::size_t i = 0; i < grid.count; ++i) {
        const double x = grid.node(i);
        const double ref = arcsin_ref(x);
        std::vector<std::string> fields = {csv.num(x), csv.num(ref)};
        for (BoundId id : ids) {
            const double v = eval_bound(id, x);
            fields.push_back(csv.num(v));
            fields.push_back(csv.num(v - ref));
        }
        csv.row(fields);
    }
    return kExitOk;
}

VerificationReport minimum_report(double alpha) {
    const MinimumLocation m = locate_minimum(alpha);
    VerificationReport r;
    r.check = "interior minimum alpha=" + std::to_string(alpha);
    r.grid = GridSpec{m.bracket.lo, m.bracket.hi, 2, Spacing::Uniform};
    r.worst_x = m.x0;
    r.tolerance = 1e-10;
    const double closed_gap = std::fabs(m.f_min - m.f_min_closed_form);
    const double floor_margin = m.f_min - m.lower_coefficient + 1e-12;
    r.min_margin = std::min(1e-10 - closed_gap, floor_margin);
    r.worst_violation = std::max(0.0, -r.min_margin);
    r.passed = closed_gap <= 1e-10 && floor_margin >= 0.0;
    return r;
}

int cmd_verify(const std::vector<double>& alphas, const GridSpec& grid, double tol,
               const OutputFormat& fmt, std::ostream& out) {
    if (alphas.empty()) throw UsageError("verify needs at least one --alpha");
    for (double a : alphas) {
        if (!(a > 0.0)) {
            throw UsageError("--alpha must be > 0 for enclosure checks, got " + format_number(a, 17));
        }
    }
    if (!(grid.start >= 0.0 && grid.end <= 1.0)) throw UsageError("verify grid must lie in [0, 1]");

    const GridSpec mono_grid = uniform_grid(1e-3, 1.0, 1000);
    std::vector<VerificationReport> reports;
    for (double a : alphas) {
        const AlphaParam alpha(a);
        reports.push_back(verify_enclosure(alpha, grid, tol));
        reports.push_back(verify_monotonicity(a, mono_grid).report);
        reports.push_back(verify_endpoints(a, 1e-6));
        if (alpha.regime() == Regime::Interior) reports.push_back(minimum_report(a));
    }
    const bool all_passed =
        std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; });

    if (fmt.kind == FormatKind::Json) {
        json checks = json::array();
        for (const auto& r : reports) checks.push_back(report_json(r));
        emit_json(out, {{"passed", all_passed}, {"checks", checks}}, "verify");
    } else {
        CsvWriter csv(out, fmt.precision);
        csv.row(std::vector<std::string>{"check", "passed", "worst_violation", "worst_x",
                                         "min_margin", "tolerance", "grid"});
        for (const auto& r : reports) {
            csv.row(r.check, r.passed ? "true" : "false", r.worst_violation, r.worst_x,
                    r.min_margin, r.tolerance, r.grid.describe());
        }
    }
    return all_passed ? kExitOk : kExitCheckFailed;
}

int cmd_compare(BoundId a, BoundId b, const GridSpec& grid, double tol, const OutputFormat& fmt,
                std::ostream& out) {
    if (side_of(a) != side_of(b)) {
        throw UsageError("cannot compare a lower bound with an upper bound");
    }
    if (!(grid.start > 0.0 && grid.end < 1.0)) {
        throw UsageError("compare grid must lie inside (0, 1)");
    }
    const DominanceReport r = dominance_scan(a, b, grid, tol);
    if (fmt.kind == FormatKind::Json) {
        json crossings = json::array();
        for (const auto& c : r.crossings) crossings.push_back({{"lo", c.lo}, {"hi", c.hi}});
        emit_json(out,
                  {{"id_a", to_string(a)},
                   {"id_b", to_string(b)},
                   {"side", to_string(r.side)},
                   {"grid", grid_json(grid)},
                   {"tol", tol},
                   {"verdict", to_string(r.verdict)},
                   {"crossings", crossings},
                   {"max_gap", r.max_gap},
                   {"max_gap_x", r.max_gap_x},
                   {"refined_nodes", r.refined_nodes}},
                  "compare");
    } else {
        CsvWriter csv(out, fmt.precision);
        csv.row("key", "value");
        csv.row("id_a", to_string(a));
        csv.row("id_b", to_string(b));
        csv.row("side", to_string(r.side));
        csv.row("grid", grid.describe());
        csv.row("tol", tol);
        csv.row("verdict", to_string(r.verdict));
        csv.row("max_gap", r.max_gap);
        csv.row("max_gap_x", r.max_gap_x);
        csv.row("refined_nodes", r.refined_nodes);
        for (std::size_t i = 0; i < r.crossings.size(); ++i) {
            csv.row("crossing_" + std::to_string(i) + "_lo", r.crossings[i].lo);
            csv.row("crossing_" + std::to_string(i) + "_hi", r.crossings[i].hi);
        }
    }
    return kExitOk;
}

int cmd_locate_min(double alpha, double tol_x, const OutputFormat& fmt, std::ostream& out) {
    if (classify_regime(alpha) != Regime::Interior) {
        throw UsageError("--alpha must lie in (pi/2, 2) for an interior minimum");
    }
    if (!(tol_x > 0.0)) throw UsageError("--tol-x must be > 0");
    const MinimumLocation m = locate_minimum(alpha, tol_x);
    const VerificationReport check = minimum_report(alpha);
    if (fmt.kind == FormatKind::Json) {
        emit_json(out,
                  {{"alpha", m.alpha},
                   {"x0", m.x0},
                   {"u0", m.u0},
                   {"f_min", m.f_min},
                   {"f_min_closed_form", m.f_min_closed_form},
                   {"lower_coefficient", m.lower_coefficient},
                   {"bracket", {m.bracket.lo, m.bracket.hi}},
                   {"iterations", m.iterations},
                   {"tol_x", tol_x},
                   {"consistent", check.passed}},
                  "locate-min");
    } else {
        CsvWriter csv(out, fmt.precision);
        csv.row("key", "value");
        csv.row("alpha", m.alpha);
        csv.row("x0", m.x0);
        csv.row("u0", m.u0);
        csv.row("f_min", m.f_min);
        csv.row("f_min_closed_form", m.f_min_closed_form);
        csv.row("lower_coefficient", m.lower_coefficient);
        csv.row("bracket_lo", m.bracket.lo);
        csv.row("bracket_hi", m.bracket.hi);
        csv.row("iterations", m.iterations);
        csv.row("consistent", check.passed ? "true" : "false");
    }
    return check.passed ? kExitOk : kExitCheckFailed;
}

int cmd_best_alpha(const std::vector<double>& xs, const OutputFormat& fmt, std::ostream& out) {
    if (xs.empty()) throw UsageError("best-alpha needs x values or --grid");
    for (double x : xs) {
        if (!(x > 0.0 && x < 1.0)) {
            throw UsageError("best-alpha is defined on (0, 1); limits are 2 at x=0 and sqrt3 at x=1");
        }
    }
    if (fmt.kind == FormatKind::Json) {
        json rows = json::array();
        for (double x : xs) {
            const auto r = best_alpha(x);
            rows.push_back({{"x", r.x},
                            {"theta", r.theta},
                            {"alpha_star", r.alpha_star},
                            {"bound_value", r.bound_value}});
        }
        emit_json(out, {{"rows", rows}}, "best-alpha");
    } else {
        CsvWriter csv(out, fmt.precision);
        csv.row("x", "theta", "alpha_star", "bound_value");
        for (double x : xs) {
            const auto r = best_alpha(x);
            csv.row(r.x, r.theta, r.alpha_star, r.bound_value);
        }
    }
    return kExitOk;
}

struct BenchRow {
    std::string name;
    double median_ns;
    double min_ns;
    double max_ns;
    int reps;
};

template <typename Fn>
BenchRow time_kernel(std::string name, const std::vector<double>& inputs, int reps, Fn&& fn) {
    using clock = std::chrono::steady_clock;
    volatile double sink = 0.0;
    double acc = 0.0;
    for (double x : inputs) acc += fn(x);  // warmup
    sink = acc;
    std::vector<double> per_eval;
    per_eval.reserve(static_cast<std::size_t>(reps));
    for (int r = 0; r < reps; ++r) {
        acc = 0.0;
        const auto t0 = clock::now();
        for (double x : inputs) acc += fn(x);
        const auto t1 = clock::now();
        sink = sink + acc;
        const double ns = std::chrono::duration<double, std::nano>(t1 - t0).count();
        // Clock granularity can round a short pass to zero.
        per_eval.push_back(std::max(ns, 1.0) / static_cast<double>(inputs.size()));
    }
    (void)sink;
    std::sort(per_eval.begin(), per_eval.end());
    const std::size_t n = per_eval.size();
    const double median =
        n % 2 ? per_eval[n / 2] : 0.5 * (per_eval[n / 2 - 1] + per_eval[n / 2]);
    return {std::move(name), median, per_eval.front(), per_eval.back(), reps};
}

int cmd_bench(const std::vector<BoundId>& ids, const GridSpec& grid, int reps,
              const OutputFormat& fmt, std::ostream& out) {
    if (reps < 1) throw UsageError("--reps must be >= 1");
    if (!(grid.start >= 0.0 && grid.end <= 1.0)) throw UsageError("bench grid must lie in [0, 1]");
    const std::vector<double> inputs = grid.nodes();

    std::vector<BenchRow> rows;
    for (BoundId id : ids) {
        rows.push_back(time_kernel(std::string(to_string(id)), inputs, reps,
                                   [id](double x) { return eval_bound(id, x); }));
    }
    rows.push_back(time_kernel("arcsin-ref", inputs, reps, [](double x) { return arcsin_ref(x); }));

    if (fmt.kind == FormatKind::Json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"name", r.name},
                           {"median_ns", r.median_ns},
                           {"min_ns", r.min_ns},
                           {"max_ns", r.max_ns},
                           {"reps", r.reps}});
        }
        emit_json(out, {{"grid", grid_json(grid)}, {"rows", arr}}, "bench");
    } else {
        CsvWriter csv(out, fmt.precision);
        csv.row("name", "median_ns", "min_ns", "max_ns", "reps");
        for (const auto& r : rows) csv.row(r.name, r.median_ns, r.min_ns, r.max_ns, r.reps);
    }
    return kExitOk;
}

void add_common(CLI::App* sub, CommonOptions& o, bool with_tol) {
    sub->add_option("--grid", o.grid, "start:end:count or a bare count over [0, 1]");
    sub->add_flag("--chebyshev", o.chebyshev, "Chebyshev-Lobatto spacing");
    if (with_tol) sub->add_option("--tol", o.tol, "absolute tolerance");
    sub->add_option("--format", o.format, "csv or json");
    sub->add_option("--precision", o.precision, "significant digits for CSV, 1..17");
}

}  // namespace

GridSpec parse_grid(std::string_view text, bool chebyshev) {
    const auto parts = split(text, ':');
    GridSpec g;
    g.spacing = chebyshev ? Spacing::Chebyshev : Spacing::Uniform;
    if (parts.size() == 1) {
        g.count = parse_count(parts[0]);
    } else if (parts.size() == 3) {
        g.start = parse_real(parts[0], "grid start");
        g.end = parse_real(parts[1], "grid end");
        g.count = parse_count(parts[2]);
    } else {
        throw UsageError("grid must be start:end:count or count, got '" + std::string(text) + "'");
    }
    if (!(g.start < g.end)) throw UsageError("grid start must be < end");
    return g;
}

std::string format_number(double v, int precision) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::general, precision);
    return std::string(buf, res.ptr);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Certified sqrt-rational bounds for arcsin", "asinbounds"};
    app.require_subcommand(1);

    CommonOptions table_o, verify_o, compare_o, min_o, best_o, bench_o;
    std::vector<std::string> table_bounds{"all"};
    std::vector<std::string> bench_bounds{"all"};
    std::vector<double> verify_alphas;
    std::string id_a, id_b;
    double min_alpha = 0.0;
    double tol_x = 1e-14;
    std::vector<double> best_xs;
    int reps = 5;

    auto* table = app.add_subcommand("table", "evaluate bounds on a grid");
    table->add_option("--bounds", table_bounds, "comma-separated bound ids or 'all'")
        ->delimiter(',');
    add_common(table, table_o, false);

    auto* verify = app.add_subcommand("verify", "check enclosures, monotonicity and endpoints");
    verify->add_option("--alpha", verify_alphas, "shift parameter(s)")->delimiter(',')->required();
    add_common(verify, verify_o, true);

    auto* compare = app.add_subcommand("compare", "pointwise dominance of two same-side bounds");
    compare->add_option("id_a", id_a)->required();
    compare->add_option("id_b", id_b)->required();
    add_common(compare, compare_o, true);

    auto* locate = app.add_subcommand("locate-min", "interior minimum of f_alpha");
    locate->add_option("--alpha", min_alpha)->required();
    locate->add_option("--tol-x", tol_x, "bisection width");
    add_common(locate, min_o, false);

    auto* best = app.add_subcommand("best-alpha", "pointwise optimal shift alpha*(x)");
    best->add_option("x", best_xs, "points in (0, 1)");
    add_common(best, best_o, false);

    auto* bench = app.add_subcommand("bench", "time bound kernels against arcsin_ref");
    bench->add_option("--bounds", bench_bounds, "comma-separated bound ids or 'all'")
        ->delimiter(',');
    bench->add_option("--reps", reps, "timed repetitions");
    add_common(bench, bench_o, false);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        (void)app.exit(e, out, err);
        return kExitUsage;
    }

    try {
        if (*table) {
            return cmd_table(parse_bounds(table_bounds), resolve_grid(table_o, "0:1:11"),
                             resolve_format(table_o, FormatKind::Csv), out);
        }
        if (*verify) {
            return cmd_verify(verify_alphas, resolve_grid(verify_o, "0:1:100001"), verify_o.tol,
                              resolve_format(verify_o, FormatKind::Json), out);
        }
        if (*compare) {
            return cmd_compare(parse_one_bound(id_a), parse_one_bound(id_b),
                               resolve_grid(compare_o, "1e-6:0.999999999:100000"), compare_o.tol,
                               resolve_format(compare_o, FormatKind::Json), out);
        }
        if (*locate) {
            return cmd_locate_min(min_alpha, tol_x, resolve_format(min_o, FormatKind::Json), out);
        }
        if (*best) {
            if (!best_o.grid.empty()) {
                const auto g = resolve_grid(best_o, "");
                const auto nodes = g.nodes();
                best_xs.insert(best_xs.end(), nodes.begin(), nodes.end());
            }
            return cmd_best_alpha(best_xs, resolve_format(best_o, FormatKind::Csv), out);
        }
        if (*bench) {
            return cmd_bench(parse_bounds(bench_bounds), resolve_grid(bench_o, "0:1:4096"), reps,
                             resolve_format(bench_o, FormatKind::Csv), out);
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace asinb::cli
