// series-invert: reversion of truncated power series and measurement of the
// truncation error of inverse Taylor polynomials, from the command line.
//
// Subcommands:
//   revert   compositional inverse by three algorithms, cross-checked
//   burmann  coefficients of outer(f^{-1}(y)) without computing the inverse
//   jet      Taylor coefficients at 0, exact or by finite differences
//   verify   jet -> inverse polynomial -> remainder decay over nested windows
//   bench    timing table for the three reversion algorithms (CSV)
//   corpus   list the built-in test functions
//
// Exit codes:
//   0 success
//   1 unexpected internal failure
//   2 input not revertible / jet too ill-conditioned to invert
//   3 bad input: parse, expansion, serialization, IO, usage, window errors
//   4 cross-check failure (algorithm disagreement or non-convergence)
//   5 numeric oracle failure (no bracket / iteration cap)
//
// Reports are JSON (default) or CSV via --format; timing lives in a trailing
// "timing" sub-object so snapshot tests can strip a single key.

#include <CLI11.hpp>

#include <serinv/corpus.hpp>
#include <serinv/errors.hpp>
#include <serinv/expand.hpp>
#include <serinv/expr.hpp>
#include <serinv/jet.hpp>
#include <serinv/quadreal.hpp>
#include <serinv/rational.hpp>
#include <serinv/remainder.hpp>
#include <serinv/reversion.hpp>
#include <serinv/root_finding.hpp>
#include <serinv/serialize.hpp>
#include <serinv/series.hpp>
#include <serinv/smooth_function.hpp>

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace {

using namespace serinv;

// Maximum relative coefficient difference tolerated between float-mode
// algorithms before the disagreement is treated as a bug.
constexpr double kFloatAgreementRel = 1e-10;

struct Opts {
    std::string positional;
    std::string function_text;
    std::string coeffs_path;
    std::string corpus_name;
    int order = -1;
    std::string mode;                  // "", "rational" or "float"
    std::vector<double> window_values; // flattened (a, b) pairs
    int samples = 32;
    std::string out_path;
    std::string format;                // "", "json" or "csv"
    std::string outer_text;            // burmann only
    bool measured = false;
};

// Wall-clock stage timer; stages land in the report's "timing" object.
class Timings {
  public:
    void lap(const std::string& name) {
        auto now = Clock::now();
        stages_.emplace_back(name, std::chrono::duration<double>(now - last_).count());
        last_ = now;
    }
    Json to_json() const {
        Json t = Json::object();
        for (const auto& [name, seconds] : stages_)
            t[name + "_seconds"] = seconds;
        t["total_seconds"] = std::chrono::duration<double>(Clock::now() - start_).count();
        return t;
    }

  private:
    using Clock = std::chrono::steady_clock;
    Clock::time_point start_ = Clock::now();
    Clock::time_point last_ = start_;
    std::vector<std::pair<std::string, double>> stages_;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void write_text(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream os(out_path, std::ios::binary);
    if (!os)
        throw SerializationError("cannot open output file '" + out_path + "'");
    os << text;
    os.flush();
    if (!os)
        throw SerializationError("failed writing output file '" + out_path + "'");
}

void emit_report(Json report, const Timings& timer, const std::string& out_path) {
    report["timing"] = timer.to_json();
    write_text(report.dump(2) + "\n", out_path);
}

// ---------------------------------------------------------------------------
// Input resolution

int source_count(const Opts& o) {
    return int(!o.function_text.empty()) + int(!o.coeffs_path.empty()) +
           int(!o.corpus_name.empty());
}

// Folds the positional expression into --function and enforces that exactly
// one source is set (or zero, when the command has a default).
void normalize_source(Opts& o, bool allow_none) {
    if (!o.positional.empty()) {
        if (!o.function_text.empty())
            throw DomainError("give the expression either positionally or via --function, not both");
        o.function_text = o.positional;
    }
    int n = source_count(o);
    if (n > 1)
        throw DomainError("exactly one of --function, --coeffs, --corpus may be given");
    if (n == 0 && !allow_none)
        throw DomainError("one of --function, --coeffs, --corpus is required");
}

struct ResolvedSeries {
    std::string kind;   // "function" | "coeffs" | "corpus"
    std::string source; // expression text, file path, or corpus name
    std::string mode;   // "rational" | "float"
    AnySeries series;
};

AnySeries fit_order(AnySeries s, int order) {
    return std::visit(
        [&](auto&& ser) -> AnySeries {
            if (ser.order() > order)
                return truncated(ser, order);
            if (ser.order() < order)
                return extended(ser, order);
            return std::move(ser);
        },
        std::move(s));
}

// Expands an expression at the requested order, preferring the exact ring:
// rational unless the expression needs binary64 constants, in which case it
// falls back (or obeys an explicit --mode).
ResolvedSeries expand_source(const std::string& kind, const std::string& source,
                             const std::string& text, int order, const std::string& mode) {
    auto expr = parse_expression(text);
    if (mode == "float")
        return {kind, source, "float", series_expand<double>(*expr, order).series};
    try {
        return {kind, source, "rational", series_expand<Rational>(*expr, order).series};
    } catch (const NotExpandable& e) {
        if (mode.empty() && e.float_representable)
            return {kind, source, "float", series_expand<double>(*expr, order).series};
        throw;
    }
}

ResolvedSeries resolve_series(const Opts& o) {
    if (!o.coeffs_path.empty()) {
        AnySeries s = series_from_file(o.coeffs_path);
        bool is_rational = std::holds_alternative<RationalSeries>(s);
        if (o.mode == "rational" && !is_rational)
            throw SerializationError("coefficient file '" + o.coeffs_path +
                                     "' holds binary64 values; they cannot be promoted to rational mode");
        if (o.mode == "float" && is_rational)
            s = AnySeries(to_float_series(std::get<RationalSeries>(s)));
        int order = o.order >= 0 ? o.order : std::visit([](const auto& ser) { return ser.order(); }, s);
        s = fit_order(std::move(s), order);
        std::string mode = std::holds_alternative<RationalSeries>(s) ? "rational" : "float";
        return {"coeffs", o.coeffs_path, mode, std::move(s)};
    }
    if (o.order < 0)
        throw DomainError("--order is required unless the input is a coefficient file");
    if (!o.corpus_name.empty()) {
        const CorpusEntry& entry = corpus_lookup(o.corpus_name);
        return expand_source("corpus", entry.name, entry.expression_text, o.order, o.mode);
    }
    return expand_source("function", o.function_text, o.function_text, o.order, o.mode);
}

Json input_json(const ResolvedSeries& in, int order) {
    Json j = Json::object();
    j["kind"] = in.kind;
    j["source"] = in.source;
    j["order"] = order;
    j["mode"] = in.mode;
    j["series"] = series_to_json(in.series);
    return j;
}

struct ResolvedFunction {
    std::string kind;
    std::string source;
    SmoothFunction fun;
    std::optional<Window> default_window;
};

// A coefficient file denotes the polynomial with those Taylor coefficients.
SmoothFunction function_from_series(const AnySeries& s, const std::string& name) {
    RationalSeries exact = std::visit(
        [](const auto& ser) {
            std::vector<Rational> c;
            for (int k = 0; k <= ser.order(); ++k)
                c.emplace_back(ser[k]); // binary64 values are dyadic rationals
            return RationalSeries(std::move(c));
        },
        s);
    std::vector<double> cd;
    std::vector<QReal> cq;
    for (int k = 0; k <= exact.order(); ++k) {
        cd.push_back(to_double(exact[k]));
        cq.push_back(q_from_rational(exact[k]));
    }
    SmoothFunction f;
    f.name = name;
    f.eval = [cd](double x) {
        double acc = 0.0;
        for (std::size_t i = cd.size(); i-- > 0;)
            acc = acc * x + cd[i];
        return acc;
    };
    f.eval_q = [cq](QReal x) {
        QReal acc = 0;
        for (std::size_t i = cq.size(); i-- > 0;)
            acc = acc * x + cq[i];
        return acc;
    };
    f.exact_series = [exact](int n) {
        return n <= exact.order() ? truncated(exact, n) : extended(exact, n);
    };
    f.analytic = true;
    f.domain_radius = 8.0;
    f.monotone_radius = 8.0;
    return f;
}

ResolvedFunction resolve_function(const Opts& o) {
    ResolvedFunction r;
    if (!o.corpus_name.empty()) {
        const CorpusEntry& entry = corpus_lookup(o.corpus_name);
        r = {"corpus", entry.name, make_smooth_function(entry),
             Window{entry.window_min, entry.window_max}};
    } else if (!o.coeffs_path.empty()) {
        AnySeries s = series_from_file(o.coeffs_path);
        r = {"coeffs", o.coeffs_path, function_from_series(s, o.coeffs_path), std::nullopt};
    } else {
        auto expr = parse_expression(o.function_text);
        r = {"function", o.function_text, make_smooth_function(o.function_text, expr),
             std::nullopt};
    }
    if (o.measured)
        r.fun = measured_only(r.fun);
    return r;
}

// ---------------------------------------------------------------------------
// Cross-checks

double check_agreement(const RationalSeries& a, const RationalSeries& b, const char* a_name,
                       const char* b_name) {
    if (!equal(a, b))
        throw AlgorithmDisagreement(std::string(a_name) + " and " + b_name +
                                    " disagree in rational mode");
    return 0.0;
}

double max_rel_diff(const FloatSeries& a, const FloatSeries& b) {
    double worst = 0.0;
    for (int k = 0; k <= a.order(); ++k)
        worst = std::max(worst, std::abs(a[k] - b[k]) / std::max(1.0, std::abs(b[k])));
    return worst;
}

double check_agreement(const FloatSeries& a, const FloatSeries& b, const char* a_name,
                       const char* b_name) {
    double worst = max_rel_diff(a, b);
    if (worst > kFloatAgreementRel)
        throw AlgorithmDisagreement(std::string(a_name) + " and " + b_name +
                                    " differ by relative " + format_double(worst) +
                                    " (tolerance " + format_double(kFloatAgreementRel) + ")");
    return worst;
}

// ---------------------------------------------------------------------------
// revert

int run_revert(Opts& o) {
    normalize_source(o, false);
    Timings timer;
    ResolvedSeries in = resolve_series(o);
    int order = std::visit([](const auto& s) { return s.order(); }, in.series);
    timer.lap("expand");

    Json report = Json::object();
    report["command"] = "revert";
    report["input"] = input_json(in, order);

    std::visit(
        [&](const auto& f) {
            auto lag = lagrange_revert(f, order);
            timer.lap("lagrange");
            auto nwt = newton_revert(f, order);
            timer.lap("newton");
            auto tri = triangular_revert(f, order);
            timer.lap("triangular");

            double worst = check_agreement(lag.series, tri.series, "lagrange", "triangular");
            worst = std::max(worst, check_agreement(nwt.series, tri.series, "newton", "triangular"));

            report["inverse"] = series_to_json(lag.series);
            Json agreement = Json::object();
            agreement["algorithms"] = Json::array({"lagrange", "newton", "triangular"});
            agreement["exact"] = in.mode == "rational";
            agreement["max_rel_diff"] = worst;
            report["agreement"] = agreement;

            if ((o.format.empty() ? "json" : o.format) == "csv") {
                write_text(series_to_csv(AnySeries(lag.series)), o.out_path);
                report = Json(); // consumed
            }
        },
        in.series);

    if (!report.is_null())
        emit_report(std::move(report), timer, o.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// burmann

int run_burmann(Opts& o) {
    normalize_source(o, false);
    Timings timer;
    ResolvedSeries in = resolve_series(o);
    int order = std::visit([](const auto& s) { return s.order(); }, in.series);

    auto outer_expr = parse_expression(o.outer_text);
    Json report = Json::object();
    report["command"] = "burmann";
    report["input"] = input_json(in, order);
    report["outer"] = o.outer_text;
    timer.lap("expand");

    std::visit(
        [&](const auto& f) {
            using T = std::decay_t<decltype(f[0])>;
            auto h = series_expand<T>(*outer_expr, order).series;
            auto direct = lagrange_burmann(h, f, order);
            timer.lap("burmann");
            // Independent route: compose the outer series with the inverse.
            auto g = lagrange_revert(f, order);
            auto composed = compose(h, g.series);
            timer.lap("compose");
            double worst = check_agreement(direct, composed, "burmann", "compose-of-inverse");

            report["result"] = series_to_json(direct);
            Json agreement = Json::object();
            agreement["algorithms"] = Json::array({"burmann", "compose-of-inverse"});
            agreement["exact"] = in.mode == "rational";
            agreement["max_rel_diff"] = worst;
            report["agreement"] = agreement;

            if ((o.format.empty() ? "json" : o.format) == "csv") {
                write_text(series_to_csv(AnySeries(direct)), o.out_path);
                report = Json();
            }
        },
        in.series);

    if (!report.is_null())
        emit_report(std::move(report), timer, o.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// jet

std::string jet_csv(const Jet& jet) {
    std::string out = "k,coeff,error\n";
    for (int k = 0; k <= jet.series.order(); ++k)
        out += std::to_string(k) + "," + format_double(jet.series[k]) + "," +
               format_double(jet.per_coeff_error[static_cast<std::size_t>(k)]) + "\n";
    return out;
}

int run_jet(Opts& o) {
    normalize_source(o, false);
    if (o.order < 0)
        throw DomainError("--order is required");
    Timings timer;
    ResolvedFunction r = resolve_function(o);
    Jet jet = extract_jet(r.fun, o.order);
    timer.lap("jet");

    if ((o.format.empty() ? "json" : o.format) == "csv") {
        write_text(jet_csv(jet), o.out_path);
        return 0;
    }
    Json report = Json::object();
    report["command"] = "jet";
    Json input = Json::object();
    input["kind"] = r.kind;
    input["source"] = r.source;
    input["order"] = o.order;
    input["measured"] = o.measured;
    report["input"] = input;
    report["jet"] = jet_to_json(jet);
    emit_report(std::move(report), timer, o.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// verify

std::vector<Window> resolve_windows(const Opts& o, const ResolvedFunction& r) {
    std::vector<Window> windows;
    for (std::size_t i = 0; i + 1 < o.window_values.size(); i += 2)
        windows.push_back(Window{o.window_values[i], o.window_values[i + 1]});
    if (windows.empty()) {
        if (!r.default_window)
            throw DomainError("verify needs --window A B (repeat for nested windows) "
                              "unless a corpus entry supplies a default");
        windows.push_back(*r.default_window);
    }
    if (windows.size() == 1) {
        // Split one window at its geometric midpoint into a nested pair, so
        // that slope growth across scales is observable.
        Window w = windows[0];
        if (!(w.y_min > 0.0) || !(w.y_max > w.y_min))
            throw DomainError("window must satisfy 0 < A < B");
        double mid = std::sqrt(w.y_min * w.y_max);
        windows = {Window{mid, w.y_max}, Window{w.y_min, mid}};
    }
    return windows;
}

std::string verify_csv(const std::vector<RemainderReport>& reports) {
    std::string out = "window_index,y,remainder,usable\n";
    for (std::size_t i = 0; i < reports.size(); ++i)
        for (const auto& p : reports[i].points)
            out += std::to_string(i) + "," + format_double(p.y) + "," +
                   format_double(p.remainder) + "," + (p.usable ? "1" : "0") + "\n";
    return out;
}

int run_verify(Opts& o) {
    normalize_source(o, false);
    if (o.order < 0)
        throw DomainError("--order is required");
    Timings timer;
    ResolvedFunction r = resolve_function(o);
    std::vector<Window> windows = resolve_windows(o, r);

    Jet jet = extract_jet(r.fun, o.order);
    timer.lap("jet");
    FloatSeries poly = inverse_taylor(jet, o.order);
    timer.lap("inverse");

    std::vector<RemainderReport> reports;
    for (const Window& w : windows)
        reports.push_back(estimate_remainder_order(r.fun, poly, w, o.samples));
    timer.lap("measure");
    DecayVerdict verdict = classify_decay(reports);
    std::string classification = decay_verdict_string(verdict, o.order);

    if ((o.format.empty() ? "json" : o.format) == "csv") {
        write_text(verify_csv(reports), o.out_path);
        return 0;
    }
    Json report = Json::object();
    report["command"] = "verify";
    Json input = Json::object();
    input["kind"] = r.kind;
    input["source"] = r.source;
    input["order"] = o.order;
    input["samples"] = o.samples;
    input["measured"] = o.measured;
    report["input"] = input;
    report["jet"] = jet_to_json(jet);
    report["inverse_poly"] = series_to_json(poly);
    Json rj = Json::array();
    for (const auto& rep : reports)
        rj.push_back(report_to_json(rep));
    report["reports"] = rj;
    report["classification"] = classification;
    emit_report(std::move(report), timer, o.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// bench

struct BenchRow {
    double seconds = 0.0;
    double diff = 0.0;
};

int run_bench(Opts& o) {
    normalize_source(o, true);
    if (source_count(o) == 0)
        o.corpus_name = "quadratic";
    Timings timer;

    const std::vector<int> orders = {32, 64, 128, 256};
    const std::vector<std::string> algorithms = {"lagrange", "newton", "triangular"};
    const std::vector<std::string> modes = {"rational", "float"};
    // rows[algorithm][mode][order]
    std::map<std::string, std::map<std::string, std::map<int, BenchRow>>> rows;

    std::string source_kind;
    std::string source_name;
    for (const std::string& mode : modes) {
        for (int order : orders) {
            Opts probe = o;
            probe.order = order;
            probe.mode = mode;
            ResolvedSeries in = resolve_series(probe);
            source_kind = in.kind;
            source_name = in.source;
            std::visit(
                [&](const auto& f) {
                    auto t0 = std::chrono::steady_clock::now();
                    auto tri = triangular_revert(f, order);
                    rows["triangular"][mode][order].seconds = seconds_since(t0);

                    t0 = std::chrono::steady_clock::now();
                    auto lag = lagrange_revert(f, order);
                    rows["lagrange"][mode][order].seconds = seconds_since(t0);

                    t0 = std::chrono::steady_clock::now();
                    auto nwt = newton_revert(f, order);
                    rows["newton"][mode][order].seconds = seconds_since(t0);

                    rows["lagrange"][mode][order].diff =
                        check_agreement(lag.series, tri.series, "lagrange", "triangular");
                    rows["newton"][mode][order].diff =
                        check_agreement(nwt.series, tri.series, "newton", "triangular");
                    rows["triangular"][mode][order].diff = 0.0;
                },
                in.series);
        }
    }
    timer.lap("bench");

    if ((o.format.empty() ? "csv" : o.format) == "csv") {
        std::string out = "algorithm,mode,order,wall_time,max_coeff_diff_vs_triangular\n";
        for (const auto& algo : algorithms)
            for (const auto& mode : modes)
                for (int order : orders) {
                    const BenchRow& row = rows[algo][mode][order];
                    out += algo + "," + mode + "," + std::to_string(order) + "," +
                           format_double(row.seconds) + "," + format_double(row.diff) + "\n";
                }
        write_text(out, o.out_path);
        return 0;
    }
    Json report = Json::object();
    report["command"] = "bench";
    Json input = Json::object();
    input["kind"] = source_kind;
    input["source"] = source_name;
    report["input"] = input;
    Json arr = Json::array();
    for (const auto& algo : algorithms)
        for (const auto& mode : modes)
            for (int order : orders) {
                const BenchRow& row = rows[algo][mode][order];
                Json j = Json::object();
                j["algorithm"] = algo;
                j["mode"] = mode;
                j["order"] = order;
                j["wall_time"] = row.seconds;
                j["max_coeff_diff_vs_triangular"] = row.diff;
                arr.push_back(j);
            }
    report["rows"] = arr;
    emit_report(std::move(report), timer, o.out_path);
    return 0;
}

// ---------------------------------------------------------------------------
// corpus

int run_corpus(Opts& o) {
    std::vector<CorpusEntry> entries;
    if (!o.corpus_name.empty())
        entries.push_back(corpus_lookup(o.corpus_name));
    else
        entries = corpus_entries();

    if ((o.format.empty() ? "json" : o.format) == "csv") {
        std::string out = "name,expression,analytic,window_min,window_max,monotone_radius,domain_radius\n";
        for (const auto& e : entries)
            out += e.name + ",\"" + e.expression_text + "\"," + (e.analytic ? "1" : "0") + "," +
                   format_double(e.window_min) + "," + format_double(e.window_max) + "," +
                   format_double(e.monotone_radius) + "," + format_double(e.domain_radius) + "\n";
        write_text(out, o.out_path);
        return 0;
    }
    Json report = Json::object();
    report["command"] = "corpus";
    Json arr = Json::array();
    for (const auto& e : entries) {
        Json j = Json::object();
        j["name"] = e.name;
        j["expression"] = e.expression_text;
        j["analytic"] = e.analytic;
        j["window"] = Json::array({e.window_min, e.window_max});
        j["monotone_radius"] = e.monotone_radius;
        j["domain_radius"] = e.domain_radius;
        arr.push_back(j);
    }
    report["entries"] = arr;
    write_text(report.dump(2) + "\n", o.out_path);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    Opts o;
    CLI::App app{"Truncated power-series reversion and inverse-remainder measurement"};
    app.require_subcommand(1);

    auto add_source = [&](CLI::App* cmd, bool positional) {
        if (positional)
            cmd->add_option("expression", o.positional, "Function as an expression in x");
        cmd->add_option("--function", o.function_text, "Function as an expression in x");
        cmd->add_option("--coeffs", o.coeffs_path, "JSON file with Taylor coefficients");
        cmd->add_option("--corpus", o.corpus_name, "Built-in test function by name");
    };
    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--order", o.order, "Truncation order N");
        cmd->add_option("--mode", o.mode, "Coefficient ring (default: rational when exact)")
            ->check(CLI::IsMember({"rational", "float"}));
        cmd->add_option("--out", o.out_path, "Output path (default: stdout)");
        cmd->add_option("--format", o.format, "Output format")
            ->check(CLI::IsMember({"json", "csv"}));
    };

    CLI::App* revert = app.add_subcommand("revert", "Compositional inverse series, cross-checked");
    add_source(revert, true);
    add_common(revert);

    CLI::App* burmann = app.add_subcommand("burmann", "Series of outer(inverse(y)) without the inverse");
    add_source(burmann, true);
    add_common(burmann);
    burmann->add_option("--outer", o.outer_text, "Outer function as an expression in x")->required();

    CLI::App* jet = app.add_subcommand("jet", "Taylor coefficients at 0 with error bars");
    add_source(jet, true);
    add_common(jet);
    jet->add_flag("--measured", o.measured, "Force the finite-difference path");

    CLI::App* verify = app.add_subcommand("verify", "Measure inverse-polynomial remainder decay");
    add_source(verify, true);
    add_common(verify);
    verify->add_option("--window", o.window_values, "Remainder window [A, B] (repeatable, nested)")
        ->type_size(2);
    verify->add_option("--samples", o.samples, "Sample count per window");
    verify->add_flag("--measured", o.measured, "Force the finite-difference path");

    CLI::App* bench = app.add_subcommand("bench", "Time the three reversion algorithms");
    add_source(bench, false);
    bench->add_option("--out", o.out_path, "Output path (default: stdout)");
    bench->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    CLI::App* corpus = app.add_subcommand("corpus", "List the built-in test functions");
    corpus->add_option("--corpus", o.corpus_name, "Show a single entry");
    corpus->add_option("--out", o.out_path, "Output path (default: stdout)");
    corpus->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 3;
    }

    try {
        if (revert->parsed())
            return run_revert(o);
        if (burmann->parsed())
            return run_burmann(o);
        if (jet->parsed())
            return run_jet(o);
        if (verify->parsed())
            return run_verify(o);
        if (bench->parsed())
            return run_bench(o);
        return run_corpus(o);
    } catch (const NotRevertible& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 2;
    } catch (const IllConditionedJet& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 2;
    } catch (const AlgorithmDisagreement& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 4;
    } catch (const NonConvergence& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 4;
    } catch (const OracleError& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 5;
    } catch (const SyntaxError& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const UnknownFunction& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const NotExpandable& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const UnknownEntry& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const SerializationError& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const WindowsNotNested& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const DomainError& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const InsufficientOrder& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const DomainTooSmall& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const StepUnderflow& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "series-invert: " << e.what() << "\n";
        return 1;
    }
}
