// The shipped corpus. Monotone radii are conservative bounds on strict
// monotonicity (bracket expansion never leaves them); domain radii bound
// where evaluation is numerically safe (tan stops short of its first pole).
// Windows are the default y-ranges for remainder measurements.

#include <serinv/corpus.hpp>

#include <serinv/expand.hpp>

namespace serinv {

const std::vector<CorpusEntry>& corpus_entries() {
    static const std::vector<CorpusEntry> entries = [] {
        auto make = [](std::string name, std::string text, bool analytic, double wmin,
                       double wmax, double mono, double domain) {
            CorpusEntry e;
            e.name = std::move(name);
            e.expression_text = std::move(text);
            e.expression = parse_expression(e.expression_text);
            e.analytic = analytic;
            e.window_min = wmin;
            e.window_max = wmax;
            e.monotone_radius = mono;
            e.domain_radius = domain;
            return e;
        };
        std::vector<CorpusEntry> v;
        v.push_back(make("identity", "x", true, 0.01, 0.1, 8.0, 8.0));
        v.push_back(make("quadratic", "x - x^2", true, 0.01, 0.2, 0.45, 8.0));
        v.push_back(make("lambert", "x*exp(x)", true, 0.01, 0.25, 0.95, 8.0));
        v.push_back(make("sine", "sin(x)", true, 0.01, 0.1, 1.55, 8.0));
        v.push_back(make("tangent", "tan(x)", true, 0.01, 0.1, 1.45, 1.5));
        v.push_back(make("scaled", "2*x + x^2", true, 0.01, 0.5, 0.95, 8.0));
        // f' = 1 + 2 exp(-1/x^2)/x^3 has a global minimum of about 0.18 near
        // |x| = sqrt(2/3) on the negative branch, so f is strictly increasing
        // on the whole line.
        v.push_back(make("flat-identity", "x + flatbump(x)", false, 0.28, 0.55, 8.0, 8.0));
        return v;
    }();
    return entries;
}

const CorpusEntry& corpus_lookup(const std::string& name) {
    for (const auto& e : corpus_entries())
        if (e.name == name)
            return e;
    std::string known;
    for (const auto& e : corpus_entries()) {
        if (!known.empty())
            known += ", ";
        known += e.name;
    }
    throw UnknownEntry("no corpus entry '" + name + "' (known: " + known + ")");
}

static SmoothFunction from_expression(std::string name, ExpressionNodePtr expr,
                                      bool analytic, bool attach_exact,
                                      double mono, double domain) {
    SmoothFunction f;
    f.name = std::move(name);
    f.eval = [expr](double x) { return eval_expression<double>(*expr, x); };
    f.eval_q = [expr](QReal x) { return eval_expression<QReal>(*expr, x); };
    if (attach_exact)
        f.exact_series = [expr](int n) { return series_expand<Rational>(*expr, n).series; };
    f.analytic = analytic;
    f.domain_radius = domain;
    f.monotone_radius = mono;
    return f;
}

SmoothFunction make_smooth_function(const CorpusEntry& entry) {
    return from_expression(entry.name, entry.expression, entry.analytic, entry.analytic,
                           entry.monotone_radius, entry.domain_radius);
}

SmoothFunction make_smooth_function(const std::string& name, ExpressionNodePtr expr) {
    bool analytic = true;
    bool exact_ok = true;
    try {
        analytic = series_expand<Rational>(*expr, 4).analytic;
        exact_ok = analytic;
    } catch (const NotExpandable& e) {
        exact_ok = false;
        if (e.float_representable) {
            analytic = series_expand<double>(*expr, 4).analytic;
        } else {
            throw;
        }
    }
    return from_expression(name, std::move(expr), analytic, exact_ok, 1.0, 8.0);
}

} // namespace serinv
