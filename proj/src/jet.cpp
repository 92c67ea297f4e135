// Jet recovery by central finite differences.
//
// For each derivative order k the k-th central difference is evaluated on a
// geometric ladder of steps h_j = h0 / ratio^j and extrapolated to h -> 0 by
// a Neville tableau in h^2 (even error expansion of symmetric stencils). The
// reported value is the tableau entry with the smallest combined error --
// the larger of its two parent corrections plus a roundoff-cancellation
// model eps * 2^k * max|f| / (h^k k!). Selecting per-entry instead of
// always taking the deepest column keeps coarse-step pollution (from terms
// the h^2 model does not capture, e.g. essentially-flat perturbations) out
// of the result: those entries report large corrections and lose.
//
// The base step is scaled per order as base_step * sqrt(k) to balance
// truncation against cancellation, which grows as h^-k.

#include <serinv/jet.hpp>

#include <cmath>
#include <string>

#include <serinv/errors.hpp>
#include <serinv/reversion.hpp>

namespace serinv {

namespace {

constexpr double kLadderRatio = 1.6;
constexpr int kLadderLevels = 7;
constexpr double kMinStep = 9.094947017729282e-13;  // 2^-40
constexpr double kEps = 2.220446049250313e-16;

struct Estimate {
    double value;
    double error;
};

// Central difference of order k at step h, divided by h^k k! so the raw
// value estimates the Taylor coefficient directly.
Estimate raw_difference(const SmoothFunction& fun, int k, double h, double kfact) {
    double binom = 1.0;  // C(k, 0)
    double acc = 0.0;
    double fmax = 0.0;
    for (int i = 0; i <= k; ++i) {
        double x = (0.5 * k - i) * h;
        double fx = fun.eval(x);
        fmax = std::max(fmax, std::abs(fx));
        acc += (i % 2 == 0 ? binom : -binom) * fx;
        binom = binom * (k - i) / (i + 1);
    }
    double scale = std::pow(h, k) * kfact;
    return {acc / scale, kEps * std::ldexp(fmax, k) / scale};
}

Estimate extrapolate_coefficient(const SmoothFunction& fun, int k, double base_step) {
    double h0 = base_step * std::sqrt(static_cast<double>(k));
    double kfact = 1.0;
    for (int i = 2; i <= k; ++i)
        kfact *= i;

    // Drop coarse levels whose stencil leaves the evaluation domain.
    int first = 0;
    while (first < kLadderLevels && 0.5 * k * h0 * std::pow(kLadderRatio, -first) >
                                        fun.domain_radius)
        ++first;
    int levels = kLadderLevels - first;
    if (levels < 3)
        throw DomainTooSmall("stencil for coefficient " + std::to_string(k) +
                             " does not fit in the evaluation domain");
    if (h0 * std::pow(kLadderRatio, -(kLadderLevels - 1)) < kMinStep)
        throw StepUnderflow("finite-difference step fell below 2^-40");

    std::vector<double> tableau_prev(static_cast<std::size_t>(levels));
    std::vector<double> roundoff(static_cast<std::size_t>(levels));
    for (int j = 0; j < levels; ++j) {
        double h = h0 * std::pow(kLadderRatio, -(first + j));
        auto est = raw_difference(fun, k, h, kfact);
        tableau_prev[static_cast<std::size_t>(j)] = est.value;
        roundoff[static_cast<std::size_t>(j)] = est.error;
    }

    // Column 0 candidates: raw values, judged by their neighbor difference.
    Estimate best{tableau_prev[0], std::abs(tableau_prev[0]) + roundoff[0]};
    for (int j = 1; j < levels; ++j) {
        double err = std::abs(tableau_prev[static_cast<std::size_t>(j)] -
                              tableau_prev[static_cast<std::size_t>(j - 1)]) +
                     roundoff[static_cast<std::size_t>(j)];
        if (err < best.error)
            best = {tableau_prev[static_cast<std::size_t>(j)], err};
    }

    std::vector<double> tableau(static_cast<std::size_t>(levels));
    for (int c = 1; c < levels; ++c) {
        double factor = std::pow(kLadderRatio, 2.0 * c) - 1.0;
        for (int j = c; j < levels; ++j) {
            double fine = tableau_prev[static_cast<std::size_t>(j)];
            double coarse = tableau_prev[static_cast<std::size_t>(j - 1)];
            double value = fine + (fine - coarse) / factor;
            double err = std::max(std::abs(value - fine), std::abs(value - coarse)) +
                         roundoff[static_cast<std::size_t>(j)];
            tableau[static_cast<std::size_t>(j)] = value;
            if (err < best.error)
                best = {value, err};
        }
        std::swap(tableau, tableau_prev);
    }
    return best;
}

} // namespace

Jet extract_jet(const SmoothFunction& fun, int order, double base_step) {
    if (order < 1)
        throw InsufficientOrder("jet order must be >= 1");
    if (!(base_step > 0))
        throw StepUnderflow("base step must be positive");
    if (fun.domain_radius < (order + 2) * base_step)
        throw DomainTooSmall("evaluation domain smaller than (order + 2) * base_step");

    if (fun.exact_series) {
        RationalSeries exact = fun.exact_series(order);
        FloatSeries floats = to_float_series(exact);
        std::vector<double> err(static_cast<std::size_t>(order) + 1, 0.0);
        return Jet(std::move(floats), std::move(err), JetSource::exact, std::move(exact));
    }

    std::vector<double> coeffs(static_cast<std::size_t>(order) + 1);
    std::vector<double> err(static_cast<std::size_t>(order) + 1);
    double f0 = fun.eval(0.0);
    coeffs[0] = f0;
    err[0] = kEps * (1.0 + std::abs(f0));
    for (int k = 1; k <= order; ++k) {
        auto est = extrapolate_coefficient(fun, k, base_step);
        coeffs[static_cast<std::size_t>(k)] = est.value;
        err[static_cast<std::size_t>(k)] = est.error;
    }
    return Jet(FloatSeries(std::move(coeffs)), std::move(err), JetSource::finite_difference);
}

FloatSeries inverse_taylor(const Jet& jet, int order) {
    if (order < 1)
        throw InsufficientOrder("inverse polynomial order must be >= 1");
    if (jet.series.order() < order)
        throw InsufficientOrder("jet order " + std::to_string(jet.series.order()) +
                                " is below requested order " + std::to_string(order));

    std::vector<double> c = jet.series.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1);
    double err0 = jet.per_coeff_error[0];
    if (std::abs(c[0]) > std::max(err0, 1e-13))
        throw NotRevertible("constant term is distinguishable from 0");
    c[0] = 0.0;        // indistinguishable from 0 within its error bar
    double err1 = jet.per_coeff_error.size() > 1 ? jet.per_coeff_error[1] : 0.0;
    if (c[1] == 0.0)
        throw NotRevertible("zero linear coefficient");
    if (std::abs(c[1]) <= 10.0 * err1)
        throw IllConditionedJet("linear coefficient not bounded away from 0 by 10x "
                                "its error bar; shrink the finite-difference step");

    FloatSeries f(std::move(c));
    return lagrange_revert(f, order).series;
}

} // namespace serinv
