#pragma once
// Measurement of the inversion remainder |f^{-1}(y) - P_N(y)| as y -> 0 and
// classification of its decay.
//
// The remainder of interest sits orders of magnitude below binary64
// resolution in the analytic small-window scenarios, so the oracle and the
// subtraction both run in quad precision internally; the public interface
// stays in binary64.

#include <string>
#include <vector>

#include <serinv/series.hpp>
#include <serinv/smooth_function.hpp>

namespace serinv {

struct Window {
    double y_min;
    double y_max;
};

// All decision constants of the estimator in one place.
struct RemainderConfig {
    // Absolute oracle tolerance and noise floor of the quad-precision
    // measurement pipeline.
    double oracle_abs_tol = 1e-30;
    double noise_floor = 1e-28;
    // Slack below N+1 still accepted as "consistent with order N+1".
    double slope_slack = 0.3;
    // Super-polynomial requires the inner half-window slope to exceed the
    // outer one by at least this much and to exceed poly_order + 2.
    double nested_increase = 1.0;
    double super_margin = 2.0;
    // A side whose usable (above-floor) point count falls below
    // max(4, samples/4) marks the report as noise-floored.
    int min_usable_points = 4;
    // classify_decay: slopes within this band across windows count as
    // stable (polynomial); growth by at least classify_increase per window
    // shrink counts as super-polynomial.
    double classify_stable_band = 0.5;
    double classify_increase = 1.0;
};

struct RemainderPoint {
    double y;         // signed sample location
    double remainder; // |f^{-1}(y) - P(y)|, quad-measured
    bool usable;      // above the noise floor
};

struct RemainderReport {
    int poly_order;
    Window window;
    int sample_count;
    double slope;
    double slope_stderr;
    bool noise_floor_hit;
    // "consistent-with-order-<N+1>", "super-polynomial", or "inconclusive".
    std::string verdict;
    // Fitted half-window slopes backing a super-polynomial verdict
    // (outer half first).
    double outer_half_slope;
    double inner_half_slope;
    // Raw samples from both sides, for external plotting.
    std::vector<RemainderPoint> points;
};

RemainderReport estimate_remainder_order(const SmoothFunction& fun, const FloatSeries& poly,
                                         Window window, int samples,
                                         const RemainderConfig& config = {});

enum class DecayVerdict { polynomial, super_polynomial, inconclusive };

std::string decay_verdict_string(DecayVerdict v, int poly_order);

// Consolidates reports over strictly nested windows (each window's endpoints
// strictly below the previous one's) into one verdict: stable slopes mean
// polynomial order N+1; slopes growing by >= classify_increase per shrink
// mean super-polynomial decay.
DecayVerdict classify_decay(const std::vector<RemainderReport>& reports,
                            const RemainderConfig& config = {});

} // namespace serinv
