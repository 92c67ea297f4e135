#pragma once
// A black-box C-infinity function f with f(0) = 0, as consumed by jet
// extraction and the numeric inverse oracle. Both a binary64 and a
// quad-precision evaluator are carried so the oracle can be run at either
// precision; exact_series (when present) supplies the true Taylor
// coefficients and makes finite differences unnecessary.

#include <functional>
#include <string>
#include <utility>

#include <serinv/quadreal.hpp>
#include <serinv/series.hpp>

namespace serinv {

struct SmoothFunction {
    std::string name;
    std::function<double(double)> eval;
    std::function<QReal(QReal)> eval_q;
    // Taylor coefficients at 0 up to a requested order; empty if unknown or
    // the function is not analytic at 0.
    std::function<RationalSeries(int)> exact_series;
    bool analytic = true;
    // Radius within which eval may be called.
    double domain_radius = 1.0;
    // Radius within which f is strictly monotone; caps bracket expansion.
    double monotone_radius = 1.0;
};

// Same function with the exact series forgotten, so that jet extraction is
// forced through the finite-difference path.
inline SmoothFunction measured_only(SmoothFunction f) {
    f.exact_series = nullptr;
    return f;
}

} // namespace serinv
