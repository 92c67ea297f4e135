#pragma once
// Jet recovery for black-box smooth functions and the jet-only inverse
// Taylor polynomial.
//
// extract_jet estimates f^(k)(0)/k! by central finite differences on a
// symmetric stencil, extrapolated in h^2 over a geometric step ladder; each
// coefficient reports its own accuracy estimate (last extrapolation
// correction plus a roundoff-cancellation model). If the function carries an
// exact series, that is returned instead with zero error bars.

#include <string>
#include <vector>

#include <serinv/series.hpp>
#include <serinv/smooth_function.hpp>

namespace serinv {

enum class JetSource { exact, finite_difference };

inline const char* to_string(JetSource s) {
    return s == JetSource::exact ? "exact" : "finite-difference";
}

struct Jet {
    FloatSeries series;
    std::vector<double> per_coeff_error;  // one per coefficient, >= 0
    JetSource source;
    // Exact coefficients, present when source == exact.
    RationalSeries exact;

    Jet(FloatSeries s, std::vector<double> err, JetSource src,
        RationalSeries ex = RationalSeries::zero(0))
        : series(std::move(s)), per_coeff_error(std::move(err)), source(src),
          exact(std::move(ex)) {}
};

Jet extract_jet(const SmoothFunction& fun, int order, double base_step = 0.125);

// Degree-order Taylor polynomial of the inverse, from the jet alone. The
// constant coefficient is clamped to 0 when it is indistinguishable from 0
// within its error bar; a linear coefficient not bounded away from 0 by more
// than 10x its error bar is rejected as ill-conditioned.
FloatSeries inverse_taylor(const Jet& jet, int order);

} // namespace serinv
