#pragma once
// Numeric inversion of a strictly monotone smooth function through 0:
// symmetric bracket expansion from a small seed (so the branch through the
// origin is the one found), then a hybrid of bisection and secant steps.
// Secant candidates are taken on alternating iterations and only when they
// fall strictly inside the current bracket; the interleaved bisections
// guarantee the bracket width shrinks geometrically. Robustness over speed:
// this is the ground truth the series results are judged against.

#include <algorithm>
#include <string>

#include <serinv/errors.hpp>
#include <serinv/quadreal.hpp>
#include <serinv/smooth_function.hpp>

namespace serinv {

struct BracketingInterval {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

namespace detail {

inline double eps_of(double) { return 2.220446049250313e-16; }
inline QReal eps_of(QReal) { return q_epsilon(); }

template <typename Real>
struct RawBracket {
    Real lo, hi, f_lo, f_hi;
};

// Expand [-s, s] by doubling until f(x) - y changes sign across it, capped
// at max_radius. An endpoint that hits y exactly is widened until the sign
// change is strict.
template <typename Real, typename F>
RawBracket<Real> bracket_core(F&& f, Real y, Real seed, Real max_radius) {
    Real s = std::min(seed, max_radius);
    for (int attempt = 0; attempt < 60; ++attempt) {
        Real lo = -s, hi = s;
        Real flo = f(lo), fhi = f(hi);
        if (!real_finite(flo) || !real_finite(fhi))
            throw NoBracket("function not finite at bracket endpoint");
        // Nudge an exact endpoint hit outward so the enclosure is strict.
        for (int widen = 0; widen < 64 && fhi == y && hi < max_radius; ++widen) {
            hi = std::min(Real(hi + real_abs(hi) * Real(1e-6) + Real(1e-300)), max_radius);
            fhi = f(hi);
        }
        for (int widen = 0; widen < 64 && flo == y && lo > -max_radius; ++widen) {
            lo = std::max(Real(lo - real_abs(lo) * Real(1e-6) - Real(1e-300)), -max_radius);
            flo = f(lo);
        }
        if (flo != y && fhi != y && ((flo - y) < 0) != ((fhi - y) < 0))
            return {lo, hi, flo, fhi};
        if (s >= max_radius)
            break;
        s = std::min(Real(2 * s), max_radius);
    }
    throw NoBracket("no sign change within radius after 60 doublings");
}

// Hybrid bisection/secant refinement. Terminates when both the residual at
// the returned point and the bracket width are within tolerance.
template <typename Real, typename F>
Real hybrid_invert_core(F&& f, Real y, RawBracket<Real> br, Real abs_tol, int max_iter,
                        RawBracket<Real>* final_bracket = nullptr) {
    Real lo = br.lo, hi = br.hi;
    Real rlo = br.f_lo - y, rhi = br.f_hi - y;
    Real res_tol = abs_tol * std::max(Real(1), real_abs(y));
    // Previous iterate for the secant model.
    Real prev_x = lo, prev_r = rlo;
    Real x = hi, r = rhi;
    if (real_abs(rlo) < real_abs(rhi)) {
        prev_x = hi; prev_r = rhi;
        x = lo; r = rlo;
    }
    for (int iter = 0; iter < max_iter; ++iter) {
        if (real_abs(r) <= res_tol && hi - lo <= abs_tol) {
            if (final_bracket) *final_bracket = {lo, hi, rlo + y, rhi + y};
            return x;
        }
        Real mid = lo + (hi - lo) / 2;
        Real cand = mid;
        if (iter % 2 == 0) {
            Real dr = r - prev_r;
            if (dr != 0) {
                Real sec = x - r * (x - prev_x) / dr;
                if (sec > lo && sec < hi && sec != x)
                    cand = sec;
            }
        }
        Real rc = f(cand) - y;
        prev_x = x; prev_r = r;
        x = cand; r = rc;
        if (rc == 0) {
            // Exact hit: collapse the bracket around it so the width
            // requirement is met on the next check.
            Real w = std::max(abs_tol / 4, real_abs(cand) * eps_of(cand));
            lo = std::max(lo, cand - w);
            hi = std::min(hi, cand + w);
            rlo = std::min(rlo, Real(0));
            rhi = std::max(rhi, Real(0));
            continue;
        }
        if ((rc < 0) == (rlo < 0)) {
            lo = cand; rlo = rc;
        } else {
            hi = cand; rhi = rc;
        }
    }
    throw MaxIterations("no convergence within iteration cap");
}

} // namespace detail

// Expand around 0 until f(x) - y changes sign; the first enclosure found is
// returned, which selects the inverse branch through the origin.
inline BracketingInterval bracket_inverse(const SmoothFunction& fun, double y,
                                          double seed_radius) {
    if (!(seed_radius > 0))
        throw NoBracket("seed radius must be positive");
    auto br = detail::bracket_core<double>(fun.eval, y, seed_radius,
                                           fun.monotone_radius);
    return {br.lo, br.hi, br.f_lo, br.f_hi};
}

inline double default_seed_radius(double y) {
    return std::max(std::abs(y), 1e-9);
}

// Ground-truth inverse: |fun(x) - y| <= abs_tol*max(1,|y|) and the final
// bracket width <= abs_tol. Deterministic for fixed inputs.
inline double numeric_inverse(const SmoothFunction& fun, double y,
                              double abs_tol = 1e-13) {
    auto br = detail::bracket_core<double>(fun.eval, y, default_seed_radius(y),
                                           fun.monotone_radius);
    return detail::hybrid_invert_core<double>(fun.eval, y, br, abs_tol, 200);
}

// Quad-precision variant used by the remainder estimator, where the
// interesting signal sits far below binary64 resolution. The iteration cap
// is doubled: from an O(1) bracket, ~100 bisections are needed just to pass
// a 1e-30 width requirement.
inline QReal numeric_inverse_q(const SmoothFunction& fun, QReal y, QReal abs_tol) {
    auto br = detail::bracket_core<QReal>(fun.eval_q, y,
                                          QReal(default_seed_radius(to_double(y))),
                                          QReal(fun.monotone_radius));
    return detail::hybrid_invert_core<QReal>(fun.eval_q, y, br, abs_tol, 400);
}

} // namespace serinv
