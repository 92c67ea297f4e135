#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "serinv/series.hpp"

// Compositional inversion of f = f1*x + f2*x^2 + ... (f1 != 0): find g with
// f(g(y)) = y. Three independent routes are kept on purpose -- they
// cross-check each other in the tests and in the CLI:
//
//   lagrange_revert    b_n = (1/n) [x^(n-1)] (x/f(x))^n
//   newton_revert      g <- g - (f(g) - x)/f'(g), trusted order doubles
//   triangular_revert  forward substitution on [x^n](g(f)) = delta_{n,1}
//
// plus the generalized coefficient extraction
//
//   lagrange_burmann   [y^n] H(g(y)) = (1/n) [x^(n-1)] (H'(x) (x/f(x))^n).

namespace serinv {

enum class InversionMethod { lagrange, newton, triangular };

inline const char* to_string(InversionMethod m) {
    switch (m) {
        case InversionMethod::lagrange: return "lagrange";
        case InversionMethod::newton: return "newton";
        default: return "triangular";
    }
}

template <typename T>
struct InversionResult {
    TruncatedSeries<T> series;
    InversionMethod method;
    int input_order;
};

template <typename T>
void require_revertible(const TruncatedSeries<T>& f) {
    if (f.order() < 1 || !ring_of<T>::is_zero(f[0]) || ring_of<T>::is_zero(f[1]))
        throw NotRevertible("series must be f1*x + f2*x^2 + ... with f1 != 0");
}

namespace detail {

template <typename T>
void check_revert_args(const TruncatedSeries<T>& f, int target_order) {
    if (target_order < 1)
        throw InsufficientOrder("reversion target order must be >= 1");
    if (f.order() < target_order)
        throw InsufficientOrder("input order " + std::to_string(f.order()) +
                                " is below target order " + std::to_string(target_order));
    require_revertible(f);
}

// x/f as a unit series: strip one factor of x, then invert.
template <typename T>
TruncatedSeries<T> x_over_f(const TruncatedSeries<T>& f, int order) {
    auto denom = shift_down(truncated(f, order + 1));
    return div(TruncatedSeries<T>::one(order), denom);
}

} // namespace detail

// Production path: u^n is carried incrementally (one multiply per n).
template <typename T>
InversionResult<T> lagrange_revert(const TruncatedSeries<T>& f, int target_order) {
    detail::check_revert_args(f, target_order);
    int n = target_order;
    auto u = detail::x_over_f(f, n - 1);
    std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
    auto p = u;
    for (int k = 1; k <= n; ++k) {
        b[k] = p[k - 1] / T(k);
        if (k < n)
            p = mul(p, u, n - 1);
    }
    return {TruncatedSeries<T>(std::move(b)), InversionMethod::lagrange, f.order()};
}

// Reference path: each power is recomputed from scratch. Slower, kept as the
// cross-check target for the incremental path.
template <typename T>
InversionResult<T> lagrange_revert_reference(const TruncatedSeries<T>& f, int target_order) {
    detail::check_revert_args(f, target_order);
    int n = target_order;
    auto u = detail::x_over_f(f, n - 1);
    std::vector<T> b(static_cast<std::size_t>(n) + 1, T(0));
    for (int k = 1; k <= n; ++k)
        b[k] = pow_int(u, k)[k - 1] / T(k);
    return {TruncatedSeries<T>(std::move(b)), InversionMethod::lagrange, f.order()};
}

namespace detail {

// Largest index <= limit with a residual coefficient distinguishable from 0.
// Rational mode is exact; float mode allows roundoff proportional to the
// magnitudes that entered the composition.
template <typename T>
int first_nonzero_residual(const TruncatedSeries<T>& r, int limit, const TruncatedSeries<T>& g,
                           double f_scale) {
    for (int k = 0; k <= limit; ++k) {
        if constexpr (ring_of<T>::mode == RingMode::rational) {
            if (!ring_of<T>::is_zero(r[k]))
                return k;
        } else {
            double scale = (1.0 + f_scale) * std::max(1.0, std::abs(g[std::min(k, g.order())]));
            if (std::abs(r[k]) > 1e-8 * scale)
                return k;
        }
    }
    return limit + 1;
}

template <typename T>
double coeff_scale(const TruncatedSeries<T>& f) {
    double m = 0.0;
    for (int k = 0; k <= f.order(); ++k)
        m = std::max(m, std::abs(ring_of<T>::to_double(f[k])));
    return m;
}

// Division by a divisor that is only known (and only needed) up to a lower
// order. Valid when the true quotient vanishes on the low indices that would
// otherwise consume the missing divisor coefficients; newton_revert's audit
// composes would flag any violation.
template <typename T>
TruncatedSeries<T> div_short_divisor(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    if (ring_of<T>::is_zero(b[0]))
        throw ZeroConstantTerm("division by a series with zero constant term");
    int n = a.order();
    std::vector<T> q(static_cast<std::size_t>(n) + 1, T(0));
    for (int k = 0; k <= n; ++k) {
        T acc = a[k];
        int jmax = std::min(k, b.order());
        for (int j = 1; j <= jmax; ++j) {
            if (!ring_of<T>::is_zero(b[j]))
                acc -= b[j] * q[k - j];
        }
        q[k] = acc / b[0];
    }
    return TruncatedSeries<T>(std::move(q));
}

} // namespace detail

template <typename T>
InversionResult<T> newton_revert(const TruncatedSeries<T>& f, int target_order) {
    detail::check_revert_args(f, target_order);
    double f_scale = detail::coeff_scale(truncated(f, target_order));

    // Start from the linear inverse; each pass doubles the trusted order.
    auto g = scaled(TruncatedSeries<T>::identity(1), T(T(1) / f[1]));
    int trusted = 1;
    while (trusted < target_order) {
        int m = std::min(2 * trusted, target_order);
        auto fm = truncated(f, m);
        auto gm = extended(g, m);
        auto residual = sub(compose(fm, gm), TruncatedSeries<T>::identity(m));

        // The residual of the previous pass must already vanish through
        // `trusted`, otherwise the claimed order was wrong.
        if (detail::first_nonzero_residual(residual, trusted, gm, f_scale) <= trusted)
            throw NonConvergence("trusted order " + std::to_string(trusted) +
                                 " not confirmed by residual");

        // The update vanishes through `trusted`, so only the slope's first
        // m - trusted coefficients ever reach it; composing at that shorter
        // order cuts the dominant cost of the pass.
        int slope_order = m - trusted - 1;
        auto slope = compose(truncated(derivative(fm), slope_order), truncated(gm, slope_order));
        auto update = detail::div_short_divisor(residual, slope);
        g = sub(gm, update);
        trusted = m;
    }

    auto final_residual =
        sub(compose(truncated(f, target_order), g), TruncatedSeries<T>::identity(target_order));
    if (detail::first_nonzero_residual(final_residual, target_order, g, f_scale) <= target_order)
        throw NonConvergence("final residual check failed at order " +
                             std::to_string(target_order));
    return {std::move(g), InversionMethod::newton, f.order()};
}

// Solve the lower-triangular system [y^m](f(g)) = delta_{m,1} for g_1..g_N by
// forward substitution: f1*g_m = delta_{m,1} - sum_{k>=2} f_k [y^m](g^k), and
// [y^m](g^k) involves only g_1..g_{m-1}. The table of power coefficients
// G[m][k] = [y^m](g^k) is filled by convolving g with the previous column,
// so the routine uses nothing beyond raw coefficient arithmetic -- which is
// what makes it a useful independent check on the other two routes.
//
// (The transposed substitution over powers of f solves the same system but
// sums alternating near-cancelling multiples of [x^n](f^k); in binary64 that
// loses all precision by order ~100, while this direction is forward-stable.)
template <typename T>
InversionResult<T> triangular_revert(const TruncatedSeries<T>& f, int target_order) {
    detail::check_revert_args(f, target_order);
    const int n = target_order;
    const int kmax = std::min(n, f.order()); // f_k = 0 beyond f.order()
    std::vector<T> g(static_cast<std::size_t>(n) + 1, T(0));
    // G[m][k-2] = [y^m](g^k) for k = 2..kmax; column 1 is g itself.
    std::vector<std::vector<T>> G(static_cast<std::size_t>(n) + 1);
    g[1] = T(1) / f[1];
    for (int m = 2; m <= n; ++m) {
        const int cols = std::min(m, kmax) - 1; // columns k = 2..min(m, kmax)
        G[static_cast<std::size_t>(m)].assign(cols > 0 ? static_cast<std::size_t>(cols) : 0,
                                              T(0));
        T rhs(0);
        for (int k = 2; k <= std::min(m, kmax); ++k) {
            // [y^m](g^k) = sum_j g_j [y^{m-j}](g^{k-1}); g_m itself cannot
            // appear because g^{k-1} starts at y^{k-1}, so j <= m-k+1.
            T c(0);
            for (int j = 1; j <= m - (k - 1); ++j) {
                const T& prev = (k == 2)
                                    ? g[static_cast<std::size_t>(m - j)]
                                    : G[static_cast<std::size_t>(m - j)][static_cast<std::size_t>(k - 3)];
                c += g[static_cast<std::size_t>(j)] * prev;
            }
            G[static_cast<std::size_t>(m)][static_cast<std::size_t>(k - 2)] = c;
            rhs += f[k] * c;
        }
        g[static_cast<std::size_t>(m)] = -rhs / f[1];
    }
    return {TruncatedSeries<T>(std::move(g)), InversionMethod::triangular, f.order()};
}

// Coefficients of H(g(y)) for the compositional inverse g of f, without
// computing g itself. The constant term is H(0).
template <typename T>
TruncatedSeries<T> lagrange_burmann(const TruncatedSeries<T>& h, const TruncatedSeries<T>& f,
                                    int target_order) {
    if (target_order < 0)
        throw InsufficientOrder("burmann target order must be >= 0");
    require_revertible(f);
    if (target_order == 0)
        return TruncatedSeries<T>::constant(h[0], 0);
    if (f.order() < target_order || h.order() < target_order)
        throw InsufficientOrder("burmann needs both inputs at the target order");

    int n = target_order;
    auto u = detail::x_over_f(f, n - 1);
    auto hp = truncated(derivative(truncated(h, n)), n - 1);
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    c[0] = h[0];
    auto p = u;
    for (int k = 1; k <= n; ++k) {
        c[k] = convolution_at(hp, p, k - 1) / T(k);
        if (k < n)
            p = mul(p, u, n - 1);
    }
    return TruncatedSeries<T>(std::move(c));
}

} // namespace serinv
