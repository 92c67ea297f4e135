#pragma once

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "serinv/errors.hpp"
#include "serinv/rational.hpp"

// Truncated power series a0 + a1*x + ... + aN*x^N over an exact rational or
// binary64 coefficient ring. Conventions:
//   - "order" is the truncation order N; a series stores exactly N+1 coefficients.
//   - binary operations truncate eagerly to the smaller operand order.
//   - multiplication is schoolbook; sizes here never justify anything fancier.

namespace serinv {

enum class RingMode { rational, binary64 };

inline const char* to_string(RingMode mode) {
    return mode == RingMode::rational ? "rational" : "float";
}

struct CoefficientRing {
    RingMode mode;
    // Relative tolerance used by coefficient comparisons; 0 means exact.
    double equality_tolerance;
};

template <typename T>
struct ring_of;

template <>
struct ring_of<Rational> {
    static constexpr RingMode mode = RingMode::rational;
    static constexpr double default_tolerance = 0.0;
    static bool is_zero(const Rational& v) { return sgn(v) == 0; }
    static double to_double(const Rational& v) { return v.get_d(); }
};

template <>
struct ring_of<double> {
    static constexpr RingMode mode = RingMode::binary64;
    static constexpr double default_tolerance = 1e-12;
    static bool is_zero(double v) { return v == 0.0; }
    static double to_double(double v) { return v; }
};

template <typename T>
class TruncatedSeries {
  public:
    explicit TruncatedSeries(std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
        if (coeffs_.empty())
            throw InsufficientOrder("series needs at least the constant coefficient");
    }

    static TruncatedSeries zero(int order) {
        return TruncatedSeries(std::vector<T>(check_order(order) + 1, T(0)));
    }

    static TruncatedSeries one(int order) {
        auto s = zero(order);
        s.coeffs_[0] = T(1);
        return s;
    }

    static TruncatedSeries constant(const T& value, int order) {
        auto s = zero(order);
        s.coeffs_[0] = value;
        return s;
    }

    // The series x; needs order >= 1 to be representable.
    static TruncatedSeries identity(int order) {
        if (order < 1)
            throw InsufficientOrder("identity series needs order >= 1");
        auto s = zero(order);
        s.coeffs_[1] = T(1);
        return s;
    }

    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<T>& coeffs() const { return coeffs_; }
    const T& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    T& at_mut(int k) { return coeffs_[static_cast<std::size_t>(k)]; }

    CoefficientRing ring() const { return {ring_of<T>::mode, tolerance_}; }
    void set_equality_tolerance(double tol) { tolerance_ = tol; }

  private:
    static int check_order(int order) {
        if (order < 0)
            throw InsufficientOrder("series order must be >= 0");
        return order;
    }

    std::vector<T> coeffs_;
    double tolerance_ = ring_of<T>::default_tolerance;
};

using RationalSeries = TruncatedSeries<Rational>;
using FloatSeries = TruncatedSeries<double>;

// Bounds-checked coefficient access.
template <typename T>
const T& coeff_at(const TruncatedSeries<T>& a, int k) {
    if (k < 0 || k > a.order())
        throw IndexOutOfRange("coefficient index " + std::to_string(k) + " out of range [0, " +
                              std::to_string(a.order()) + "]");
    return a[k];
}

template <typename T>
TruncatedSeries<T> truncated(const TruncatedSeries<T>& a, int order) {
    if (order > a.order())
        throw InsufficientOrder("cannot truncate order " + std::to_string(a.order()) +
                                " series to larger order " + std::to_string(order));
    std::vector<T> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
    auto out = TruncatedSeries<T>(std::move(c));
    out.set_equality_tolerance(a.ring().equality_tolerance);
    return out;
}

// Zero-padding embed into a larger order. Padding does not create information;
// callers own the claim that higher coefficients are actually zero.
template <typename T>
TruncatedSeries<T> extended(const TruncatedSeries<T>& a, int order) {
    if (order <= a.order())
        return truncated(a, order);
    std::vector<T> c = a.coeffs();
    c.resize(static_cast<std::size_t>(order) + 1, T(0));
    auto out = TruncatedSeries<T>(std::move(c));
    out.set_equality_tolerance(a.ring().equality_tolerance);
    return out;
}

namespace detail {

inline double merged_tolerance(double a, double b) { return std::max(a, b); }

template <typename T>
TruncatedSeries<T> with_tol(std::vector<T> c, double tol) {
    auto out = TruncatedSeries<T>(std::move(c));
    out.set_equality_tolerance(tol);
    return out;
}

} // namespace detail

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = a[k] + b[k];
    return detail::with_tol(std::move(c), detail::merged_tolerance(a.ring().equality_tolerance,
                                                                   b.ring().equality_tolerance));
}

template <typename T>
TruncatedSeries<T> sub(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    int n = std::min(a.order(), b.order());
    std::vector<T> c(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = a[k] - b[k];
    return detail::with_tol(std::move(c), detail::merged_tolerance(a.ring().equality_tolerance,
                                                                   b.ring().equality_tolerance));
}

template <typename T>
TruncatedSeries<T> negated(const TruncatedSeries<T>& a) {
    std::vector<T> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = -a.coeffs()[k];
    return detail::with_tol(std::move(c), a.ring().equality_tolerance);
}

template <typename T>
TruncatedSeries<T> scaled(const TruncatedSeries<T>& a, const T& factor) {
    std::vector<T> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeffs()[k] * factor;
    return detail::with_tol(std::move(c), a.ring().equality_tolerance);
}

// Cauchy product truncated to `order` (which must not exceed either operand).
template <typename T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, int order) {
    if (order > a.order() || order > b.order())
        throw InsufficientOrder("mul truncation order exceeds an operand order");
    std::vector<T> c(static_cast<std::size_t>(order) + 1, T(0));
    for (int i = 0; i <= std::min(order, a.order()); ++i) {
        if (ring_of<T>::is_zero(a[i]))
            continue;
        int jmax = std::min(order - i, b.order());
        for (int j = 0; j <= jmax; ++j)
            c[i + j] += a[i] * b[j];
    }
    return detail::with_tol(std::move(c), detail::merged_tolerance(a.ring().equality_tolerance,
                                                                   b.ring().equality_tolerance));
}

template <typename T>
TruncatedSeries<T> mul(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return mul(a, b, std::min(a.order(), b.order()));
}

// Single coefficient [x^k] (a*b) without forming the whole product.
template <typename T>
T convolution_at(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b, int k) {
    T acc(0);
    int lo = std::max(0, k - b.order());
    int hi = std::min(k, a.order());
    for (int i = lo; i <= hi; ++i)
        acc += a[i] * b[k - i];
    return acc;
}

// Power series long division; requires b(0) != 0. The quotient satisfies
// q_k = (a_k - sum_{j=1..k} b_j q_{k-j}) / b_0.
template <typename T>
TruncatedSeries<T> div(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    if (ring_of<T>::is_zero(b[0]))
        throw ZeroConstantTerm("division by a series with zero constant term");
    int n = std::min(a.order(), b.order());
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
    return detail::with_tol(std::move(q), detail::merged_tolerance(a.ring().equality_tolerance,
                                                                   b.ring().equality_tolerance));
}

// outer(inner(x)) truncated to the smaller operand order; the inner series
// must vanish at 0 or the composition would need infinitely many terms.
// Evaluated by Horner nesting: r = a_n; r = r*inner + a_k.
template <typename T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
    if (!ring_of<T>::is_zero(inner[0]))
        throw InnerConstantNonzero("compose requires inner series with zero constant term");
    int n = std::min(outer.order(), inner.order());
    auto in = truncated(inner, n);
    auto r = TruncatedSeries<T>::constant(outer[n], n);
    for (int k = n - 1; k >= 0; --k) {
        r = mul(r, in, n);
        r.at_mut(0) += outer[k];
    }
    return r;
}

// Termwise derivative; drops the order by one.
template <typename T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& a) {
    if (a.order() < 1)
        throw InsufficientOrder("derivative of an order-0 series");
    std::vector<T> c(static_cast<std::size_t>(a.order()));
    for (int k = 1; k <= a.order(); ++k)
        c[k - 1] = a[k] * T(k);
    return detail::with_tol(std::move(c), a.ring().equality_tolerance);
}

// Termwise antiderivative with the given constant term; raises the order by one.
template <typename T>
TruncatedSeries<T> integral(const TruncatedSeries<T>& a, const T& constant_term) {
    std::vector<T> c(a.coeffs().size() + 1);
    c[0] = constant_term;
    for (int k = 0; k <= a.order(); ++k)
        c[k + 1] = a[k] / T(k + 1);
    return detail::with_tol(std::move(c), a.ring().equality_tolerance);
}

// a^n for n >= 0 by repeated squaring, kept at a's order.
template <typename T>
TruncatedSeries<T> pow_int(const TruncatedSeries<T>& a, int n) {
    if (n < 0)
        throw InsufficientOrder("pow_int exponent must be >= 0");
    auto result = TruncatedSeries<T>::one(a.order());
    auto base = a;
    int e = n;
    while (e > 0) {
        if (e & 1)
            result = mul(result, base, a.order());
        e >>= 1;
        if (e > 0)
            base = mul(base, base, a.order());
    }
    return result;
}

// Divide by x: requires a vanishing constant term, shifts indices down one.
// This is how x/f is formed without ever evaluating 0/0.
template <typename T>
TruncatedSeries<T> shift_down(const TruncatedSeries<T>& a) {
    if (!ring_of<T>::is_zero(a[0]))
        throw ZeroConstantTerm("shift_down requires a zero constant term");
    if (a.order() < 1)
        throw InsufficientOrder("shift_down of an order-0 series");
    std::vector<T> c(a.coeffs().begin() + 1, a.coeffs().end());
    return detail::with_tol(std::move(c), a.ring().equality_tolerance);
}

// Horner evaluation at a binary64 point. Rational coefficients are rounded to
// binary64 first, so this is only meaningful for float-representable values.
template <typename T>
double eval_at(const TruncatedSeries<T>& a, double t) {
    double r = 0.0;
    for (int k = a.order(); k >= 0; --k)
        r = r * t + ring_of<T>::to_double(a[k]);
    return r;
}

inline bool coeff_equal(const Rational& a, const Rational& b, double) {
    return a == b;
}

inline bool coeff_equal(double a, double b, double rel_tol) {
    if (a == b)
        return true;
    double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) <= rel_tol * scale;
}

// Equality under the ring's tolerance (exact for rationals, relative for
// floats); orders must match.
template <typename T>
bool equal(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    if (a.order() != b.order())
        return false;
    double tol =
        detail::merged_tolerance(a.ring().equality_tolerance, b.ring().equality_tolerance);
    for (int k = 0; k <= a.order(); ++k) {
        if (!coeff_equal(a[k], b[k], tol))
            return false;
    }
    return true;
}

template <typename T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return add(a, b);
}
template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return sub(a, b);
}
template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a) {
    return negated(a);
}
template <typename T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return mul(a, b);
}
template <typename T>
TruncatedSeries<T> operator/(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
    return div(a, b);
}

// Round rationals to binary64 coefficients.
inline FloatSeries to_float_series(const RationalSeries& a) {
    std::vector<double> c(a.coeffs().size());
    for (std::size_t k = 0; k < c.size(); ++k)
        c[k] = a.coeffs()[k].get_d();
    return FloatSeries(std::move(c));
}

inline const FloatSeries& to_float_series(const FloatSeries& a) { return a; }

} // namespace serinv
