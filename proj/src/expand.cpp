// Taylor expansion of expression trees in either coefficient ring.
//
// Primitive series come from recurrences (1/k!, alternating factorials, the
// binomial half-power), never from coefficient tables; tan is sin/cos by
// series division, and atan/log1p go through the integral forms
// atan(v) = atan(v0) + I(v'/(1+v^2)), log1p(v) = log1p(v0) + I(v'/(1+v)),
// which hold for any constant term and need no table either.
//
// Rational mode is exact: calls whose value at 0 is irrational (exp of a
// nonzero constant, sqrt of a non-square, ...) raise NotExpandable with
// float_representable = true so callers can fall back to binary64.

#include <serinv/expand.hpp>

#include <cmath>
#include <type_traits>

#include <serinv/errors.hpp>

namespace serinv {

namespace {

constexpr bool kRationalMode(const Rational*) { return true; }
constexpr bool kRationalMode(const double*) { return false; }

template <typename T>
TruncatedSeries<T> exp_series(int n) {
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    c[0] = T(1);
    for (int k = 1; k <= n; ++k)
        c[k] = T(c[k - 1] / T(k));
    return TruncatedSeries<T>(std::move(c));
}

template <typename T>
TruncatedSeries<T> sin_series(int n) {
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    if (n >= 1)
        c[1] = T(1);
    for (int k = 3; k <= n; k += 2)
        c[k] = T(-c[k - 2] / T(k * (k - 1)));
    return TruncatedSeries<T>(std::move(c));
}

template <typename T>
TruncatedSeries<T> cos_series(int n) {
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    c[0] = T(1);
    for (int k = 2; k <= n; k += 2)
        c[k] = T(-c[k - 2] / T(k * (k - 1)));
    return TruncatedSeries<T>(std::move(c));
}

// (1 + u)^(1/2): b_k = b_{k-1} * (3/2 - k) / k.
template <typename T>
TruncatedSeries<T> sqrt1p_series(int n) {
    std::vector<T> c(static_cast<std::size_t>(n) + 1, T(0));
    c[0] = T(1);
    for (int k = 1; k <= n; ++k)
        c[k] = T(c[k - 1] * (T(3) / T(2) - T(k)) / T(k));
    return TruncatedSeries<T>(std::move(c));
}

template <typename T>
bool series_is_zero(const TruncatedSeries<T>& s) {
    for (int k = 0; k <= s.order(); ++k)
        if (!ring_of<T>::is_zero(s[k]))
            return false;
    return true;
}

// v with its constant term removed.
template <typename T>
TruncatedSeries<T> drop_constant(const TruncatedSeries<T>& v) {
    std::vector<T> c = v.coeffs();
    c[0] = T(0);
    return TruncatedSeries<T>(std::move(c));
}

template <typename T>
Expansion<T> expand_node(const ExpressionNode& e, int n);

// I(v'/(1 + d)) + c, shared by atan (d = v^2) and log1p (d = v); the
// denominator's unit-ness has been checked by the caller.
template <typename T>
TruncatedSeries<T> integral_form(const TruncatedSeries<T>& vprime,
                                 const TruncatedSeries<T>& denom, T constant, int n) {
    if (n == 0)
        return TruncatedSeries<T>::constant(constant, 0);
    auto integrand = div(vprime, truncated(denom, n - 1));
    return integral(integrand, constant);
}

// sin/cos of an already-expanded argument; nonzero constant terms are
// reduced by the angle-addition formulas (float ring only -- rational-mode
// callers reject nonzero constants before calling).
template <typename T>
TruncatedSeries<T> sin_of(const TruncatedSeries<T>& v, int n) {
    if (ring_of<T>::is_zero(v[0]))
        return compose(sin_series<T>(n), v);
    if constexpr (std::is_same_v<T, Rational>) {
        throw Error("sin_of: nonzero constant term in rational mode");
    } else {
        auto w = drop_constant(v);
        return add(scaled(compose(cos_series<T>(n), w), std::sin(v[0])),
                   scaled(compose(sin_series<T>(n), w), std::cos(v[0])));
    }
}

template <typename T>
TruncatedSeries<T> cos_of(const TruncatedSeries<T>& v, int n) {
    if (ring_of<T>::is_zero(v[0]))
        return compose(cos_series<T>(n), v);
    if constexpr (std::is_same_v<T, Rational>) {
        throw Error("cos_of: nonzero constant term in rational mode");
    } else {
        auto w = drop_constant(v);
        return sub(scaled(compose(cos_series<T>(n), w), std::cos(v[0])),
                   scaled(compose(sin_series<T>(n), w), std::sin(v[0])));
    }
}

template <typename T>
Expansion<T> expand_call(const ExpressionNode& e, int n) {
    constexpr bool rational = kRationalMode(static_cast<const T*>(nullptr));
    auto arg = expand_node<T>(*e.children[0], n);
    const auto& v = arg.series;
    const T c0 = v[0];
    const bool at_zero = ring_of<T>::is_zero(c0);
    auto fail = [&](const char* reason, bool float_ok) -> Expansion<T> {
        throw NotExpandable(print_expression(e), reason, float_ok);
    };

    switch (e.call_name) {
        case CallName::flatbump: {
            if (!at_zero)
                return fail("flatbump is only expandable where its argument vanishes", false);
            return {TruncatedSeries<T>::zero(n), false};
        }
        case CallName::exp: {
            if (at_zero)
                return {compose(exp_series<T>(n), v), arg.analytic};
            if constexpr (rational) {
                return fail("exp of a nonzero constant is irrational", true);
            } else {
                auto tail = compose(exp_series<T>(n), drop_constant(v));
                return {scaled(tail, T(std::exp(c0))), arg.analytic};
            }
        }
        case CallName::expm1: {
            if (at_zero) {
                auto s = compose(exp_series<T>(n), v);
                s.at_mut(0) -= T(1);
                return {std::move(s), arg.analytic};
            }
            if constexpr (rational) {
                return fail("expm1 of a nonzero constant is irrational", true);
            } else {
                auto tail = compose(exp_series<T>(n), drop_constant(v));
                tail.at_mut(0) -= T(1);  // exp(w) - 1
                auto s = scaled(tail, T(std::exp(c0)));
                s.at_mut(0) += T(std::expm1(c0));
                return {std::move(s), arg.analytic};
            }
        }
        case CallName::sin: {
            if (!at_zero && rational)
                return fail("sin of a nonzero constant is irrational", true);
            return {sin_of(v, n), arg.analytic};
        }
        case CallName::cos: {
            if (!at_zero && rational)
                return fail("cos of a nonzero constant is irrational", true);
            return {cos_of(v, n), arg.analytic};
        }
        case CallName::tan: {
            if (!at_zero && rational)
                return fail("tan of a nonzero constant is irrational", true);
            auto c = cos_of(v, n);
            if (ring_of<T>::is_zero(c[0]))
                return fail("tan at a pole of cosine", false);
            return {div(sin_of(v, n), c), arg.analytic};
        }
        case CallName::atan: {
            if (!at_zero && rational)
                return fail("atan of a nonzero constant is irrational", true);
            T constant = T(0);
            if constexpr (!rational)
                constant = std::atan(c0);
            if (n == 0)
                return {TruncatedSeries<T>::constant(constant, 0), arg.analytic};
            auto denom = mul(v, v, n - 1);
            denom.at_mut(0) += T(1);
            return {integral_form(derivative(v), denom, constant, n), arg.analytic};
        }
        case CallName::log1p: {
            if constexpr (rational) {
                if (!at_zero)
                    return fail("log1p of a nonzero constant is irrational", true);
            } else {
                if (c0 <= T(-1))
                    return fail("log1p argument at or below -1 at x = 0", false);
            }
            T constant = T(0);
            if constexpr (!rational)
                constant = std::log1p(c0);
            if (n == 0)
                return {TruncatedSeries<T>::constant(constant, 0), arg.analytic};
            auto denom = truncated(v, n - 1);
            denom.at_mut(0) += T(1);
            return {integral_form(derivative(v), denom, constant, n), arg.analytic};
        }
        case CallName::sqrt: {
            if (series_is_zero(v))
                return {TruncatedSeries<T>::zero(n), arg.analytic};
            if (at_zero)
                return fail("sqrt of a series vanishing at 0 is not a power series", false);
            if constexpr (rational) {
                if (sign(c0) < 0)
                    return fail("sqrt of a negative value at x = 0", false);
                const mpz_class& num = c0.get_num();
                const mpz_class& den = c0.get_den();
                if (!mpz_perfect_square_p(num.get_mpz_t()) ||
                    !mpz_perfect_square_p(den.get_mpz_t()))
                    return fail("sqrt of a non-square rational is irrational", true);
                mpz_class rn, rd;
                mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
                mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
                T root = T(Rational(rn) / Rational(rd));
                auto w = scaled(drop_constant(v), T(T(1) / c0));
                return {scaled(compose(sqrt1p_series<T>(n), w), root), arg.analytic};
            } else {
                if (c0 < 0)
                    return fail("sqrt of a negative value at x = 0", false);
                auto w = scaled(drop_constant(v), T(T(1) / c0));
                return {scaled(compose(sqrt1p_series<T>(n), w), T(std::sqrt(c0))),
                        arg.analytic};
            }
        }
    }
    throw Error("unreachable call name");
}

template <typename T>
Expansion<T> expand_node(const ExpressionNode& e, int n) {
    switch (e.kind) {
        case NodeKind::constant: {
            if constexpr (std::is_same_v<T, Rational>)
                return {TruncatedSeries<T>::constant(e.constant_value, n), true};
            else
                return {TruncatedSeries<T>::constant(e.constant_value.get_d(), n), true};
        }
        case NodeKind::variable: {
            if (n == 0)
                return {TruncatedSeries<T>::zero(0), true};
            return {TruncatedSeries<T>::identity(n), true};
        }
        case NodeKind::add: {
            auto l = expand_node<T>(*e.children[0], n);
            auto r = expand_node<T>(*e.children[1], n);
            return {add(l.series, r.series), l.analytic && r.analytic};
        }
        case NodeKind::sub: {
            auto l = expand_node<T>(*e.children[0], n);
            auto r = expand_node<T>(*e.children[1], n);
            return {sub(l.series, r.series), l.analytic && r.analytic};
        }
        case NodeKind::mul: {
            auto l = expand_node<T>(*e.children[0], n);
            auto r = expand_node<T>(*e.children[1], n);
            return {mul(l.series, r.series, n), l.analytic && r.analytic};
        }
        case NodeKind::div: {
            auto l = expand_node<T>(*e.children[0], n);
            auto r = expand_node<T>(*e.children[1], n);
            if (ring_of<T>::is_zero(r.series[0]))
                throw NotExpandable(print_expression(e),
                                    "denominator vanishes at 0", false);
            return {div(l.series, r.series), l.analytic && r.analytic};
        }
        case NodeKind::pow: {
            auto base = expand_node<T>(*e.children[0], n);
            long k = e.children[1]->constant_value.get_num().get_si();
            return {pow_int(base.series, k), base.analytic};
        }
        case NodeKind::call:
            return expand_call<T>(e, n);
    }
    throw Error("unreachable expression kind");
}

} // namespace

template <typename T>
Expansion<T> series_expand(const ExpressionNode& e, int order) {
    if (order < 0)
        throw InsufficientOrder("expansion order must be >= 0");
    return expand_node<T>(e, order);
}

template Expansion<Rational> series_expand<Rational>(const ExpressionNode&, int);
template Expansion<double> series_expand<double>(const ExpressionNode&, int);

} // namespace serinv
