#pragma once
// Taylor expansion of expression trees at 0, in either coefficient ring.
//
// Rational mode is exact and therefore refuses constants it cannot represent
// (exp(1), sqrt(2), ...); NotExpandable.float_representable reports whether
// switching to the binary64 ring would succeed. flatbump contributes the
// zero series -- its jet -- and marks the expansion non-analytic.

#include <serinv/expr.hpp>
#include <serinv/series.hpp>

namespace serinv {

template <typename T>
struct Expansion {
    TruncatedSeries<T> series;
    // False when a flat (all-derivatives-zero) term was absorbed, i.e. the
    // series is the jet of the function but not its analytic germ.
    bool analytic = true;
};

template <typename T>
Expansion<T> series_expand(const ExpressionNode& e, int order);

extern template Expansion<Rational> series_expand<Rational>(const ExpressionNode&, int);
extern template Expansion<double> series_expand<double>(const ExpressionNode&, int);

} // namespace serinv
