#pragma once
// The shipped test-function corpus: revertible smooth functions with known
// metadata, addressable by stable names from the CLI and the test suite.

#include <string>
#include <vector>

#include <serinv/expr.hpp>
#include <serinv/series.hpp>
#include <serinv/smooth_function.hpp>

namespace serinv {

struct CorpusEntry {
    std::string name;
    std::string expression_text;
    ExpressionNodePtr expression;
    bool analytic;
    // Default y-window for remainder measurements.
    double window_min;
    double window_max;
    // Radius of guaranteed strict monotonicity (bracket cap) and of safe
    // evaluation (finite-difference stencil cap).
    double monotone_radius;
    double domain_radius;
};

const std::vector<CorpusEntry>& corpus_entries();

const CorpusEntry& corpus_lookup(const std::string& name);

// Black-box view of an entry: evaluators plus the exact series generator
// when the entry is analytic.
SmoothFunction make_smooth_function(const CorpusEntry& entry);

// Same, for a free-standing parsed expression (used by --function sources).
// The exact series generator is attached only if rational expansion succeeds
// and the expression is analytic.
SmoothFunction make_smooth_function(const std::string& name, ExpressionNodePtr expr);

} // namespace serinv
