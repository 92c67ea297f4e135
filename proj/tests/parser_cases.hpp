#pragma once
// The grammar conformance table: 25 inputs with their expected outcome.
// Valid entries list the canonical re-rendered form (which must also reparse
// to a structurally identical tree); invalid entries list the error class and
// the byte offset it must be reported at.

#include <string>
#include <vector>

namespace testutil {

enum class ParseOutcome { ok, syntax_error, unknown_function };

struct ParserCase {
    std::string text;
    ParseOutcome outcome;
    // outcome == ok: the canonical printed form.
    std::string canonical;
    // outcome != ok: required error offset.
    int error_offset = -1;
};

inline const std::vector<ParserCase>& parser_cases() {
    static const std::vector<ParserCase> cases = {
        // -- valid -------------------------------------------------------
        {"x", ParseOutcome::ok, "x", -1},
        {"x - x^2", ParseOutcome::ok, "x - x^2", -1},
        {"x*exp(x)", ParseOutcome::ok, "x*exp(x)", -1},
        {"1 + 2*x", ParseOutcome::ok, "1 + 2*x", -1},
        {"3/4", ParseOutcome::ok, "3/4", -1},
        {"0.125*x", ParseOutcome::ok, "1/8*x", -1},
        {"-x", ParseOutcome::ok, "-x", -1},
        {"-(x + 1)", ParseOutcome::ok, "-(x + 1)", -1},
        {"x^0", ParseOutcome::ok, "x^0", -1},
        {"((x))", ParseOutcome::ok, "x", -1},
        {"sin(cos(x))", ParseOutcome::ok, "sin(cos(x))", -1},
        {"x + flatbump(x)", ParseOutcome::ok, "x + flatbump(x)", -1},
        {"1/0", ParseOutcome::ok, "1/0", -1}, // parses; evaluation rejects it
        {"2*x + x^2", ParseOutcome::ok, "2*x + x^2", -1},
        {"x*(1 + sin(x*x))", ParseOutcome::ok, "x*(1 + sin(x*x))", -1},
        {"x - x*x/2 + x^3/3", ParseOutcome::ok, "x - x*x/2 + x^3/3", -1},
        {"log1p( atan( x ) )", ParseOutcome::ok, "log1p(atan(x))", -1},
        {"  x  -  1.5  ", ParseOutcome::ok, "x - 3/2", -1},
        // -- invalid -----------------------------------------------------
        {"x +", ParseOutcome::syntax_error, "", 3},
        {"x + + x", ParseOutcome::syntax_error, "", 4},
        {"2 // x", ParseOutcome::syntax_error, "", 3},
        {"foo(x)", ParseOutcome::unknown_function, "", 0},
        {"exp x", ParseOutcome::syntax_error, "", 4},
        {"x^(2)", ParseOutcome::syntax_error, "", 2},
        {"(x", ParseOutcome::syntax_error, "", 2},
    };
    return cases;
}

} // namespace testutil
