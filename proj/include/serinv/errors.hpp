#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace serinv {

// Common base so callers can catch everything from this library in one place.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// --- series arithmetic ---

struct RingModeMismatch : Error {
    using Error::Error;
};

// Division where the divisor has a vanishing constant term.
struct ZeroConstantTerm : Error {
    using Error::Error;
};

// compose() requires the inner series to vanish at 0.
struct InnerConstantNonzero : Error {
    using Error::Error;
};

// Input series is shorter than an operation needs.
struct InsufficientOrder : Error {
    using Error::Error;
};

struct IndexOutOfRange : Error {
    using Error::Error;
};

// --- reversion ---

// f is not of the form f1*x + f2*x^2 + ... with f1 != 0.
struct NotRevertible : Error {
    using Error::Error;
};

// Newton iteration's trusted order failed to double; arithmetic bug, not a
// property of the input.
struct NonConvergence : Error {
    using Error::Error;
};

// --- jets / asymptotics ---

struct DomainTooSmall : Error {
    using Error::Error;
};

struct StepUnderflow : Error {
    using Error::Error;
};

// Linear jet coefficient is too close to zero relative to its error bar.
struct IllConditionedJet : Error {
    using Error::Error;
};

struct WindowsNotNested : Error {
    using Error::Error;
};

// --- numeric oracle ---

// Base for oracle failures; the CLI maps these to exit code 5.
struct OracleError : Error {
    using Error::Error;
};

struct NoBracket : OracleError {
    using OracleError::OracleError;
};

struct MaxIterations : OracleError {
    using OracleError::OracleError;
};

// --- expressions / corpus ---

struct SyntaxError : Error {
    SyntaxError(std::size_t offset, std::vector<std::string> expected);
    std::size_t offset;
    std::vector<std::string> expected;
};

struct UnknownFunction : Error {
    UnknownFunction(std::size_t offset, std::string name);
    std::size_t offset;
    std::string name;
};

struct NotExpandable : Error {
    NotExpandable(std::string subexpression, std::string reason, bool float_representable);
    std::string subexpression;
    // True when the obstruction is only exact-arithmetic (e.g. an irrational
    // constant), so a float-mode expansion would succeed.
    bool float_representable;
};

// Evaluation outside a function's domain (division by zero, sqrt of a
// negative, log1p at or below -1).
struct DomainError : Error {
    using Error::Error;
};

struct UnknownEntry : Error {
    using Error::Error;
};

// Malformed series/report JSON (missing key, mode/coeff mismatch, bad file).
struct SerializationError : Error {
    using Error::Error;
};

// Two reversion algorithms produced different coefficients: a bug sentinel,
// never a legitimate math condition.
struct AlgorithmDisagreement : Error {
    using Error::Error;
};

inline std::string join_expected(const std::vector<std::string>& expected) {
    std::string out;
    for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i > 0)
            out += expected.size() > 2 ? ", " : " ";
        if (i + 1 == expected.size() && expected.size() > 1)
            out += "or ";
        out += expected[i];
    }
    return out;
}

inline SyntaxError::SyntaxError(std::size_t offset_, std::vector<std::string> expected_)
    : Error("syntax error at offset " + std::to_string(offset_) + ": expected " +
            join_expected(expected_)),
      offset(offset_),
      expected(std::move(expected_)) {}

inline UnknownFunction::UnknownFunction(std::size_t offset_, std::string name_)
    : Error("unknown function '" + name_ + "' at offset " + std::to_string(offset_)),
      offset(offset_),
      name(std::move(name_)) {}

inline NotExpandable::NotExpandable(std::string subexpression_, std::string reason,
                                    bool float_representable_)
    : Error("cannot expand '" + subexpression_ + "': " + reason),
      subexpression(std::move(subexpression_)),
      float_representable(float_representable_) {}

} // namespace serinv
