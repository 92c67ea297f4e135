#pragma once
// Expression trees for user-supplied functions of the single variable x.
//
// Grammar (whitespace-insensitive, left-associative):
//   expr   := ['-'] term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := base ('^' integer)?
//   base   := number | 'x' | name '(' expr ')' | '(' expr ')'
//
// Number literals are integers, decimals (kept exact as rationals), or
// rationals "p/q" (which arrive as a fold of constant/constant). Unary minus
// is sugar for 0 - operand, folded into the constant when the operand is one.

#include <memory>
#include <string>
#include <vector>

#include <serinv/errors.hpp>
#include <serinv/rational.hpp>

namespace serinv {

enum class NodeKind { constant, variable, add, sub, mul, div, pow, call };

enum class CallName { exp, sin, cos, tan, atan, log1p, sqrt, expm1, flatbump };

const char* to_string(CallName name);

struct ExpressionNode;
using ExpressionNodePtr = std::shared_ptr<const ExpressionNode>;

struct ExpressionNode {
    NodeKind kind;
    std::vector<ExpressionNodePtr> children;
    Rational constant_value;  // kind == constant; pow exponents are constant children
    CallName call_name = CallName::exp;  // kind == call

    static ExpressionNodePtr make_constant(Rational v);
    static ExpressionNodePtr make_variable();
    static ExpressionNodePtr make_binary(NodeKind op, ExpressionNodePtr lhs,
                                         ExpressionNodePtr rhs);
    static ExpressionNodePtr make_pow(ExpressionNodePtr base, long exponent);
    static ExpressionNodePtr make_call(CallName name, ExpressionNodePtr arg);
};

ExpressionNodePtr parse_expression(const std::string& text);

// Canonical rendering; parsing it back yields a structurally identical tree.
std::string print_expression(const ExpressionNode& e);
inline std::string print_expression(const ExpressionNodePtr& e) { return print_expression(*e); }

bool structurally_equal(const ExpressionNode& a, const ExpressionNode& b);

// Recursive evaluation; Real is double or QReal. flatbump(0) = 0 by
// definition; sqrt of a negative, log1p at or below -1, and division by zero
// throw DomainError.
template <typename Real>
Real eval_expression(const ExpressionNode& e, Real x);

} // namespace serinv
