// Lexer, recursive-descent parser, canonical printer, and evaluator for the
// expression grammar in expr.hpp. Decimals are folded to exact rationals at
// lex time; literal constant/constant divisions and unary minus on constants
// are folded at parse time, so "3/4" and "-1/2" land as single constant
// nodes and the printer's output reparses to an identical tree.

#include <serinv/expr.hpp>

#include <cctype>
#include <cstdlib>
#include <utility>

#include <serinv/quadreal.hpp>

namespace serinv {

const char* to_string(CallName name) {
    switch (name) {
        case CallName::exp: return "exp";
        case CallName::sin: return "sin";
        case CallName::cos: return "cos";
        case CallName::tan: return "tan";
        case CallName::atan: return "atan";
        case CallName::log1p: return "log1p";
        case CallName::sqrt: return "sqrt";
        case CallName::expm1: return "expm1";
        default: return "flatbump";
    }
}

static bool call_from_name(const std::string& s, CallName& out) {
    static const std::pair<const char*, CallName> table[] = {
        {"exp", CallName::exp},     {"sin", CallName::sin},
        {"cos", CallName::cos},     {"tan", CallName::tan},
        {"atan", CallName::atan},   {"log1p", CallName::log1p},
        {"sqrt", CallName::sqrt},   {"expm1", CallName::expm1},
        {"flatbump", CallName::flatbump},
    };
    for (const auto& [name, value] : table) {
        if (s == name) {
            out = value;
            return true;
        }
    }
    return false;
}

// --- node construction -----------------------------------------------------

ExpressionNodePtr ExpressionNode::make_constant(Rational v) {
    auto n = std::make_shared<ExpressionNode>();
    n->kind = NodeKind::constant;
    n->constant_value = std::move(v);
    return n;
}

ExpressionNodePtr ExpressionNode::make_variable() {
    auto n = std::make_shared<ExpressionNode>();
    n->kind = NodeKind::variable;
    return n;
}

ExpressionNodePtr ExpressionNode::make_binary(NodeKind op, ExpressionNodePtr lhs,
                                              ExpressionNodePtr rhs) {
    auto n = std::make_shared<ExpressionNode>();
    n->kind = op;
    n->children = {std::move(lhs), std::move(rhs)};
    return n;
}

ExpressionNodePtr ExpressionNode::make_pow(ExpressionNodePtr base, long exponent) {
    auto n = std::make_shared<ExpressionNode>();
    n->kind = NodeKind::pow;
    n->children = {std::move(base), make_constant(Rational(exponent))};
    return n;
}

ExpressionNodePtr ExpressionNode::make_call(CallName name, ExpressionNodePtr arg) {
    auto n = std::make_shared<ExpressionNode>();
    n->kind = NodeKind::call;
    n->call_name = name;
    n->children = {std::move(arg)};
    return n;
}

// --- lexer ------------------------------------------------------------------

namespace {

enum class Tok { number, name, plus, minus, star, slash, caret, lparen, rparen, end };

struct Token {
    Tok kind;
    std::size_t offset;
    Rational number;       // Tok::number
    bool is_integer = false;
    std::string name;      // Tok::name
};

class Lexer {
  public:
    explicit Lexer(const std::string& text) : text_(text) { advance(); }

    const Token& peek() const { return current_; }

    Token take() {
        Token t = current_;
        advance();
        return t;
    }

  private:
    void advance() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        current_ = Token{Tok::end, pos_, Rational(0), false, {}};
        if (pos_ >= text_.size())
            return;
        char c = text_[pos_];
        switch (c) {
            case '+': current_.kind = Tok::plus; ++pos_; return;
            case '-': current_.kind = Tok::minus; ++pos_; return;
            case '*': current_.kind = Tok::star; ++pos_; return;
            case '/': current_.kind = Tok::slash; ++pos_; return;
            case '^': current_.kind = Tok::caret; ++pos_; return;
            case '(': current_.kind = Tok::lparen; ++pos_; return;
            case ')': current_.kind = Tok::rparen; ++pos_; return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            lex_number();
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            current_.kind = Tok::name;
            current_.name = text_.substr(start, pos_ - start);
            return;
        }
        throw SyntaxError(pos_, {"a number", "'x'", "a function name", "an operator",
                                 "'('", "')'"});
    }

    void lex_number() {
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        std::string digits = text_.substr(start, pos_ - start);
        current_.kind = Tok::number;
        if (pos_ < text_.size() && text_[pos_] == '.') {
            ++pos_;
            std::size_t fstart = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ == fstart)
                throw SyntaxError(pos_, {"a digit"});
            current_.number = rational_from_decimal(digits, text_.substr(fstart, pos_ - fstart));
            current_.is_integer = false;
        } else {
            current_.number = rational_from_string(digits);
            current_.is_integer = true;
        }
    }

    const std::string& text_;
    std::size_t pos_ = 0;
    Token current_;
};

// --- parser -----------------------------------------------------------------

constexpr long kMaxExponent = 16384;

class Parser {
  public:
    explicit Parser(const std::string& text) : lex_(text) {}

    ExpressionNodePtr parse() {
        auto e = parse_expr();
        if (lex_.peek().kind != Tok::end)
            throw SyntaxError(lex_.peek().offset, {"an operator", "end of input"});
        return e;
    }

  private:
    ExpressionNodePtr parse_expr() {
        bool negate = false;
        if (lex_.peek().kind == Tok::minus) {
            lex_.take();
            negate = true;
        }
        auto node = parse_term();
        if (negate)
            node = negated_node(std::move(node));
        while (lex_.peek().kind == Tok::plus || lex_.peek().kind == Tok::minus) {
            NodeKind op = lex_.take().kind == Tok::plus ? NodeKind::add : NodeKind::sub;
            node = ExpressionNode::make_binary(op, std::move(node), parse_term());
        }
        return node;
    }

    ExpressionNodePtr parse_term() {
        auto node = parse_factor();
        while (lex_.peek().kind == Tok::star || lex_.peek().kind == Tok::slash) {
            bool is_div = lex_.take().kind == Tok::slash;
            auto rhs = parse_factor();
            if (is_div && node->kind == NodeKind::constant &&
                rhs->kind == NodeKind::constant && sign(rhs->constant_value) != 0) {
                // Literal fraction: fold so "3/4" is one rational constant.
                node = ExpressionNode::make_constant(
                    Rational(node->constant_value / rhs->constant_value));
                continue;
            }
            node = ExpressionNode::make_binary(is_div ? NodeKind::div : NodeKind::mul,
                                               std::move(node), std::move(rhs));
        }
        return node;
    }

    ExpressionNodePtr parse_factor() {
        auto node = parse_base();
        if (lex_.peek().kind == Tok::caret) {
            lex_.take();
            const Token& t = lex_.peek();
            if (t.kind != Tok::number || !t.is_integer)
                throw SyntaxError(t.offset, {"a nonnegative integer exponent"});
            Rational v = t.number;
            if (v.get_den() != 1 || v.get_num() > kMaxExponent || sign(v) < 0)
                throw SyntaxError(t.offset, {"a nonnegative integer exponent"});
            lex_.take();
            node = ExpressionNode::make_pow(std::move(node), v.get_num().get_si());
        }
        return node;
    }

    ExpressionNodePtr parse_base() {
        const Token& t = lex_.peek();
        switch (t.kind) {
            case Tok::number: {
                Token tok = lex_.take();
                return ExpressionNode::make_constant(std::move(tok.number));
            }
            case Tok::lparen: {
                lex_.take();
                auto inner = parse_expr();
                if (lex_.peek().kind != Tok::rparen)
                    throw SyntaxError(lex_.peek().offset, {"')'"});
                lex_.take();
                return inner;
            }
            case Tok::name: {
                Token tok = lex_.take();
                if (tok.name == "x")
                    return ExpressionNode::make_variable();
                CallName call;
                if (!call_from_name(tok.name, call))
                    throw UnknownFunction(tok.offset, tok.name);
                if (lex_.peek().kind != Tok::lparen)
                    throw SyntaxError(lex_.peek().offset, {"'('"});
                lex_.take();
                auto arg = parse_expr();
                if (lex_.peek().kind != Tok::rparen)
                    throw SyntaxError(lex_.peek().offset, {"')'"});
                lex_.take();
                return ExpressionNode::make_call(call, std::move(arg));
            }
            default:
                throw SyntaxError(t.offset, {"a number", "'x'", "a function name", "'('"});
        }
    }

    static ExpressionNodePtr negated_node(ExpressionNodePtr operand) {
        if (operand->kind == NodeKind::constant)
            return ExpressionNode::make_constant(Rational(-operand->constant_value));
        return ExpressionNode::make_binary(NodeKind::sub,
                                           ExpressionNode::make_constant(Rational(0)),
                                           std::move(operand));
    }

    Lexer lex_;
};

} // namespace

ExpressionNodePtr parse_expression(const std::string& text) {
    return Parser(text).parse();
}

// --- printer ----------------------------------------------------------------

namespace {

int precedence(const ExpressionNode& e) {
    switch (e.kind) {
        case NodeKind::add:
        case NodeKind::sub: return 1;
        case NodeKind::mul:
        case NodeKind::div: return 2;
        case NodeKind::pow: return 3;
        default: return 4;
    }
}

bool is_unary_minus(const ExpressionNode& e) {
    return e.kind == NodeKind::sub && e.children[0]->kind == NodeKind::constant &&
           sign(e.children[0]->constant_value) == 0;
}

void print_node(const ExpressionNode& e, int min_prec, std::string& out) {
    int prec = precedence(e);
    bool parens = prec < min_prec;
    if (parens)
        out += '(';
    switch (e.kind) {
        case NodeKind::constant: {
            // In operand positions a bare negative literal would reparse as
            // an unfolded unary minus, and a bare fraction next to '*', '/',
            // or '^' would rebind its '/'; parenthesize so the literal folds
            // back into a single constant node.
            bool wrap = (sign(e.constant_value) < 0 && min_prec >= 2) ||
                        (e.constant_value.get_den() != 1 && min_prec >= 3);
            if (wrap)
                out += '(';
            out += to_string(e.constant_value);
            if (wrap)
                out += ')';
            break;
        }
        case NodeKind::variable:
            out += 'x';
            break;
        case NodeKind::add:
            print_node(*e.children[0], 1, out);
            out += " + ";
            print_node(*e.children[1], 2, out);
            break;
        case NodeKind::sub:
            if (is_unary_minus(e)) {
                out += '-';
                print_node(*e.children[1], 2, out);
                break;
            }
            print_node(*e.children[0], 1, out);
            out += " - ";
            print_node(*e.children[1], 2, out);
            break;
        case NodeKind::mul:
            print_node(*e.children[0], 2, out);
            out += '*';
            print_node(*e.children[1], 3, out);
            break;
        case NodeKind::div:
            print_node(*e.children[0], 2, out);
            out += '/';
            print_node(*e.children[1], 3, out);
            break;
        case NodeKind::pow:
            print_node(*e.children[0], 4, out);
            out += '^';
            out += e.children[1]->constant_value.get_num().get_str();
            break;
        case NodeKind::call:
            out += to_string(e.call_name);
            out += '(';
            print_node(*e.children[0], 0, out);
            out += ')';
            break;
    }
    if (parens)
        out += ')';
}

} // namespace

std::string print_expression(const ExpressionNode& e) {
    std::string out;
    print_node(e, 0, out);
    return out;
}

bool structurally_equal(const ExpressionNode& a, const ExpressionNode& b) {
    if (a.kind != b.kind || a.children.size() != b.children.size())
        return false;
    if (a.kind == NodeKind::constant && a.constant_value != b.constant_value)
        return false;
    if (a.kind == NodeKind::call && a.call_name != b.call_name)
        return false;
    for (std::size_t i = 0; i < a.children.size(); ++i)
        if (!structurally_equal(*a.children[i], *b.children[i]))
            return false;
    return true;
}

// --- evaluation ---------------------------------------------------------------

namespace {

template <typename Real>
Real real_from_rational(const Rational& r) {
    if constexpr (std::is_same_v<Real, double>)
        return r.get_d();
    else
        return q_from_rational(r);
}

} // namespace

template <typename Real>
Real eval_expression(const ExpressionNode& e, Real x) {
    switch (e.kind) {
        case NodeKind::constant:
            return real_from_rational<Real>(e.constant_value);
        case NodeKind::variable:
            return x;
        case NodeKind::add:
            return eval_expression(*e.children[0], x) + eval_expression(*e.children[1], x);
        case NodeKind::sub:
            return eval_expression(*e.children[0], x) - eval_expression(*e.children[1], x);
        case NodeKind::mul:
            return eval_expression(*e.children[0], x) * eval_expression(*e.children[1], x);
        case NodeKind::div: {
            Real num = eval_expression(*e.children[0], x);
            Real den = eval_expression(*e.children[1], x);
            if (den == Real(0))
                throw DomainError("division by zero");
            return num / den;
        }
        case NodeKind::pow: {
            Real base = eval_expression(*e.children[0], x);
            long k = e.children[1]->constant_value.get_num().get_si();
            Real acc(1);
            for (long i = 0; i < k; ++i)
                acc *= base;
            return acc;
        }
        case NodeKind::call: {
            Real v = eval_expression(*e.children[0], x);
            switch (e.call_name) {
                case CallName::exp: return real_exp(v);
                case CallName::sin: return real_sin(v);
                case CallName::cos: return real_cos(v);
                case CallName::tan: return real_tan(v);
                case CallName::atan: return real_atan(v);
                case CallName::log1p:
                    if (v <= Real(-1))
                        throw DomainError("log1p argument at or below -1");
                    return real_log1p(v);
                case CallName::sqrt:
                    if (v < Real(0))
                        throw DomainError("sqrt of a negative value");
                    return real_sqrt(v);
                case CallName::expm1: return real_expm1(v);
                default:  // flatbump
                    if (v == Real(0))
                        return Real(0);
                    return real_exp(Real(-1) / (v * v));
            }
        }
    }
    throw Error("unreachable expression kind");
}

template double eval_expression<double>(const ExpressionNode&, double);
template QReal eval_expression<QReal>(const ExpressionNode&, QReal);

} // namespace serinv
