#include "mfc/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>

namespace mfc {

namespace {
constexpr double kE = 2.71828182845904523536;
constexpr double kPi = 3.14159265358979323846;
}  // namespace

struct ExprNode {
    enum class Kind { Number, Var, ConstE, ConstPi, Unary, Binary };
    enum class Ufn { Neg, Exp, Ln, Sin, Cos, Sqrt, Abs };
    enum class Bop { Add, Sub, Mul, Div, Pow };

    Kind kind;
    double number = 0.0;
    Ufn ufn = Ufn::Neg;
    Bop bop = Bop::Add;
    std::shared_ptr<const ExprNode> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const ExprNode>;

NodePtr make_number(double v) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Number;
    n->number = v;
    return n;
}

NodePtr make_leaf(ExprNode::Kind k) {
    auto n = std::make_shared<ExprNode>();
    n->kind = k;
    return n;
}

NodePtr make_unary(ExprNode::Ufn fn, NodePtr arg) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Unary;
    n->ufn = fn;
    n->lhs = std::move(arg);
    return n;
}

NodePtr make_binary(ExprNode::Bop op, NodePtr l, NodePtr r) {
    auto n = std::make_shared<ExprNode>();
    n->kind = ExprNode::Kind::Binary;
    n->bop = op;
    n->lhs = std::move(l);
    n->rhs = std::move(r);
    return n;
}

class Parser {
  public:
    explicit Parser(const std::string& text) : s_(text) {}

    NodePtr run() {
        NodePtr e = parse_expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, "end of input or an operator");
        return e;
    }

  private:
    const std::string& s_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        if (!accept(c)) throw SyntaxError(pos_, what);
    }

    NodePtr parse_expr() {
        NodePtr e = parse_term();
        for (;;) {
            if (accept('+'))
                e = make_binary(ExprNode::Bop::Add, e, parse_term());
            else if (accept('-'))
                e = make_binary(ExprNode::Bop::Sub, e, parse_term());
            else
                return e;
        }
    }

    NodePtr parse_term() {
        NodePtr e = parse_factor();
        for (;;) {
            if (accept('*'))
                e = make_binary(ExprNode::Bop::Mul, e, parse_factor());
            else if (accept('/'))
                e = make_binary(ExprNode::Bop::Div, e, parse_factor());
            else
                return e;
        }
    }

    NodePtr parse_factor() {
        if (accept('-')) return make_unary(ExprNode::Ufn::Neg, parse_factor());
        NodePtr base = parse_primary();
        if (accept('^')) return make_binary(ExprNode::Bop::Pow, base, parse_factor());
        return base;
    }

    NodePtr parse_primary() {
        const char c = peek();
        if (c == '(') {
            ++pos_;
            NodePtr e = parse_expr();
            expect(')', "')'");
            return e;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
        if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
        throw SyntaxError(pos_, "a number, 't', a constant, a function call or '('");
    }

    NodePtr parse_number() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ < s_.size() && s_[pos_] == '.') {
            ++pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
                ++pos_;
        }
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '.'))
            throw SyntaxError(start, "digits");
        return make_number(std::stod(s_.substr(start, pos_ - start)));
    }

    NodePtr parse_ident() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        const std::string name = s_.substr(start, pos_ - start);
        if (peek() == '(') {
            ExprNode::Ufn fn;
            if (name == "exp")
                fn = ExprNode::Ufn::Exp;
            else if (name == "ln")
                fn = ExprNode::Ufn::Ln;
            else if (name == "sin")
                fn = ExprNode::Ufn::Sin;
            else if (name == "cos")
                fn = ExprNode::Ufn::Cos;
            else if (name == "sqrt")
                fn = ExprNode::Ufn::Sqrt;
            else if (name == "abs")
                fn = ExprNode::Ufn::Abs;
            else
                throw UnknownFunction("unknown function '" + name + "' at offset " +
                                      std::to_string(start));
            ++pos_;  // '('
            NodePtr arg = parse_expr();
            expect(')', "')'");
            return make_unary(fn, std::move(arg));
        }
        if (name == "t") return make_leaf(ExprNode::Kind::Var);
        if (name == "e") return make_leaf(ExprNode::Kind::ConstE);
        if (name == "pi") return make_leaf(ExprNode::Kind::ConstPi);
        throw UnknownFunction("unknown identifier '" + name + "' at offset " +
                              std::to_string(start));
    }
};

bool is_integer(double v) { return std::isfinite(v) && v == std::floor(v); }

double eval_node(const ExprNode& n, double t) {
    switch (n.kind) {
        case ExprNode::Kind::Number: return n.number;
        case ExprNode::Kind::Var: return t;
        case ExprNode::Kind::ConstE: return kE;
        case ExprNode::Kind::ConstPi: return kPi;
        case ExprNode::Kind::Unary: {
            const double a = eval_node(*n.lhs, t);
            switch (n.ufn) {
                case ExprNode::Ufn::Neg: return -a;
                case ExprNode::Ufn::Exp: return std::exp(a);
                case ExprNode::Ufn::Ln:
                    if (a <= 0.0) throw EvalDomainError("ln of nonpositive value");
                    return std::log(a);
                case ExprNode::Ufn::Sin: return std::sin(a);
                case ExprNode::Ufn::Cos: return std::cos(a);
                case ExprNode::Ufn::Sqrt:
                    if (a < 0.0) throw EvalDomainError("sqrt of negative value");
                    return std::sqrt(a);
                case ExprNode::Ufn::Abs: return std::abs(a);
            }
            break;
        }
        case ExprNode::Kind::Binary: {
            const double a = eval_node(*n.lhs, t);
            const double b = eval_node(*n.rhs, t);
            switch (n.bop) {
                case ExprNode::Bop::Add: return a + b;
                case ExprNode::Bop::Sub: return a - b;
                case ExprNode::Bop::Mul: return a * b;
                case ExprNode::Bop::Div:
                    if (b == 0.0) throw EvalDomainError("division by zero");
                    return a / b;
                case ExprNode::Bop::Pow:
                    if (a < 0.0 && !is_integer(b))
                        throw EvalDomainError("pow of negative base with non-integer exponent");
                    if (a == 0.0 && b < 0.0) throw EvalDomainError("pow: zero base, negative exponent");
                    return std::pow(a, b);
            }
            break;
        }
    }
    throw EvalDomainError("malformed expression node");
}

std::string str_node(const ExprNode& n) {
    switch (n.kind) {
        case ExprNode::Kind::Number: {
            char buf[40];
            std::snprintf(buf, sizeof buf, "%.17g", n.number);
            return buf;
        }
        case ExprNode::Kind::Var: return "t";
        case ExprNode::Kind::ConstE: return "e";
        case ExprNode::Kind::ConstPi: return "pi";
        case ExprNode::Kind::Unary: {
            const std::string a = str_node(*n.lhs);
            switch (n.ufn) {
                case ExprNode::Ufn::Neg: return "(-" + a + ")";
                case ExprNode::Ufn::Exp: return "exp(" + a + ")";
                case ExprNode::Ufn::Ln: return "ln(" + a + ")";
                case ExprNode::Ufn::Sin: return "sin(" + a + ")";
                case ExprNode::Ufn::Cos: return "cos(" + a + ")";
                case ExprNode::Ufn::Sqrt: return "sqrt(" + a + ")";
                case ExprNode::Ufn::Abs: return "abs(" + a + ")";
            }
            break;
        }
        case ExprNode::Kind::Binary: {
            const char* op = "+";
            switch (n.bop) {
                case ExprNode::Bop::Add: op = "+"; break;
                case ExprNode::Bop::Sub: op = "-"; break;
                case ExprNode::Bop::Mul: op = "*"; break;
                case ExprNode::Bop::Div: op = "/"; break;
                case ExprNode::Bop::Pow: op = "^"; break;
            }
            return "(" + str_node(*n.lhs) + op + str_node(*n.rhs) + ")";
        }
    }
    return "?";
}

bool node_depends_on_t(const ExprNode& n) {
    if (n.kind == ExprNode::Kind::Var) return true;
    if (n.lhs && node_depends_on_t(*n.lhs)) return true;
    if (n.rhs && node_depends_on_t(*n.rhs)) return true;
    return false;
}

}  // namespace

double Expr::eval(double t) const { return eval_node(*root_, t); }

std::string Expr::str() const { return str_node(*root_); }

bool Expr::depends_on_t() const { return node_depends_on_t(*root_); }

Expr parse_expr(const std::string& text) { return Expr(Parser(text).run()); }

double eval_expr(const Expr& e, double t) { return e.eval(t); }

}  // namespace mfc
