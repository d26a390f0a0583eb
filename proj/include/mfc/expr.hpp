#pragma once

#include <memory>
#include <string>

#include "mfc/errors.hpp"

namespace mfc {

// Immutable expression tree over the single variable t.
//
// Grammar (whitespace insignificant, no implicit multiplication):
//   expr    := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := '-' factor | base
//   base    := primary ('^' factor)?
//   primary := number | 't' | 'e' | 'pi' | ident '(' expr ')' | '(' expr ')'
//   ident   := exp | ln | sin | cos | sqrt | abs
// '^' is right-associative and binds tighter than unary minus, so
// "-2^2" is -(2^2) and "2^3^2" is 2^(3^2).
struct ExprNode;

class Expr {
  public:
    double eval(double t) const;
    std::string str() const;        // fully parenthesized round-trip form
    bool depends_on_t() const;

  private:
    explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}
    std::shared_ptr<const ExprNode> root_;
    friend Expr parse_expr(const std::string&);
};

// Throws SyntaxError (with byte offset and an expected-token description) or
// UnknownFunction.
Expr parse_expr(const std::string& text);

// Standard real evaluation; ln of a nonpositive value, division by zero and
// pow leaving the reals throw EvalDomainError naming the offending node.
double eval_expr(const Expr& e, double t);

}  // namespace mfc
