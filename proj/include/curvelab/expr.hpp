#ifndef CURVELAB_EXPR_HPP
#define CURVELAB_EXPR_HPP

#include <memory>
#include <string>
#include <tuple>

#include "curvelab/dual.hpp"

namespace curvelab {

// Immutable arithmetic expression in one variable x.
//
// Grammar (recursive descent):
//   expr    := term (('+'|'-') term)*
//   term    := unary (('*'|'/') unary)*
//   unary   := '-' unary | power
//   power   := atom ('^' unary)?          -- right-associative, binds
//                                            tighter than unary minus
//   atom    := number | 'x' | func '(' expr ')' | '(' expr ')'
//   func    := sin | cos | exp | log | sqrt | cosh | sinh
struct ExprNode {
  enum class Kind { Number, Variable, Unary, Binary, Call };

  Kind kind;
  double number = 0.0;
  char op = 0;       // + - * / ^ for Binary, '-' for Unary
  std::string func;  // for Call
  std::shared_ptr<const ExprNode> lhs;
  std::shared_ptr<const ExprNode> rhs;
};

using ExprPtr = std::shared_ptr<const ExprNode>;

// Throws SyntaxError (with byte offset) on malformed input; never accepts
// a string the grammar rejects.
ExprPtr parse_expression(const std::string& text);

// Value plus first and second derivative at x, via forward duals.
// Throws DomainError naming the offending function node.
std::tuple<double, double, double> eval_dual(const ExprPtr& ast, double x);

double eval_expr(const ExprPtr& ast, double x);

// Fully parenthesized rendering; parse(format(e)) is structurally identical.
std::string format_expr(const ExprPtr& ast);

bool expr_equal(const ExprPtr& a, const ExprPtr& b);

}  // namespace curvelab

#endif
