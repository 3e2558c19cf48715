#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>

#include "nullcone/geometry.hpp"

namespace nullcone {

enum class NodeKind {
  Constant,
  Variable,
  Neg,
  Sin,
  Cos,
  Tan,
  Exp,
  Log,
  Sqrt,
  Add,
  Sub,
  Mul,
  Div,
  Pow,
};

struct ExprNode;
using NodePtr = std::shared_ptr<const ExprNode>;

struct ExprNode {
  NodeKind kind = NodeKind::Constant;
  double value = 0.0;   // Constant
  int var = 0;          // Variable: 0, 1, 2 for x1, x2, x3
  std::string literal;  // source spelling of a parsed constant, empty if synthesized
  NodePtr lhs;          // operand of unary nodes, left operand of binary nodes
  NodePtr rhs;
  std::size_t offset = 0;  // source position
};

/// Immutable expression tree over the chart variables x1, x2, x3.
/// The exponent of a power node never contains a variable.
class Expr {
 public:
  Expr();
  explicit Expr(NodePtr root) : root_(std::move(root)) {}

  const ExprNode& root() const { return *root_; }
  const NodePtr& node() const { return root_; }

  bool is_constant() const;
  bool is_zero() const;

 private:
  NodePtr root_;
};

/// Parses the usual infix grammar: + - (lowest), * /, unary minus, ^ (right
/// associative, highest), function calls sin cos tan exp log sqrt, the
/// constant pi, and variables x1 x2 x3.
Expr parse_expr(std::string_view src);

/// Symbolic partial derivative with respect to x_{var+1}.
Expr diff_expr(const Expr& e, int var);

double eval_expr(const Expr& e, const ChartPoint& p);

/// Canonical infix rendering with the minimum parentheses needed to parse
/// back to the same tree.
std::string to_string(const Expr& e);

}  // namespace nullcone
