#include "nullcone/expr.hpp"

#include <charconv>
#include <cctype>
#include <cmath>
#include <numbers>
#include <system_error>

#include "nullcone/error.hpp"

namespace nullcone {

namespace {

NodePtr make_node(ExprNode n) { return std::make_shared<const ExprNode>(std::move(n)); }

NodePtr constant(double v, std::size_t offset, std::string literal = {}) {
  ExprNode n;
  n.kind = NodeKind::Constant;
  n.value = v;
  n.literal = std::move(literal);
  n.offset = offset;
  return make_node(std::move(n));
}

NodePtr unary(NodeKind k, NodePtr a, std::size_t offset) {
  ExprNode n;
  n.kind = k;
  n.lhs = std::move(a);
  n.offset = offset;
  return make_node(std::move(n));
}

NodePtr binary(NodeKind k, NodePtr a, NodePtr b, std::size_t offset) {
  ExprNode n;
  n.kind = k;
  n.lhs = std::move(a);
  n.rhs = std::move(b);
  n.offset = offset;
  return make_node(std::move(n));
}

bool is_unary_kind(NodeKind k) {
  switch (k) {
    case NodeKind::Neg: case NodeKind::Sin: case NodeKind::Cos: case NodeKind::Tan:
    case NodeKind::Exp: case NodeKind::Log: case NodeKind::Sqrt:
      return true;
    default:
      return false;
  }
}

bool has_variable(const NodePtr& n) {
  if (!n) return false;
  if (n->kind == NodeKind::Variable) return true;
  return has_variable(n->lhs) || has_variable(n->rhs);
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : src_(src) {}

  NodePtr parse() {
    NodePtr e = expression();
    skip_ws();
    if (pos_ != src_.size()) fail("unexpected '" + std::string(1, src_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw Error(ErrorCode::Parse, msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw Error(ErrorCode::Parse, msg, at);
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < src_.size() && src_[pos_] == c;
  }
  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  NodePtr expression() {
    NodePtr lhs = term();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('+')) lhs = binary(NodeKind::Add, lhs, term(), at);
      else if (accept('-')) lhs = binary(NodeKind::Sub, lhs, term(), at);
      else return lhs;
    }
  }

  NodePtr term() {
    NodePtr lhs = unary_expr();
    for (;;) {
      skip_ws();
      const std::size_t at = pos_;
      if (accept('*')) lhs = binary(NodeKind::Mul, lhs, unary_expr(), at);
      else if (accept('/')) lhs = binary(NodeKind::Div, lhs, unary_expr(), at);
      else return lhs;
    }
  }

  NodePtr unary_expr() {
    skip_ws();
    const std::size_t at = pos_;
    if (accept('-')) return unary(NodeKind::Neg, unary_expr(), at);
    return power();
  }

  NodePtr power() {
    NodePtr base = primary();
    skip_ws();
    const std::size_t at = pos_;
    if (!accept('^')) return base;
    skip_ws();
    const std::size_t exp_at = pos_;
    NodePtr exponent = unary_expr();
    if (has_variable(exponent)) fail_at("non-constant exponent", exp_at);
    return binary(NodeKind::Pow, base, exponent, at);
  }

  NodePtr primary() {
    skip_ws();
    if (pos_ >= src_.size()) fail("unexpected end of expression");
    const std::size_t at = pos_;
    const char ch = src_[pos_];
    if (ch == '(') {
      ++pos_;
      NodePtr e = expression();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(ch)) || ch == '.') return number();
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t end = pos_;
      while (end < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[end])) || src_[end] == '_'))
        ++end;
      const std::string_view id = src_.substr(pos_, end - pos_);
      if (id == "x1" || id == "x2" || id == "x3") {
        pos_ = end;
        ExprNode n;
        n.kind = NodeKind::Variable;
        n.var = id[1] - '1';
        n.offset = at;
        return make_node(std::move(n));
      }
      if (id == "pi") {
        pos_ = end;
        return constant(std::numbers::pi, at, "pi");
      }
      NodeKind fn;
      if (id == "sin") fn = NodeKind::Sin;
      else if (id == "cos") fn = NodeKind::Cos;
      else if (id == "tan") fn = NodeKind::Tan;
      else if (id == "exp") fn = NodeKind::Exp;
      else if (id == "log") fn = NodeKind::Log;
      else if (id == "sqrt") fn = NodeKind::Sqrt;
      else fail_at("unknown symbol '" + std::string(id) + "'", at);
      pos_ = end;
      if (!accept('(')) fail("expected '(' after function name");
      NodePtr arg = expression();
      if (!accept(')')) fail("expected ')'");
      return unary(fn, arg, at);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  NodePtr number() {
    const std::size_t at = pos_;
    std::size_t end = pos_;
    auto digits = [&] {
      while (end < src_.size() && std::isdigit(static_cast<unsigned char>(src_[end]))) ++end;
    };
    digits();
    if (end < src_.size() && src_[end] == '.') {
      ++end;
      digits();
    }
    if (end < src_.size() && (src_[end] == 'e' || src_[end] == 'E')) {
      std::size_t save = end;
      ++end;
      if (end < src_.size() && (src_[end] == '+' || src_[end] == '-')) ++end;
      const std::size_t before = end;
      digits();
      if (end == before) end = save;
    }
    const std::string text(src_.substr(at, end - at));
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size())
      fail_at("malformed number '" + text + "'", at);
    pos_ = end;
    return constant(v, at, text);
  }

  std::string_view src_;
  std::size_t pos_ = 0;
};

// -------------------------------------------------------------- builders
// Light algebraic folding keeps derivative trees small; it never changes
// the value of an expression.

bool is_const(const NodePtr& n, double v) { return n->kind == NodeKind::Constant && n->value == v; }
bool is_const(const NodePtr& n) { return n->kind == NodeKind::Constant; }

NodePtr mk_neg(NodePtr a, std::size_t off) {
  if (is_const(a)) return constant(-a->value, off);
  if (a->kind == NodeKind::Neg) return a->lhs;
  return unary(NodeKind::Neg, std::move(a), off);
}

NodePtr mk_add(NodePtr a, NodePtr b, std::size_t off) {
  if (is_const(a, 0.0)) return b;
  if (is_const(b, 0.0)) return a;
  if (is_const(a) && is_const(b)) return constant(a->value + b->value, off);
  return binary(NodeKind::Add, std::move(a), std::move(b), off);
}

NodePtr mk_sub(NodePtr a, NodePtr b, std::size_t off) {
  if (is_const(b, 0.0)) return a;
  if (is_const(a, 0.0)) return mk_neg(std::move(b), off);
  if (is_const(a) && is_const(b)) return constant(a->value - b->value, off);
  return binary(NodeKind::Sub, std::move(a), std::move(b), off);
}

NodePtr mk_mul(NodePtr a, NodePtr b, std::size_t off) {
  if (is_const(a, 0.0) || is_const(b, 0.0)) return constant(0.0, off);
  if (is_const(a, 1.0)) return b;
  if (is_const(b, 1.0)) return a;
  if (is_const(a) && is_const(b)) return constant(a->value * b->value, off);
  return binary(NodeKind::Mul, std::move(a), std::move(b), off);
}

NodePtr mk_div(NodePtr a, NodePtr b, std::size_t off) {
  if (is_const(a, 0.0)) return constant(0.0, off);
  if (is_const(b, 1.0)) return a;
  return binary(NodeKind::Div, std::move(a), std::move(b), off);
}

NodePtr mk_pow(NodePtr a, NodePtr exponent, std::size_t off) {
  if (is_const(exponent, 0.0)) return constant(1.0, off);
  if (is_const(exponent, 1.0)) return a;
  return binary(NodeKind::Pow, std::move(a), std::move(exponent), off);
}

// ------------------------------------------------------------ evaluation

[[noreturn]] void eval_fail(const std::string& msg, const ExprNode& n) {
  throw Error(ErrorCode::Eval, msg, n.offset);
}

double eval_node(const ExprNode& n, const ChartPoint& p) {
  switch (n.kind) {
    case NodeKind::Constant: return n.value;
    case NodeKind::Variable: return p[n.var];
    case NodeKind::Neg: return -eval_node(*n.lhs, p);
    case NodeKind::Sin: return std::sin(eval_node(*n.lhs, p));
    case NodeKind::Cos: return std::cos(eval_node(*n.lhs, p));
    case NodeKind::Tan: {
      const double a = eval_node(*n.lhs, p);
      if (std::cos(a) == 0.0) eval_fail("tan at a pole", n);
      return std::tan(a);
    }
    case NodeKind::Exp: return std::exp(eval_node(*n.lhs, p));
    case NodeKind::Log: {
      const double a = eval_node(*n.lhs, p);
      if (!(a > 0.0)) eval_fail("log of a non-positive value", n);
      return std::log(a);
    }
    case NodeKind::Sqrt: {
      const double a = eval_node(*n.lhs, p);
      if (a < 0.0) eval_fail("sqrt of a negative value", n);
      return std::sqrt(a);
    }
    case NodeKind::Add: return eval_node(*n.lhs, p) + eval_node(*n.rhs, p);
    case NodeKind::Sub: return eval_node(*n.lhs, p) - eval_node(*n.rhs, p);
    case NodeKind::Mul: return eval_node(*n.lhs, p) * eval_node(*n.rhs, p);
    case NodeKind::Div: {
      const double b = eval_node(*n.rhs, p);
      if (b == 0.0) eval_fail("division by zero", n);
      return eval_node(*n.lhs, p) / b;
    }
    case NodeKind::Pow: {
      const double a = eval_node(*n.lhs, p);
      const double b = eval_node(*n.rhs, p);
      if (a < 0.0 && b != std::floor(b)) eval_fail("non-integer power of a negative value", n);
      if (a == 0.0 && b < 0.0) eval_fail("negative power of zero", n);
      return std::pow(a, b);
    }
  }
  eval_fail("corrupt expression node", n);
}

// --------------------------------------------------------- differentiation

NodePtr diff_node(const NodePtr& n, int var) {
  const std::size_t off = n->offset;
  switch (n->kind) {
    case NodeKind::Constant: return constant(0.0, off);
    case NodeKind::Variable: return constant(n->var == var ? 1.0 : 0.0, off);
    case NodeKind::Neg: return mk_neg(diff_node(n->lhs, var), off);
    case NodeKind::Add: return mk_add(diff_node(n->lhs, var), diff_node(n->rhs, var), off);
    case NodeKind::Sub: return mk_sub(diff_node(n->lhs, var), diff_node(n->rhs, var), off);
    case NodeKind::Mul:
      return mk_add(mk_mul(diff_node(n->lhs, var), n->rhs, off),
                    mk_mul(n->lhs, diff_node(n->rhs, var), off), off);
    case NodeKind::Div: {
      NodePtr da = diff_node(n->lhs, var);
      NodePtr db = diff_node(n->rhs, var);
      if (is_const(db, 0.0)) return mk_div(std::move(da), n->rhs, off);
      NodePtr num = mk_sub(mk_mul(da, n->rhs, off), mk_mul(n->lhs, db, off), off);
      return mk_div(std::move(num), mk_pow(n->rhs, constant(2.0, off), off), off);
    }
    default: break;
  }
  const NodePtr& a = n->lhs;
  NodePtr da = diff_node(a, var);
  if (is_const(da, 0.0)) return constant(0.0, off);
  switch (n->kind) {
    case NodeKind::Sin: return mk_mul(unary(NodeKind::Cos, a, off), da, off);
    case NodeKind::Cos: return mk_mul(mk_neg(unary(NodeKind::Sin, a, off), off), da, off);
    case NodeKind::Tan:
      return mk_div(da, mk_pow(unary(NodeKind::Cos, a, off), constant(2.0, off), off), off);
    case NodeKind::Exp: return mk_mul(n, da, off);
    case NodeKind::Log: return mk_div(da, a, off);
    case NodeKind::Sqrt: return mk_div(da, mk_mul(constant(2.0, off), n, off), off);
    case NodeKind::Pow: {
      const NodePtr& e = n->rhs;
      NodePtr lowered = is_const(e) ? constant(e->value - 1.0, off)
                                    : binary(NodeKind::Sub, e, constant(1.0, off), off);
      return mk_mul(mk_mul(e, mk_pow(a, lowered, off), off), da, off);
    }
    default: break;
  }
  throw Error(ErrorCode::InvalidArgument, "cannot differentiate expression node", off);
}

// -------------------------------------------------------------- printing

int precedence(const ExprNode& n) {
  switch (n.kind) {
    case NodeKind::Add: case NodeKind::Sub: return 1;
    case NodeKind::Mul: case NodeKind::Div: return 2;
    case NodeKind::Neg: return 3;
    case NodeKind::Pow: return 4;
    case NodeKind::Constant: return n.value < 0.0 ? 3 : 5;
    default: return 5;
  }
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

void print(const ExprNode& n, std::string& out);

void print_wrapped(const ExprNode& n, bool parens, std::string& out) {
  if (parens) out += '(';
  print(n, out);
  if (parens) out += ')';
}

void print(const ExprNode& n, std::string& out) {
  switch (n.kind) {
    case NodeKind::Constant:
      out += n.literal.empty() ? format_double(n.value) : n.literal;
      return;
    case NodeKind::Variable:
      out += "x";
      out += static_cast<char>('1' + n.var);
      return;
    case NodeKind::Neg:
      out += '-';
      print_wrapped(*n.lhs, precedence(*n.lhs) < 3, out);
      return;
    case NodeKind::Pow:
      print_wrapped(*n.lhs, precedence(*n.lhs) <= 4, out);
      out += '^';
      print_wrapped(*n.rhs, precedence(*n.rhs) < 3, out);
      return;
    default: break;
  }
  if (is_unary_kind(n.kind)) {
    static constexpr const char* names[] = {"sin", "cos", "tan", "exp", "log", "sqrt"};
    out += names[static_cast<int>(n.kind) - static_cast<int>(NodeKind::Sin)];
    out += '(';
    print(*n.lhs, out);
    out += ')';
    return;
  }
  const int p = precedence(n);
  char op = '+';
  if (n.kind == NodeKind::Sub) op = '-';
  else if (n.kind == NodeKind::Mul) op = '*';
  else if (n.kind == NodeKind::Div) op = '/';
  print_wrapped(*n.lhs, precedence(*n.lhs) < p, out);
  out += op;
  print_wrapped(*n.rhs, precedence(*n.rhs) <= p, out);
}

}  // namespace

Expr::Expr() : root_(constant(0.0, 0)) {}

bool Expr::is_constant() const { return !has_variable(root_); }
bool Expr::is_zero() const { return is_const(root_, 0.0); }

Expr parse_expr(std::string_view src) { return Expr(Parser(src).parse()); }

Expr diff_expr(const Expr& e, int var) {
  if (var < 0 || var > 2) throw Error(ErrorCode::InvalidArgument, "variable index must be 0, 1 or 2");
  return Expr(diff_node(e.node(), var));
}

double eval_expr(const Expr& e, const ChartPoint& p) {
  const double v = eval_node(e.root(), p);
  if (!std::isfinite(v)) eval_fail("non-finite result", e.root());
  return v;
}

std::string to_string(const Expr& e) {
  std::string out;
  print(e.root(), out);
  return out;
}

}  // namespace nullcone
