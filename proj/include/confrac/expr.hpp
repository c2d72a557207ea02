#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "confrac/errors.hpp"

namespace confrac {

enum class UnaryOp { neg, sin, cos, tan, exp, ln, sqrt };
enum class BinaryOp { add, sub, mul, div, pow };

std::string_view name_of(UnaryOp op) noexcept;
std::string_view name_of(BinaryOp op) noexcept;

class Expr;

namespace node {
struct Constant {
  double value;
};
struct Variable {
  std::string name;
};
struct Unary {
  UnaryOp op;
  std::shared_ptr<const Expr> child;
};
struct Binary {
  BinaryOp op;
  std::shared_ptr<const Expr> left;
  std::shared_ptr<const Expr> right;
};
}  // namespace node

/// Immutable expression tree for a scalar function of named variables.
///
/// Children are shared, so copying an Expr is cheap and subtrees may be
/// reused freely (substitution relies on this). Trees are acyclic by
/// construction: a node can only point at nodes built before it.
class Expr {
 public:
  using Node =
      std::variant<node::Constant, node::Variable, node::Unary, node::Binary>;

  static Expr constant(double value);
  /// Throws ArgumentError unless `name` matches [A-Za-z][A-Za-z0-9_]*.
  static Expr variable(std::string name);
  static Expr unary(UnaryOp op, Expr child);
  static Expr binary(BinaryOp op, Expr left, Expr right);

  const Node& node() const noexcept { return node_; }

  template <class T>
  const T* as() const noexcept {
    return std::get_if<T>(&node_);
  }

  /// Structural equality (constants compared bitwise-equal as doubles).
  friend bool operator==(const Expr& a, const Expr& b);

  /// Variable names in order of first appearance (depth first, left to right).
  std::vector<std::string> free_variables() const;

  bool mentions(std::string_view variable) const;

 private:
  explicit Expr(Node n) : node_(std::move(n)) {}
  Node node_;
};

Expr operator+(Expr a, Expr b);
Expr operator-(Expr a, Expr b);
Expr operator*(Expr a, Expr b);
Expr operator/(Expr a, Expr b);
Expr operator-(Expr a);

bool is_identifier(std::string_view name) noexcept;

/// f : R^n -> R^m as an ordered list of components over ordered variables.
class FunctionDef {
 public:
  /// Throws ArgumentError for empty lists, malformed or duplicate variable
  /// names; UnknownVariable if a component uses an undeclared name.
  FunctionDef(std::vector<Expr> components, std::vector<std::string> variables);

  std::size_t m() const noexcept { return components_.size(); }
  std::size_t n() const noexcept { return variables_.size(); }

  const std::vector<Expr>& components() const noexcept { return components_; }
  const std::vector<std::string>& variables() const noexcept {
    return variables_;
  }

  /// Single-component function f_i over the same variables.
  FunctionDef component(std::size_t i) const;

  /// Position of `name` in variables(), or n() if absent.
  std::size_t index_of(std::string_view name) const noexcept;

 private:
  std::vector<Expr> components_;
  std::vector<std::string> variables_;
};

/// Parses a comma-separated list of expressions over `variables`.
///
///   expr   := term (('+'|'-') term)*
///   term   := factor (('*'|'/') factor)*
///   factor := '-' factor | power
///   power  := atom ('^' factor)?
///   atom   := NUMBER | IDENT | IDENT '(' expr ')' | '(' expr ')'
///
/// Throws SyntaxError or UnknownVariable.
FunctionDef parse(std::string_view source, std::vector<std::string> variables);

/// Parses a single expression without a declared variable list; every
/// identifier that is not followed by '(' is taken as a variable.
Expr parse_expr(std::string_view source);

/// Like parse(), but the variable list is taken from the source in order of
/// first appearance.
FunctionDef parse_inferring_variables(std::string_view source);

/// Source text that parses back to a structurally identical tree. Numbers are
/// written with 17 significant digits.
std::string unparse(const Expr& e);
std::string unparse(const FunctionDef& f);

/// Componentwise real evaluation at `a` (length n). Throws DimensionError on
/// a length mismatch and EvalDomainError outside the domain.
std::vector<double> eval(const FunctionDef& f, std::span<const double> a);

/// g o f: each variable of g is replaced by the matching component of f.
/// Requires g.n() == f.m(); the result is over f's variables.
FunctionDef substitute(const FunctionDef& g, const FunctionDef& f);

}  // namespace confrac
