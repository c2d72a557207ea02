#include "confrac/expr.hpp"

#include <algorithm>
#include <cstdio>
#include <unordered_map>
#include <unordered_set>

#include "evaluate.hpp"

namespace confrac {

std::string_view name_of(UnaryOp op) noexcept {
  switch (op) {
    case UnaryOp::neg: return "neg";
    case UnaryOp::sin: return "sin";
    case UnaryOp::cos: return "cos";
    case UnaryOp::tan: return "tan";
    case UnaryOp::exp: return "exp";
    case UnaryOp::ln: return "ln";
    case UnaryOp::sqrt: return "sqrt";
  }
  return "?";
}

std::string_view name_of(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::add: return "add";
    case BinaryOp::sub: return "sub";
    case BinaryOp::mul: return "mul";
    case BinaryOp::div: return "div";
    case BinaryOp::pow: return "pow";
  }
  return "?";
}

bool is_identifier(std::string_view name) noexcept {
  auto alpha = [](char c) { return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (name.empty() || !alpha(name.front())) return false;
  return std::all_of(name.begin() + 1, name.end(),
                     [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

// ---------------------------------------------------------------------------
// Expr

Expr Expr::constant(double value) { return Expr(node::Constant{value}); }

Expr Expr::variable(std::string name) {
  if (!is_identifier(name)) {
    throw ArgumentError("invalid variable name '" + name + "'");
  }
  return Expr(node::Variable{std::move(name)});
}

Expr Expr::unary(UnaryOp op, Expr child) {
  return Expr(node::Unary{op, std::make_shared<const Expr>(std::move(child))});
}

Expr Expr::binary(BinaryOp op, Expr left, Expr right) {
  return Expr(node::Binary{op, std::make_shared<const Expr>(std::move(left)),
                           std::make_shared<const Expr>(std::move(right))});
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.node_.index() != b.node_.index()) return false;
  if (const auto* c = a.as<node::Constant>()) {
    return c->value == b.as<node::Constant>()->value;
  }
  if (const auto* v = a.as<node::Variable>()) {
    return v->name == b.as<node::Variable>()->name;
  }
  if (const auto* u = a.as<node::Unary>()) {
    const auto* w = b.as<node::Unary>();
    return u->op == w->op && *u->child == *w->child;
  }
  const auto& x = std::get<node::Binary>(a.node_);
  const auto& y = std::get<node::Binary>(b.node_);
  return x.op == y.op && *x.left == *y.left && *x.right == *y.right;
}

namespace {
void collect_variables(const Expr& e, std::vector<std::string>& out) {
  if (const auto* v = e.as<node::Variable>()) {
    if (std::find(out.begin(), out.end(), v->name) == out.end()) {
      out.push_back(v->name);
    }
  } else if (const auto* u = e.as<node::Unary>()) {
    collect_variables(*u->child, out);
  } else if (const auto* b = e.as<node::Binary>()) {
    collect_variables(*b->left, out);
    collect_variables(*b->right, out);
  }
}
}  // namespace

std::vector<std::string> Expr::free_variables() const {
  std::vector<std::string> out;
  collect_variables(*this, out);
  return out;
}

bool Expr::mentions(std::string_view variable) const {
  if (const auto* v = as<node::Variable>()) return v->name == variable;
  if (const auto* u = as<node::Unary>()) return u->child->mentions(variable);
  if (const auto* b = as<node::Binary>()) {
    return b->left->mentions(variable) || b->right->mentions(variable);
  }
  return false;
}

Expr operator+(Expr a, Expr b) { return Expr::binary(BinaryOp::add, std::move(a), std::move(b)); }
Expr operator-(Expr a, Expr b) { return Expr::binary(BinaryOp::sub, std::move(a), std::move(b)); }
Expr operator*(Expr a, Expr b) { return Expr::binary(BinaryOp::mul, std::move(a), std::move(b)); }
Expr operator/(Expr a, Expr b) { return Expr::binary(BinaryOp::div, std::move(a), std::move(b)); }
Expr operator-(Expr a) { return Expr::unary(UnaryOp::neg, std::move(a)); }

// ---------------------------------------------------------------------------
// FunctionDef

FunctionDef::FunctionDef(std::vector<Expr> components,
                         std::vector<std::string> variables)
    : components_(std::move(components)), variables_(std::move(variables)) {
  if (components_.empty()) throw ArgumentError("function has no components");
  if (variables_.empty()) throw ArgumentError("function has no variables");
  std::unordered_set<std::string_view> seen;
  for (const auto& v : variables_) {
    if (!is_identifier(v)) throw ArgumentError("invalid variable name '" + v + "'");
    if (!seen.insert(v).second) throw ArgumentError("duplicate variable '" + v + "'");
  }
  for (const auto& c : components_) {
    for (const auto& v : c.free_variables()) {
      if (!seen.contains(v)) throw UnknownVariable(v);
    }
  }
}

FunctionDef FunctionDef::component(std::size_t i) const {
  if (i >= m()) {
    throw IndexError("component " + std::to_string(i) + " out of range for m=" +
                     std::to_string(m()));
  }
  return FunctionDef({components_[i]}, variables_);
}

std::size_t FunctionDef::index_of(std::string_view name) const noexcept {
  const auto it = std::find(variables_.begin(), variables_.end(), name);
  return static_cast<std::size_t>(it - variables_.begin());
}

// ---------------------------------------------------------------------------
// Parser

namespace {

const std::unordered_map<std::string_view, UnaryOp>& function_table() {
  static const std::unordered_map<std::string_view, UnaryOp> table{
      {"sin", UnaryOp::sin}, {"cos", UnaryOp::cos}, {"tan", UnaryOp::tan},
      {"exp", UnaryOp::exp}, {"ln", UnaryOp::ln},   {"sqrt", UnaryOp::sqrt}};
  return table;
}

class Parser {
 public:
  // `declared == nullptr` accepts any identifier as a variable.
  Parser(std::string_view src, const std::vector<std::string>* declared)
      : src_(src), declared_(declared) {}

  std::vector<Expr> parse_list() {
    std::vector<Expr> out;
    out.push_back(expr());
    while (accept(',')) out.push_back(expr());
    skip_space();
    if (pos_ != src_.size()) error("unexpected '" + std::string(1, src_[pos_]) + "'");
    return out;
  }

 private:
  [[noreturn]] void error(const std::string& msg) const { throw SyntaxError(pos_, msg); }

  void skip_space() {
    while (pos_ < src_.size() &&
           (src_[pos_] == ' ' || src_[pos_] == '\t' || src_[pos_] == '\n' || src_[pos_] == '\r')) {
      ++pos_;
    }
  }

  bool peek(char c) {
    skip_space();
    return pos_ < src_.size() && src_[pos_] == c;
  }

  bool accept(char c) {
    if (!peek(c)) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      error(pos_ < src_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
  }

  Expr expr() {
    Expr lhs = term();
    for (;;) {
      if (accept('+')) lhs = Expr::binary(BinaryOp::add, std::move(lhs), term());
      else if (accept('-')) lhs = Expr::binary(BinaryOp::sub, std::move(lhs), term());
      else return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      if (accept('*')) lhs = Expr::binary(BinaryOp::mul, std::move(lhs), factor());
      else if (accept('/')) lhs = Expr::binary(BinaryOp::div, std::move(lhs), factor());
      else return lhs;
    }
  }

  Expr factor() {
    if (accept('-')) return Expr::unary(UnaryOp::neg, factor());
    return power();
  }

  Expr power() {
    Expr base = atom();
    if (accept('^')) return Expr::binary(BinaryOp::pow, std::move(base), factor());
    return base;
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  Expr atom() {
    skip_space();
    if (pos_ == src_.size()) error("unexpected end of input");
    const char c = src_[pos_];
    if (is_digit(c)) return number();
    if (is_identifier(std::string_view(&src_[pos_], 1))) return identifier();
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    error("unexpected '" + std::string(1, c) + "'");
  }

  // digits ('.' digits)? ([eE] [+-]? digits)?
  Expr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < src_.size() && is_digit(src_[pos_])) ++pos_;
      return pos_ > from;
    };
    digits();
    if (pos_ < src_.size() && src_[pos_] == '.') {
      ++pos_;
      if (!digits()) error("expected digits after '.'");
    }
    if (pos_ < src_.size() && (src_[pos_] == 'e' || src_[pos_] == 'E')) {
      ++pos_;
      if (pos_ < src_.size() && (src_[pos_] == '+' || src_[pos_] == '-')) ++pos_;
      if (!digits()) error("expected digits in exponent");
    }
    const std::string text(src_.substr(start, pos_ - start));
    // strtod is correctly rounded for plain decimal text.
    return Expr::constant(std::strtod(text.c_str(), nullptr));
  }

  Expr identifier() {
    const std::size_t start = pos_;
    while (pos_ < src_.size() && is_identifier(src_.substr(start, pos_ - start + 1))) ++pos_;
    const std::string name(src_.substr(start, pos_ - start));
    if (peek('(')) {
      const auto& table = function_table();
      const auto it = table.find(name);
      if (it == table.end()) {
        if (is_declared(name)) {
          pos_ = start;
          error("'" + name + "' is a variable, not a function");
        }
        throw UnknownVariable(name);
      }
      ++pos_;  // '('
      Expr arg = expr();
      expect(')');
      return Expr::unary(it->second, std::move(arg));
    }
    if (declared_ != nullptr && !is_declared(name)) {
      if (function_table().contains(name)) {
        error("function '" + name + "' needs an argument list");
      }
      throw UnknownVariable(name);
    }
    return Expr::variable(name);
  }

  bool is_declared(const std::string& name) const {
    return declared_ != nullptr &&
           std::find(declared_->begin(), declared_->end(), name) != declared_->end();
  }

  std::string_view src_;
  const std::vector<std::string>* declared_;
  std::size_t pos_ = 0;
};

}  // namespace

FunctionDef parse(std::string_view source, std::vector<std::string> variables) {
  Parser p(source, &variables);
  auto components = p.parse_list();
  return FunctionDef(std::move(components), std::move(variables));
}

Expr parse_expr(std::string_view source) {
  Parser p(source, nullptr);
  auto list = p.parse_list();
  if (list.size() != 1) throw SyntaxError(0, "expected a single expression");
  return std::move(list.front());
}

FunctionDef parse_inferring_variables(std::string_view source) {
  Parser p(source, nullptr);
  auto components = p.parse_list();
  std::vector<std::string> vars;
  for (const auto& c : components) collect_variables(c, vars);
  if (vars.empty()) {
    throw ArgumentError("expression mentions no variables to infer");
  }
  return FunctionDef(std::move(components), std::move(vars));
}

// ---------------------------------------------------------------------------
// Unparse

namespace {

// Binding strength of the grammar levels.
enum Level : int { kSum = 1, kProduct = 2, kFactor = 3, kPower = 4, kAtom = 5 };

int level_of(const Expr& e) {
  if (const auto* c = e.as<node::Constant>()) return c->value < 0 ? kSum : kAtom;
  if (e.as<node::Variable>()) return kAtom;
  if (const auto* u = e.as<node::Unary>()) return u->op == UnaryOp::neg ? kFactor : kAtom;
  switch (std::get<node::Binary>(e.node()).op) {
    case BinaryOp::add:
    case BinaryOp::sub: return kSum;
    case BinaryOp::mul:
    case BinaryOp::div: return kProduct;
    case BinaryOp::pow: return kPower;
  }
  return kAtom;
}

void write(const Expr& e, std::string& out);

void write_at_least(const Expr& e, int min_level, std::string& out) {
  if (level_of(e) >= min_level) {
    write(e, out);
  } else {
    out += '(';
    write(e, out);
    out += ')';
  }
}

void write(const Expr& e, std::string& out) {
  if (const auto* c = e.as<node::Constant>()) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", c->value < 0 ? -c->value : c->value);
    if (c->value < 0) out += '-';
    out += buf;
    return;
  }
  if (const auto* v = e.as<node::Variable>()) {
    out += v->name;
    return;
  }
  if (const auto* u = e.as<node::Unary>()) {
    if (u->op == UnaryOp::neg) {
      out += '-';
      write_at_least(*u->child, kFactor, out);
    } else {
      out += name_of(u->op);
      out += '(';
      write(*u->child, out);
      out += ')';
    }
    return;
  }
  const auto& b = std::get<node::Binary>(e.node());
  switch (b.op) {
    case BinaryOp::add:
    case BinaryOp::sub:
      write_at_least(*b.left, kSum, out);
      out += b.op == BinaryOp::add ? " + " : " - ";
      write_at_least(*b.right, kProduct, out);
      break;
    case BinaryOp::mul:
    case BinaryOp::div:
      write_at_least(*b.left, kProduct, out);
      out += b.op == BinaryOp::mul ? "*" : "/";
      write_at_least(*b.right, kFactor, out);
      break;
    case BinaryOp::pow:
      write_at_least(*b.left, kAtom, out);
      out += '^';
      write_at_least(*b.right, kFactor, out);
      break;
  }
}

}  // namespace

std::string unparse(const Expr& e) {
  std::string out;
  write(e, out);
  return out;
}

std::string unparse(const FunctionDef& f) {
  std::string out;
  for (std::size_t i = 0; i < f.m(); ++i) {
    if (i > 0) out += ", ";
    write(f.components()[i], out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Evaluation and substitution

std::vector<double> eval(const FunctionDef& f, std::span<const double> a) {
  if (a.size() != f.n()) {
    throw DimensionError("point has " + std::to_string(a.size()) +
                         " coordinates, function has " + std::to_string(f.n()) +
                         " variables");
  }
  const detail::Evaluator<double> ev(f, a);
  std::vector<double> out(f.m());
  for (std::size_t i = 0; i < f.m(); ++i) out[i] = ev.component(i);
  return out;
}

namespace {
Expr replace(const Expr& e, const FunctionDef& g, const FunctionDef& f) {
  if (const auto* v = e.as<node::Variable>()) return f.components()[g.index_of(v->name)];
  if (const auto* u = e.as<node::Unary>()) return Expr::unary(u->op, replace(*u->child, g, f));
  if (const auto* b = e.as<node::Binary>()) {
    return Expr::binary(b->op, replace(*b->left, g, f), replace(*b->right, g, f));
  }
  return e;
}
}  // namespace

FunctionDef substitute(const FunctionDef& g, const FunctionDef& f) {
  if (g.n() != f.m()) {
    throw DimensionError("cannot compose: outer function has " + std::to_string(g.n()) +
                         " variables, inner function has " + std::to_string(f.m()) +
                         " components");
  }
  std::vector<Expr> out;
  out.reserve(g.m());
  for (const auto& c : g.components()) out.push_back(replace(c, g, f));
  return FunctionDef(std::move(out), f.variables());
}

}  // namespace confrac
