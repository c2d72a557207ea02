#pragma once

// Tree evaluator shared by plain evaluation (double) and forward-mode
// differentiation (Dual). Domain checks live here so both paths report the
// same node path.

#include <cmath>
#include <span>
#include <string>
#include <type_traits>

#include "confrac/dual.hpp"
#include "confrac/errors.hpp"
#include "confrac/expr.hpp"

namespace confrac::detail {

inline double value_of(double x) { return x; }
inline double value_of(const Dual& x) { return x.value; }
inline double deriv_of(double) { return 0.0; }
inline double deriv_of(const Dual& x) { return x.deriv; }

inline bool is_integer(double x) { return std::isfinite(x) && std::trunc(x) == x; }

template <class Scalar>
class Evaluator {
 public:
  Evaluator(const FunctionDef& f, std::span<const Scalar> env)
      : f_(f), env_(env) {}

  Scalar component(std::size_t i) const {
    try {
      return eval(f_.components()[i]);
    } catch (EvalDomainError& e) {
      e.prepend("f[" + std::to_string(i) + "]");
      throw;
    }
  }

 private:
  static constexpr bool kDual = std::is_same_v<Scalar, Dual>;

  template <class Error = EvalDomainError>
  [[noreturn]] static void fail(const std::string& reason,
                                std::string_view label) {
    throw Error(reason, std::string(label));
  }

  Scalar eval(const Expr& e) const {
    const auto& n = e.node();
    if (const auto* c = std::get_if<node::Constant>(&n)) {
      return Scalar(c->value);
    }
    if (const auto* v = std::get_if<node::Variable>(&n)) {
      return env_[f_.index_of(v->name)];
    }
    if (const auto* u = std::get_if<node::Unary>(&n)) {
      return unary(*u);
    }
    return binary(std::get<node::Binary>(n));
  }

  Scalar child(const Expr& e, std::string_view parent,
               std::string_view side) const {
    try {
      return eval(e);
    } catch (EvalDomainError& err) {
      err.prepend(std::string(parent) + ":" + std::string(side));
      throw;
    }
  }

  Scalar unary(const node::Unary& u) const {
    using std::cos;
    using std::exp;
    using std::log;
    using std::sin;
    using std::sqrt;
    using std::tan;
    const auto label = name_of(u.op);
    const Scalar x = child(*u.child, label, "arg");
    const double xv = value_of(x);
    switch (u.op) {
      case UnaryOp::neg:
        return -x;
      case UnaryOp::sin:
        return sin(x);
      case UnaryOp::cos:
        return cos(x);
      case UnaryOp::tan:
        return tan(x);
      case UnaryOp::exp:
        return exp(x);
      case UnaryOp::ln:
        if (!(xv > 0.0)) fail("ln of non-positive value", label);
        return log(x);
      case UnaryOp::sqrt:
        if (xv < 0.0) fail("sqrt of negative value", label);
        if constexpr (kDual) {
          if (xv == 0.0 && deriv_of(x) != 0.0) {
            fail<DerivativeDomainError>("sqrt is not differentiable at 0",
                                        label);
          }
        }
        return sqrt(x);
    }
    return x;
  }

  Scalar binary(const node::Binary& b) const {
    const auto label = name_of(b.op);
    const Scalar l = child(*b.left, label, "lhs");
    const Scalar r = child(*b.right, label, "rhs");
    switch (b.op) {
      case BinaryOp::add:
        return l + r;
      case BinaryOp::sub:
        return l - r;
      case BinaryOp::mul:
        return l * r;
      case BinaryOp::div:
        if (value_of(r) == 0.0) fail("division by zero", label);
        return l / r;
      case BinaryOp::pow: {
        using std::pow;
        const double base = value_of(l);
        const double expo = value_of(r);
        if (!is_integer(expo) && !(base > 0.0)) {
          fail("non-integer power of non-positive base", label);
        }
        if (base == 0.0 && expo < 0.0) fail("division by zero", label);
        if constexpr (kDual) {
          if (deriv_of(r) != 0.0 && !(base > 0.0)) {
            fail<DerivativeDomainError>(
                "variable exponent requires a positive base", label);
          }
        }
        return pow(l, r);
      }
    }
    return l;
  }

  const FunctionDef& f_;
  std::span<const Scalar> env_;
};

}  // namespace confrac::detail
