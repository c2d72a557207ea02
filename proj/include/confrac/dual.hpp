#pragma once

#include <cmath>

namespace confrac {

/// Forward-mode dual number value + deriv*eps with eps^2 = 0.
///
/// The derivative part of every elementary function is written as
/// `outer'(value) * deriv`. When the incoming deriv is exactly zero the
/// product is forced to zero, so a subexpression that does not depend on the
/// seeded variable keeps an exact zero derivative even where outer' overflows.
struct Dual {
  double value = 0.0;
  double deriv = 0.0;

  constexpr Dual() = default;
  constexpr Dual(double v) : value(v) {}  // NOLINT: constants lift implicitly
  constexpr Dual(double v, double d) : value(v), deriv(d) {}

  static constexpr Dual variable(double v) { return {v, 1.0}; }

  friend constexpr bool operator==(const Dual&, const Dual&) = default;
};

namespace detail {
constexpr double chain(double outer_slope, double inner_deriv) {
  return inner_deriv == 0.0 ? 0.0 : outer_slope * inner_deriv;
}
}  // namespace detail

constexpr Dual operator-(const Dual& x) { return {-x.value, -x.deriv}; }
constexpr Dual operator+(const Dual& x, const Dual& y) {
  return {x.value + y.value, x.deriv + y.deriv};
}
constexpr Dual operator-(const Dual& x, const Dual& y) {
  return {x.value - y.value, x.deriv - y.deriv};
}
constexpr Dual operator*(const Dual& x, const Dual& y) {
  return {x.value * y.value,
          detail::chain(y.value, x.deriv) + detail::chain(x.value, y.deriv)};
}
constexpr Dual operator/(const Dual& x, const Dual& y) {
  const double q = x.value / y.value;
  return {q, detail::chain(1.0 / y.value, x.deriv) -
                 detail::chain(q / y.value, y.deriv)};
}

inline Dual sin(const Dual& x) {
  return {std::sin(x.value), detail::chain(std::cos(x.value), x.deriv)};
}
inline Dual cos(const Dual& x) {
  return {std::cos(x.value), detail::chain(-std::sin(x.value), x.deriv)};
}
inline Dual tan(const Dual& x) {
  const double c = std::cos(x.value);
  return {std::tan(x.value), detail::chain(1.0 / (c * c), x.deriv)};
}
inline Dual exp(const Dual& x) {
  const double e = std::exp(x.value);
  return {e, detail::chain(e, x.deriv)};
}
inline Dual log(const Dual& x) {
  return {std::log(x.value), detail::chain(1.0 / x.value, x.deriv)};
}
inline Dual sqrt(const Dual& x) {
  const double s = std::sqrt(x.value);
  return {s, detail::chain(0.5 / s, x.deriv)};
}

/// x^y. A constant exponent (y.deriv == 0) uses the power rule and works for
/// any base where the value is defined; otherwise d(exp(y ln x)) applies and
/// the caller must ensure x > 0.
inline Dual pow(const Dual& x, const Dual& y) {
  const double v = std::pow(x.value, y.value);
  if (y.deriv == 0.0) {
    if (y.value == 0.0) return {v, 0.0};
    return {v, detail::chain(y.value * std::pow(x.value, y.value - 1.0),
                             x.deriv)};
  }
  const double d = v * (y.deriv * std::log(x.value)) +
                   detail::chain(y.value * std::pow(x.value, y.value - 1.0),
                                 x.deriv);
  return {v, d};
}

}  // namespace confrac
