#pragma once

// Shared fixtures for the unit and acceptance suites: the function corpus,
// evaluation points, and a central-difference reference for the classical
// Jacobian that only relies on plain evaluation.

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "confrac/expr.hpp"
#include "confrac/jacobian.hpp"

namespace confrac::testing {

struct CorpusEntry {
  std::string source;
  std::vector<std::string> vars;
  std::vector<std::vector<double>> points;
};

// Polynomials, sin/cos/exp/ln compositions and rational functions with
// n <= 3, m <= 3. Points avoid zeros of the true conformable entries except
// where a component does not mention a variable.
inline const std::vector<CorpusEntry>& corpus() {
  static const std::vector<CorpusEntry> entries{
      {"x^2*y, x+y^2", {"x", "y"}, {{1.0, 2.0}, {0.3, 1.7}, {2.5, 0.8}}},
      {"sin(x)", {"x", "y"}, {{0.5, 1.0}, {1.0, 3.0}, {2.0, 1.0}}},
      {"x*y*z, x^3 - 2*y + z^2", {"x", "y", "z"}, {{0.7, 1.3, 2.1}, {1.5, 0.4, 0.9}}},
      {"exp(x)*cos(y)", {"x", "y"}, {{0.2, 0.4}, {1.1, 2.3}}},
      {"ln(x*y + 1), sqrt(x + z)", {"x", "y", "z"}, {{0.7, 1.3, 2.1}, {3.0, 0.2, 0.5}}},
      {"(x + 1)/(y^2 + 1), x/y", {"x", "y"}, {{0.6, 1.4}, {2.0, 0.7}}},
      {"sin(x*y) + cos(z), exp(-x)*z, tan(x/4)", {"x", "y", "z"}, {{0.7, 1.3, 2.1}, {1.2, 0.5, 0.3}}},
      {"x^y", {"x", "y"}, {{1.5, 2.5}, {0.6, 0.8}}},
      {"ln(x)^2 - x^(-1)", {"x"}, {{0.5}, {2.0}, {3.7}}},
      {"sqrt(x^2 + y^2 + z^2), x*exp(y/z), cos(x)^3", {"x", "y", "z"}, {{0.7, 1.3, 2.1}, {1.1, 0.6, 1.9}}},
  };
  return entries;
}

/// Classical Jacobian by central differences with step 1e-6 * max(1, |a_j|).
inline JacobianMatrix central_difference_jacobian(const FunctionDef& f, std::vector<double> a,
                                                  double rel_step = 1e-6) {
  JacobianMatrix out(f.m(), f.n());
  for (std::size_t j = 0; j < f.n(); ++j) {
    const double h = rel_step * std::max(1.0, std::abs(a[j]));
    const double aj = a[j];
    a[j] = aj + h;
    const auto plus = eval(f, a);
    a[j] = aj - h;
    const auto minus = eval(f, a);
    a[j] = aj;
    for (std::size_t i = 0; i < f.m(); ++i) out(i, j) = (plus[i] - minus[i]) / (2.0 * h);
  }
  return out;
}

/// |x - y| / |y|, or |x - y| when y == 0.
inline double rel_err(double x, double y) {
  const double d = std::abs(x - y);
  return y == 0.0 ? d : d / std::abs(y);
}

inline double max_rel_err(const JacobianMatrix& x, const JacobianMatrix& y) {
  double worst = 0.0;
  for (std::size_t k = 0; k < x.data().size(); ++k) {
    worst = std::max(worst, rel_err(x.data()[k], y.data()[k]));
  }
  return worst;
}

}  // namespace confrac::testing
