#include "confrac/autodiff.hpp"

#include <string>
#include <vector>

#include "evaluate.hpp"

namespace confrac {

JacobianMatrix classical_jacobian(const FunctionDef& f, std::span<const double> a) {
  if (a.size() != f.n()) {
    throw DimensionError("point has " + std::to_string(a.size()) +
                         " coordinates, function has " + std::to_string(f.n()) +
                         " variables");
  }
  JacobianMatrix jac(f.m(), f.n());
  std::vector<Dual> env(a.begin(), a.end());
  for (std::size_t j = 0; j < f.n(); ++j) {
    env[j].deriv = 1.0;
    const detail::Evaluator<Dual> ev(f, env);
    for (std::size_t i = 0; i < f.m(); ++i) jac(i, j) = ev.component(i).deriv;
    env[j].deriv = 0.0;
  }
  return jac;
}

double derivative_1d(const FunctionDef& f, double t) {
  if (f.n() != 1 || f.m() != 1) {
    throw DimensionError("derivative_1d needs a scalar function of one variable");
  }
  const Dual seed = Dual::variable(t);
  return detail::Evaluator<Dual>(f, std::span<const Dual>(&seed, 1)).component(0).deriv;
}

}  // namespace confrac
