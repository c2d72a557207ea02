#include "confrac/conformable.hpp"

#include <cmath>
#include <string>

#include "confrac/autodiff.hpp"
#include "confrac/errors.hpp"

namespace confrac {

Order::Order(double alpha) : alpha_(alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0)) throw InvalidOrder(alpha);
}

PositivePoint::PositivePoint(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw DimensionError("point has no coordinates");
  for (std::size_t j = 0; j < coords_.size(); ++j) {
    if (!(coords_[j] > 0.0) || !std::isfinite(coords_[j])) {
      throw NonPositivePoint(j, coords_[j]);
    }
  }
}

ScalingMatrix::ScalingMatrix(std::vector<double> diagonal) : diagonal_(std::move(diagonal)) {
  for (const double d : diagonal_) {
    if (!(d > 0.0) || !std::isfinite(d)) {
      throw DomainError("scaling entry " + std::to_string(d) + " is not finite and positive");
    }
  }
}

JacobianMatrix ScalingMatrix::scale_columns(const JacobianMatrix& m) const {
  if (m.cols() != size()) throw DimensionError("scale_columns: size mismatch");
  JacobianMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j) * diagonal_[j];
  }
  return out;
}

JacobianMatrix ScalingMatrix::scale_rows(const JacobianMatrix& m) const {
  if (m.rows() != size()) throw DimensionError("scale_rows: size mismatch");
  JacobianMatrix out = m;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = diagonal_[i] * m(i, j);
  }
  return out;
}

ScalingMatrix scaling_matrix(const PositivePoint& a, Order alpha, ScalingExponent exponent) {
  const double p = exponent == ScalingExponent::one_minus_alpha ? 1.0 - alpha.value()
                                                                : alpha.value() - 1.0;
  std::vector<double> diag(a.size());
  for (std::size_t j = 0; j < a.size(); ++j) diag[j] = std::pow(a[j], p);
  return ScalingMatrix(std::move(diag));
}

JacobianMatrix conformable_jacobian(const FunctionDef& f, const PositivePoint& a, Order alpha) {
  return scaling_matrix(a, alpha).scale_columns(classical_jacobian(f, a.coords()));
}

double conformable_partial(const FunctionDef& f, const PositivePoint& a, std::size_t j,
                           Order alpha) {
  if (f.m() != 1) {
    throw DimensionError("conformable_partial needs a scalar function, got m=" +
                         std::to_string(f.m()));
  }
  if (j >= f.n()) {
    throw IndexError("variable index " + std::to_string(j) + " out of range for n=" +
                     std::to_string(f.n()));
  }
  // Same arithmetic as conformable_jacobian: one multiply of the classical
  // entry by a_j^(1-alpha).
  return conformable_jacobian(f, a, alpha)(0, j);
}

double t_alpha(const FunctionDef& f, double t, Order alpha) {
  const PositivePoint point({t});
  return std::pow(point[0], 1.0 - alpha.value()) * derivative_1d(f, t);
}

namespace {
PositivePoint inner_value(const FunctionDef& f, const PositivePoint& a) {
  const auto values = eval(f, a.coords());
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] > 0.0) || !std::isfinite(values[i])) {
      throw CompositionDomainError(i, values[i]);
    }
  }
  return PositivePoint(values);
}
}  // namespace

JacobianMatrix chain_rhs(const FunctionDef& g, const FunctionDef& f, const PositivePoint& a,
                         Order alpha) {
  if (g.n() != f.m()) {
    throw DimensionError("cannot compose: outer function has " + std::to_string(g.n()) +
                         " variables, inner function has " + std::to_string(f.m()) +
                         " components");
  }
  const PositivePoint fa = inner_value(f, a);
  const JacobianMatrix outer = conformable_jacobian(g, fa, alpha);
  const JacobianMatrix inner = conformable_jacobian(f, a, alpha);
  const ScalingMatrix middle = scaling_matrix(fa, alpha, ScalingExponent::alpha_minus_one);
  return outer * middle.scale_rows(inner);
}

double chain_rhs_1d(const FunctionDef& g, const FunctionDef& f, double t, Order alpha) {
  if (g.n() != 1 || g.m() != 1 || f.n() != 1 || f.m() != 1) {
    throw DimensionError("chain_rhs_1d needs scalar functions of one variable");
  }
  const PositivePoint point({t});
  const PositivePoint ft = inner_value(f, point);
  return t_alpha(g, ft[0], alpha) * t_alpha(f, t, alpha) * std::pow(ft[0], alpha.value() - 1.0);
}

std::vector<JacobianMatrix> component_rows(const FunctionDef& f, const PositivePoint& a,
                                           Order alpha) {
  std::vector<JacobianMatrix> rows;
  rows.reserve(f.m());
  for (std::size_t i = 0; i < f.m(); ++i) {
    rows.push_back(conformable_jacobian(f.component(i), a, alpha));
  }
  return rows;
}

}  // namespace confrac
