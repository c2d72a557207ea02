#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "confrac/expr.hpp"
#include "confrac/jacobian.hpp"

namespace confrac {

/// Fractional order alpha in (0, 1]. Construction throws InvalidOrder
/// otherwise (NaN included).
class Order {
 public:
  explicit Order(double alpha);
  double value() const noexcept { return alpha_; }

 private:
  double alpha_;
};

/// Point of the open positive orthant. Construction throws NonPositivePoint
/// for the first coordinate that is <= 0 or not finite.
class PositivePoint {
 public:
  explicit PositivePoint(std::vector<double> coords);

  std::size_t size() const noexcept { return coords_.size(); }
  double operator[](std::size_t j) const { return coords_[j]; }
  std::span<const double> coords() const noexcept { return coords_; }

 private:
  std::vector<double> coords_;
};

/// Which power of the coordinates fills the diagonal.
enum class ScalingExponent {
  one_minus_alpha,  ///< a_j^(1-alpha), the map L_a^(1-alpha)
  alpha_minus_one,  ///< a_j^(alpha-1), the chain-rule middle factor
};

/// Diagonal linear map x_j -> d_j * x_j with every d_j finite and > 0.
class ScalingMatrix {
 public:
  explicit ScalingMatrix(std::vector<double> diagonal);

  std::size_t size() const noexcept { return diagonal_.size(); }
  std::span<const double> diagonal() const noexcept { return diagonal_; }

  /// m * diag
  JacobianMatrix scale_columns(const JacobianMatrix& m) const;
  /// diag * m
  JacobianMatrix scale_rows(const JacobianMatrix& m) const;

 private:
  std::vector<double> diagonal_;
};

ScalingMatrix scaling_matrix(const PositivePoint& a, Order alpha,
                             ScalingExponent exponent = ScalingExponent::one_minus_alpha);

/// Conformable Jacobian f^alpha(a) = f'(a) * diag(a_j^(1-alpha)).
JacobianMatrix conformable_jacobian(const FunctionDef& f, const PositivePoint& a, Order alpha);

/// j-th conformable partial of a scalar function (m = 1), 0-based j.
/// Throws IndexError if j >= n and DimensionError if m != 1.
double conformable_partial(const FunctionDef& f, const PositivePoint& a, std::size_t j,
                           Order alpha);

/// T_alpha(f)(t) = t^(1-alpha) f'(t) for a scalar function of one variable.
/// Throws NonPositivePoint if t <= 0.
double t_alpha(const FunctionDef& f, double t, Order alpha);

/// Right-hand side of the multivariable chain rule:
///   g^alpha(f(a)) * diag(f_i(a)^(alpha-1)) * f^alpha(a).
/// Throws DimensionError unless g.n() == f.m() and CompositionDomainError if
/// some f_i(a) <= 0.
JacobianMatrix chain_rhs(const FunctionDef& g, const FunctionDef& f, const PositivePoint& a,
                         Order alpha);

/// Scalar chain rule T_alpha(g)(f(t)) * T_alpha(f)(t) * f(t)^(alpha-1).
double chain_rhs_1d(const FunctionDef& g, const FunctionDef& f, double t, Order alpha);

/// Rows D^alpha f_i(a), each as a 1 x n matrix. Stacking them gives
/// conformable_jacobian(f, a, alpha).
std::vector<JacobianMatrix> component_rows(const FunctionDef& f, const PositivePoint& a,
                                           Order alpha);

}  // namespace confrac
