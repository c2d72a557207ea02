#pragma once

// Finite-difference evaluation of the conformable limit quotients
//
//   (f(a_1, ..., a_j + h a_j^(1-alpha), ..., a_n) - f(a)) / h,   h -> 0,
//
// with no use of the classical derivative. One-sided quotients at the steps
// h_k = base / shrink^k are combined by Richardson extrapolation assuming an
// error expansion in integer powers of h.

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "confrac/conformable.hpp"
#include "confrac/expr.hpp"
#include "confrac/jacobian.hpp"

namespace confrac {

struct FDConfig {
  double h0 = 1e-2;     ///< first step, before per-coordinate scaling
  int levels = 6;       ///< number of steps (>= 2)
  double shrink = 2.0;  ///< ratio between consecutive steps (> 1)

  /// Throws ArgumentError if an invariant is violated.
  void validate() const;
};

struct FdEstimate {
  double value;
  double error;  ///< size of the last extrapolation step, floored at the rounding bound
};

struct FdJacobian {
  JacobianMatrix jacobian;
  double max_error;
};

/// Lower-triangular Richardson tableau. Column 0 holds the raw quotients;
/// entry (k, l) eliminates the h^1..h^l error terms using rows k-l..k.
class RichardsonTableau {
 public:
  /// `rounding` holds an absolute bound on the rounding error of each raw
  /// quotient (may be empty to mean zero).
  RichardsonTableau(std::span<const double> quotients, double shrink,
                    std::span<const double> rounding = {});

  std::size_t levels() const noexcept { return n_; }
  double at(std::size_t k, std::size_t l) const { return t_[k * n_ + l]; }
  /// Propagated rounding bound of at(k, l).
  double rounding(std::size_t k, std::size_t l) const { return r_[k * n_ + l]; }

  /// |T(k,k) - T(k-1,k-1)| for k >= 1: how far the extrapolant moved when
  /// level k was added.
  double step(std::size_t k) const { return std::abs(at(k, k) - at(k - 1, k - 1)); }

  /// Final diagonal entry; the error estimate is the last step, floored at
  /// the rounding bound. Throws NonConvergence if the step grows at two
  /// consecutive levels while above rounding.
  FdEstimate estimate() const;

 private:
  std::size_t n_;
  std::vector<double> t_;
  std::vector<double> r_;
};

/// Raw one-sided quotients along coordinate j, one sequence per component.
struct QuotientSequence {
  std::vector<double> steps;                   ///< h_k
  std::vector<std::vector<double>> quotients;  ///< [component][k]
  std::vector<std::vector<double>> rounding;   ///< rounding bound of each quotient
};

/// Base step h0 * max(1, a_j^alpha), then shrinking by cfg.shrink.
QuotientSequence conformable_quotients(const FunctionDef& f, const PositivePoint& a,
                                       std::size_t j, Order alpha, const FDConfig& cfg = {});

/// One-variable conformable derivative from its limit definition.
FdEstimate fd_t_alpha(const FunctionDef& f, double t, Order alpha, const FDConfig& cfg = {});

/// j-th (0-based) conformable partial of a scalar function from its limit
/// definition.
FdEstimate fd_conformable_partial(const FunctionDef& f, const PositivePoint& a, std::size_t j,
                                  Order alpha, const FDConfig& cfg = {});

/// Matrix of the linear map in the multivariable limit definition, assembled
/// column by column by perturbing one h_j at a time.
FdJacobian fd_conformable_jacobian(const FunctionDef& f, const PositivePoint& a, Order alpha,
                                   const FDConfig& cfg = {});

}  // namespace confrac
