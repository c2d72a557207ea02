#pragma once

#include <span>

#include "confrac/dual.hpp"
#include "confrac/expr.hpp"
#include "confrac/jacobian.hpp"

namespace confrac {

/// Usual Jacobian f'(a) by n forward sweeps, one per seeded variable.
/// Entries are exact up to floating-point rounding.
///
/// Throws DimensionError if a.size() != f.n(), EvalDomainError where f is
/// undefined and DerivativeDomainError where f is defined but a derivative
/// rule is not.
JacobianMatrix classical_jacobian(const FunctionDef& f, std::span<const double> a);

/// f'(t) for a scalar function of one variable.
double derivative_1d(const FunctionDef& f, double t);

}  // namespace confrac
