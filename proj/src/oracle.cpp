#include "confrac/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "confrac/errors.hpp"

namespace confrac {

void FDConfig::validate() const {
  if (!(h0 > 0.0) || !std::isfinite(h0)) throw ArgumentError("FDConfig: h0 must be > 0");
  if (levels < 2) throw ArgumentError("FDConfig: levels must be >= 2");
  if (!(shrink > 1.0) || !std::isfinite(shrink)) {
    throw ArgumentError("FDConfig: shrink must be > 1");
  }
}

RichardsonTableau::RichardsonTableau(std::span<const double> quotients, double shrink,
                                     std::span<const double> rounding)
    : n_(quotients.size()), t_(n_ * n_, 0.0), r_(n_ * n_, 0.0) {
  if (n_ == 0) throw ArgumentError("Richardson tableau needs at least one quotient");
  if (!rounding.empty() && rounding.size() != n_) {
    throw DimensionError("rounding bounds do not match quotient count");
  }
  for (std::size_t k = 0; k < n_; ++k) {
    t_[k * n_] = quotients[k];
    r_[k * n_] = rounding.empty() ? 0.0 : rounding[k];
  }
  // T(k,l) = T(k,l-1) + (T(k,l-1) - T(k-1,l-1)) / (r^l - 1)
  double power = 1.0;
  for (std::size_t l = 1; l < n_; ++l) {
    power *= shrink;
    const double denom = power - 1.0;
    for (std::size_t k = l; k < n_; ++k) {
      const double fine = t_[k * n_ + l - 1];
      const double coarse = t_[(k - 1) * n_ + l - 1];
      t_[k * n_ + l] = fine + (fine - coarse) / denom;
      r_[k * n_ + l] = r_[k * n_ + l - 1] * (power / denom) + r_[(k - 1) * n_ + l - 1] / denom;
    }
  }
}

FdEstimate RichardsonTableau::estimate() const {
  const std::size_t last = n_ - 1;
  if (n_ == 1) return {at(0, 0), rounding(0, 0)};
  int growth = 0;
  for (std::size_t k = 2; k < n_; ++k) {
    const double now = step(k);
    if (now > step(k - 1) && now > rounding(k, k) + rounding(k - 1, k - 1)) {
      if (++growth >= 2) {
        throw NonConvergence("extrapolation diverges: successive extrapolants moved apart at "
                             "levels " + std::to_string(k - 1) + " and " + std::to_string(k));
      }
    } else {
      growth = 0;
    }
  }
  return {at(last, last), std::max(step(last), rounding(last, last))};
}

QuotientSequence conformable_quotients(const FunctionDef& f, const PositivePoint& a,
                                       std::size_t j, Order alpha, const FDConfig& cfg) {
  cfg.validate();
  if (a.size() != f.n()) {
    throw DimensionError("point has " + std::to_string(a.size()) +
                         " coordinates, function has " + std::to_string(f.n()) +
                         " variables");
  }
  if (j >= f.n()) {
    throw IndexError("variable index " + std::to_string(j) + " out of range for n=" +
                     std::to_string(f.n()));
  }
  constexpr double eps = std::numeric_limits<double>::epsilon();
  const double aj = a[j];
  const double stretch = std::pow(aj, 1.0 - alpha.value());
  const double base = cfg.h0 * std::max(1.0, std::pow(aj, alpha.value()));

  const std::vector<double> f0 = eval(f, a.coords());
  std::vector<double> x(a.coords().begin(), a.coords().end());

  QuotientSequence seq;
  seq.quotients.assign(f.m(), {});
  seq.rounding.assign(f.m(), {});
  double h = base;
  for (int k = 0; k < cfg.levels; ++k, h /= cfg.shrink) {
    x[j] = aj + h * stretch;
    const std::vector<double> f1 = eval(f, x);
    seq.steps.push_back(h);
    for (std::size_t i = 0; i < f.m(); ++i) {
      seq.quotients[i].push_back((f1[i] - f0[i]) / h);
      // A few ulps for each evaluation plus the perturbed argument.
      seq.rounding[i].push_back(4.0 * eps * (std::abs(f0[i]) + std::abs(f1[i])) / h);
    }
  }
  return seq;
}

namespace {
FdEstimate extrapolate(const QuotientSequence& seq, std::size_t i, double shrink) {
  return RichardsonTableau(seq.quotients[i], shrink, seq.rounding[i]).estimate();
}
}  // namespace

FdEstimate fd_t_alpha(const FunctionDef& f, double t, Order alpha, const FDConfig& cfg) {
  if (f.n() != 1 || f.m() != 1) {
    throw DimensionError("fd_t_alpha needs a scalar function of one variable");
  }
  const PositivePoint point({t});
  return extrapolate(conformable_quotients(f, point, 0, alpha, cfg), 0, cfg.shrink);
}

FdEstimate fd_conformable_partial(const FunctionDef& f, const PositivePoint& a, std::size_t j,
                                  Order alpha, const FDConfig& cfg) {
  if (f.m() != 1) {
    throw DimensionError("fd_conformable_partial needs a scalar function, got m=" +
                         std::to_string(f.m()));
  }
  return extrapolate(conformable_quotients(f, a, j, alpha, cfg), 0, cfg.shrink);
}

FdJacobian fd_conformable_jacobian(const FunctionDef& f, const PositivePoint& a, Order alpha,
                                   const FDConfig& cfg) {
  FdJacobian out{JacobianMatrix(f.m(), f.n()), 0.0};
  for (std::size_t j = 0; j < f.n(); ++j) {
    const QuotientSequence seq = conformable_quotients(f, a, j, alpha, cfg);
    for (std::size_t i = 0; i < f.m(); ++i) {
      const FdEstimate e = extrapolate(seq, i, cfg.shrink);
      out.jacobian(i, j) = e.value;
      out.max_error = std::max(out.max_error, e.error);
    }
  }
  return out;
}

}  // namespace confrac
