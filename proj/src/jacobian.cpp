#include "confrac/jacobian.hpp"

#include <string>

#include "confrac/errors.hpp"

namespace confrac {

JacobianMatrix operator*(const JacobianMatrix& a, const JacobianMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("cannot multiply " + std::to_string(a.rows()) + "x" +
                         std::to_string(a.cols()) + " by " + std::to_string(b.rows()) +
                         "x" + std::to_string(b.cols()));
  }
  JacobianMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < a.cols(); ++k) s += a(i, k) * b(k, j);
      out(i, j) = s;
    }
  }
  return out;
}

JacobianMatrix vstack(std::span<const JacobianMatrix> blocks) {
  if (blocks.empty()) return {};
  const std::size_t cols = blocks.front().cols();
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    if (b.cols() != cols) throw DimensionError("vstack: column counts differ");
    rows += b.rows();
  }
  JacobianMatrix out(rows, cols);
  std::size_t r = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i, ++r) {
      for (std::size_t j = 0; j < cols; ++j) out(r, j) = b(i, j);
    }
  }
  return out;
}

}  // namespace confrac
