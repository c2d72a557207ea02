#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace confrac {

/// Dense m x n real matrix, row-major. Row i belongs to component f_i,
/// column j to variable x_j of the producing FunctionDef.
class JacobianMatrix {
 public:
  JacobianMatrix() = default;
  JacobianMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols, 0.0) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }
  std::span<const double> data() const noexcept { return data_; }

  /// Bitwise-equal entries and equal shape.
  friend bool operator==(const JacobianMatrix&, const JacobianMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Throws DimensionError unless a.cols() == b.rows().
JacobianMatrix operator*(const JacobianMatrix& a, const JacobianMatrix& b);

/// Stacks 1 x n (or k x n) blocks vertically.
JacobianMatrix vstack(std::span<const JacobianMatrix> blocks);

}  // namespace confrac
