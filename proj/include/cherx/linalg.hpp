#pragma once

#include <optional>
#include <vector>

#include "cherx/scalar.hpp"

namespace cherx {

// Dense row-major matrix over the Scalar field.
class DenseMatrix {
 public:
  DenseMatrix() : rows_(0), cols_(0) {}
  DenseMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), e_(rows * cols, Scalar(0)) {}

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  Scalar& at(size_t i, size_t j) { return e_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return e_[i * cols_ + j]; }

  DenseMatrix transposed() const;
  DenseMatrix operator*(const DenseMatrix& o) const;
  DenseMatrix operator-(const DenseMatrix& o) const;
  bool is_zero() const;
  bool is_symbolic() const;

  // Stacks rows of several matrices with equal column counts.
  static DenseMatrix vstack(const std::vector<DenseMatrix>& blocks);
  // Matrix whose columns are the given vectors.
  static DenseMatrix from_columns(const std::vector<std::vector<Scalar>>& cols, size_t dim);

 private:
  size_t rows_, cols_;
  std::vector<Scalar> e_;
};

unsigned rank(const DenseMatrix& m);

// Exact basis of the right kernel. Vectors come from the free-column
// parametrization (free coordinate 1), then are denominator-cleared and
// content-normalized; in numeric mode the first nonzero coordinate is
// scaled to 1.
std::vector<std::vector<Scalar>> kernel_basis(const DenseMatrix& m);

// Least-squares-free exact solve of A x = b; nullopt when inconsistent.
// When the solution is not unique, free variables are set to 0.
std::optional<std::vector<Scalar>> solve(const DenseMatrix& a, const std::vector<Scalar>& b);

}  // namespace cherx
