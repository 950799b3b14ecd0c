#pragma once

/*
 * Dense exact linear algebra over mpq_class.
 *
 * Determinants and linear solves use Bareiss fraction-free elimination:
 * after step k every entry of the trailing block is a (k+1)x(k+1) minor of
 * the input, and the division by the previous pivot is exact. With integer
 * input no fractions ever appear until back substitution.
 */

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace cayley {

class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows * cols)) {}
  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpq_class& operator()(int i, int j) { return data_[static_cast<std::size_t>(i * cols_ + j)]; }
  const mpq_class& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i * cols_ + j)]; }

  // Deletes the listed rows and columns (indices need not be sorted).
  QMatrix principal_submatrix_without(std::span<const int> removed) const;

  QMatrix operator*(const QMatrix& rhs) const;
  bool operator==(const QMatrix& rhs) const = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<mpq_class> data_;
};

class SingularMatrixError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// det of a 0x0 matrix is 1.
mpq_class bareiss_determinant(QMatrix a);

// Solves A x = b; throws SingularMatrixError.
std::vector<mpq_class> bareiss_solve(QMatrix a, std::vector<mpq_class> b);

// Gauss-Jordan inverse; throws SingularMatrixError.
QMatrix gauss_jordan_inverse(QMatrix a);

// det M(removed | removed)
mpq_class principal_minor(const QMatrix& a, std::span<const int> removed);

}  // namespace cayley
