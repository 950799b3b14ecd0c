#include "cayley/exact_linalg.hpp"

#include <algorithm>
#include <utility>

namespace cayley {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

QMatrix QMatrix::principal_submatrix_without(std::span<const int> removed) const {
  if (rows_ != cols_) throw std::invalid_argument("principal submatrix of a non-square matrix");
  std::vector<int> keep;
  for (int i = 0; i < rows_; ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) keep.push_back(i);
  const int k = static_cast<int>(keep.size());
  QMatrix sub(k, k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) sub(i, j) = (*this)(keep[static_cast<std::size_t>(i)], keep[static_cast<std::size_t>(j)]);
  return sub;
}

QMatrix QMatrix::operator*(const QMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("matrix product dimension mismatch");
  QMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      if (sgn((*this)(i, k)) == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += (*this)(i, k) * rhs(k, j);
    }
  return out;
}

namespace {

void swap_rows(QMatrix& a, int r1, int r2) {
  for (int j = 0; j < a.cols(); ++j) std::swap(a(r1, j), a(r2, j));
}

// Forward Bareiss elimination on the first `pivots` columns; returns the
// sign from row swaps, or 0 if a zero pivot column is met.
int bareiss_forward(QMatrix& a, int pivots) {
  int sign = 1;
  mpq_class prev = 1;
  for (int k = 0; k < pivots; ++k) {
    if (sgn(a(k, k)) == 0) {
      int r = k + 1;
      while (r < a.rows() && sgn(a(r, k)) == 0) ++r;
      if (r == a.rows()) return 0;
      swap_rows(a, k, r);
      sign = -sign;
    }
    for (int i = k + 1; i < a.rows(); ++i) {
      for (int j = k + 1; j < a.cols(); ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  return sign;
}

}  // namespace

mpq_class bareiss_determinant(QMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = a.rows();
  if (n == 0) return 1;
  const int sign = bareiss_forward(a, n);
  if (sign == 0) return 0;
  return sign * a(n - 1, n - 1);
}

std::vector<mpq_class> bareiss_solve(QMatrix a, std::vector<mpq_class> b) {
  const int n = a.rows();
  if (a.cols() != n || static_cast<int>(b.size()) != n) throw std::invalid_argument("solve dimension mismatch");
  QMatrix aug(n, n + 1);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[static_cast<std::size_t>(i)];
  }
  if (bareiss_forward(aug, n) == 0 || (n > 0 && sgn(aug(n - 1, n - 1)) == 0))
    throw SingularMatrixError("linear system is singular");
  std::vector<mpq_class> x(static_cast<std::size_t>(n));
  for (int i = n - 1; i >= 0; --i) {
    mpq_class acc = aug(i, n);
    for (int j = i + 1; j < n; ++j) acc -= aug(i, j) * x[static_cast<std::size_t>(j)];
    x[static_cast<std::size_t>(i)] = acc / aug(i, i);
  }
  return x;
}

QMatrix gauss_jordan_inverse(QMatrix a) {
  const int n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("inverse of a non-square matrix");
  QMatrix inv = QMatrix::identity(n);
  for (int k = 0; k < n; ++k) {
    int r = k;
    while (r < n && sgn(a(r, k)) == 0) ++r;
    if (r == n) throw SingularMatrixError("matrix is singular");
    if (r != k) {
      swap_rows(a, k, r);
      swap_rows(inv, k, r);
    }
    const mpq_class pivot = a(k, k);
    for (int j = 0; j < n; ++j) {
      a(k, j) /= pivot;
      inv(k, j) /= pivot;
    }
    for (int i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const mpq_class f = a(i, k);
      for (int j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

mpq_class principal_minor(const QMatrix& a, std::span<const int> removed) {
  return bareiss_determinant(a.principal_submatrix_without(removed));
}

}  // namespace cayley
