#pragma once

// Exact integer linear algebra on small dense matrices. Everything here is
// fraction-free (Bareiss elimination), so intermediate entries are minors of
// the input and stay integral.

#include <Eigen/Dense>

#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace positroid::geometry {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<long long>;
using IntVector = Vector<long long>;

/// Rank by fraction-free elimination.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> a = input;
  const Eigen::Index rows = a.rows(), cols = a.cols();
  Scalar prev_pivot = 1;
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = rank;
    while (pivot < rows && a(pivot, col) == 0) ++pivot;
    if (pivot == rows) continue;
    a.row(rank).swap(a.row(pivot));
    for (Eigen::Index r = rank + 1; r < rows; ++r) {
      for (Eigen::Index c = col + 1; c < cols; ++c)
        a(r, c) = (a(rank, col) * a(r, c) - a(r, col) * a(rank, c)) / prev_pivot;
      a(r, col) = 0;
    }
    prev_pivot = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Determinant of a square integer matrix.
template <typename Derived>
typename Derived::Scalar bareiss_determinant(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  if (input.rows() != input.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  Matrix<Scalar> a = input;
  const Eigen::Index n = a.rows();
  if (n == 0) return 1;
  Scalar sign = 1, prev_pivot = 1;
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = k;
    while (pivot < n && a(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      a.row(k).swap(a.row(pivot));
      sign = -sign;
    }
    for (Eigen::Index r = k + 1; r < n; ++r) {
      for (Eigen::Index c = k + 1; c < n; ++c) a(r, c) = (a(k, k) * a(r, c) - a(r, k) * a(k, c)) / prev_pivot;
      a(r, k) = 0;
    }
    prev_pivot = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

/// Primitive integer generator of the kernel of a matrix whose kernel is one
/// dimensional (rank = cols - 1). The sign is normalised so that the first
/// nonzero entry is positive.
template <typename Derived>
Vector<typename Derived::Scalar> primitive_kernel_vector(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  const Eigen::Index cols = input.cols();
  // Greedily pick cols - 1 independent rows.
  Matrix<Scalar> basis(0, cols);
  for (Eigen::Index r = 0; r < input.rows() && basis.rows() < cols - 1; ++r) {
    Matrix<Scalar> trial(basis.rows() + 1, cols);
    trial << basis, input.row(r);
    if (bareiss_rank(trial) == trial.rows()) basis = std::move(trial);
  }
  if (basis.rows() != cols - 1) throw std::invalid_argument("kernel is not one dimensional");
  // Generalised cross product: v_k = (-1)^k det(basis without column k).
  Vector<Scalar> v(cols);
  for (Eigen::Index k = 0; k < cols; ++k) {
    Matrix<Scalar> minor(cols - 1, cols - 1);
    for (Eigen::Index c = 0, m = 0; c < cols; ++c) {
      if (c == k) continue;
      minor.col(m++) = basis.col(c);
    }
    const Scalar det = bareiss_determinant(minor);
    v(k) = (k % 2 == 0) ? det : -det;
  }
  Scalar g = 0;
  for (Eigen::Index k = 0; k < cols; ++k) g = std::gcd(g, v(k) < 0 ? -v(k) : v(k));
  if (g == 0) throw std::logic_error("degenerate kernel computation");
  v /= g;
  for (Eigen::Index k = 0; k < cols; ++k) {
    if (v(k) != 0) {
      if (v(k) < 0) v = -v;
      break;
    }
  }
  return v;
}

/// Points as rows.
inline IntMatrix rows_to_matrix(const std::vector<std::vector<int>>& points) {
  if (points.empty()) return IntMatrix(0, 0);
  IntMatrix m(static_cast<Eigen::Index>(points.size()), static_cast<Eigen::Index>(points.front().size()));
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < points[r].size(); ++c)
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = points[r][c];
  return m;
}

/// Affine dimension of a point set given as rows; -1 for the empty set.
template <typename Derived>
Eigen::Index affine_dimension(const Eigen::MatrixBase<Derived>& points) {
  if (points.rows() == 0) return -1;
  Matrix<typename Derived::Scalar> diffs = points.bottomRows(points.rows() - 1).rowwise() - points.row(0);
  return bareiss_rank(diffs);
}

inline Eigen::Index affine_dimension(const std::vector<std::vector<int>>& points) {
  return affine_dimension(rows_to_matrix(points));
}

}  // namespace positroid::geometry
