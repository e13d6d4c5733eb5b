#pragma once

// Exact elimination over any field-valued Eigen scalar. Pivots are chosen by
// "first nonzero", never by magnitude, so results are exact for rationals.

#include <optional>
#include <utility>
#include <vector>

#include "pdroot/types.hpp"

namespace pdroot
{

/// Reduced row echelon form of `a` and its pivot columns.
template <typename Derived>
std::pair<Matrix<typename Derived::Scalar>, std::vector<Eigen::Index>> rref(
  const Eigen::MatrixBase<Derived> & a)
{
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> r = a;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < r.cols() && row < r.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < r.rows() && r(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == r.rows()) continue;
    r.row(row).swap(r.row(pivot));
    const Scalar inv = Scalar(1) / r(row, col);
    r.row(row) *= inv;
    for (Eigen::Index i = 0; i < r.rows(); ++i) {
      if (i == row || r(i, col) == Scalar(0)) continue;
      const Scalar factor = r(i, col);
      r.row(i) -= factor * r.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(r), std::move(pivots)};
}

template <typename Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived> & a)
{
  return static_cast<Eigen::Index>(rref(a).second.size());
}

template <typename Derived>
typename Derived::Scalar exact_determinant(const Eigen::MatrixBase<Derived> & a)
{
  using Scalar = typename Derived::Scalar;
  Matrix<Scalar> m = a;
  Scalar det(1);
  for (Eigen::Index col = 0; col < m.cols(); ++col) {
    Eigen::Index pivot = col;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) return Scalar(0);
    if (pivot != col) {
      m.row(col).swap(m.row(pivot));
      det = -det;
    }
    det *= m(col, col);
    for (Eigen::Index i = col + 1; i < m.rows(); ++i) {
      if (m(i, col) == Scalar(0)) continue;
      const Scalar factor = m(i, col) / m(col, col);
      m.row(i) -= factor * m.row(col);
    }
  }
  return det;
}

/// Inverse of a square matrix, or nullopt if singular.
template <typename Derived>
std::optional<Matrix<typename Derived::Scalar>> exact_inverse(const Eigen::MatrixBase<Derived> & a)
{
  using Scalar = typename Derived::Scalar;
  const Eigen::Index n = a.rows();
  Matrix<Scalar> augmented(n, 2 * n);
  augmented << a, Matrix<Scalar>::Identity(n, n);
  auto [r, pivots] = rref(augmented);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return Matrix<Scalar>(r.rightCols(n));
}

/// Unique solution of a square system, or nullopt if singular.
template <typename DerivedA, typename DerivedB>
std::optional<Vector<typename DerivedA::Scalar>> exact_solve(const Eigen::MatrixBase<DerivedA> & a,
                                                             const Eigen::MatrixBase<DerivedB> & b)
{
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.rows();
  Matrix<Scalar> augmented(n, n + 1);
  augmented << a, b;
  auto [r, pivots] = rref(augmented);
  if (static_cast<Eigen::Index>(pivots.size()) < n || pivots[n - 1] != n - 1) return std::nullopt;
  return Vector<Scalar>(r.col(n));
}

/// Basis of the right kernel, one column per free variable.
template <typename Derived>
Matrix<typename Derived::Scalar> exact_kernel(const Eigen::MatrixBase<Derived> & a)
{
  using Scalar = typename Derived::Scalar;
  auto [r, pivots] = rref(a);
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<Eigen::Index> free;
  for (Eigen::Index c = 0; c < a.cols(); ++c) {
    if (!is_pivot[c]) free.push_back(c);
  }
  Matrix<Scalar> basis = Matrix<Scalar>::Zero(a.cols(), static_cast<Eigen::Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) {
    basis(free[k], k) = Scalar(1);
    for (std::size_t p = 0; p < pivots.size(); ++p) basis(pivots[p], k) = -r(p, free[k]);
  }
  return basis;
}

}  // namespace pdroot
