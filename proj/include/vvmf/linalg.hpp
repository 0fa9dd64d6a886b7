#pragma once

#include <optional>
#include <utility>
#include <vector>

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

namespace vvmf {

template <class Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <class Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

/// Reduced row echelon form over an exact field, in place. Returns the
/// pivot columns.
template <class Derived>
std::vector<Eigen::Index> row_reduce(Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index pivot = row;
    while (pivot < m.rows() && m(pivot, col) == Scalar(0)) ++pivot;
    if (pivot == m.rows()) continue;
    m.row(pivot).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    m.row(row) *= inv;
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col) == Scalar(0)) continue;
      const Scalar factor = m(r, col);
      m.row(r) -= factor * m.row(row);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class Derived>
Eigen::Index exact_rank(const Eigen::MatrixBase<Derived>& m) {
  DenseMatrix<typename Derived::Scalar> work = m;
  return static_cast<Eigen::Index>(row_reduce(work).size());
}

/// Unique solution x of a x = b, or nothing when the system is
/// inconsistent or underdetermined.
template <class DerivedA, class DerivedB>
std::optional<DenseVector<typename DerivedA::Scalar>> solve_exact(
    const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  using Scalar = typename DerivedA::Scalar;
  const Eigen::Index n = a.cols();
  DenseMatrix<Scalar> aug(a.rows(), n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  const auto pivots = row_reduce(aug);
  if (!pivots.empty() && pivots.back() == n) return std::nullopt;  // 0 = 1
  if (static_cast<Eigen::Index>(pivots.size()) != n) return std::nullopt;
  DenseVector<Scalar> x(n);
  for (Eigen::Index i = 0; i < n; ++i) x(i) = aug(i, n);
  return x;
}

}  // namespace vvmf
