#ifndef RR_LINALG_HPP
#define RR_LINALG_HPP

#include <vector>

#include <Eigen/Core>

#include "rr/field.hpp"

namespace rr {

template <class Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

template <class Scalar>
struct Echelon {
  Mat<Scalar> R;                  // reduced row echelon form
  std::vector<Eigen::Index> pivots;  // pivot column of each nonzero row
  Eigen::Index rank() const { return static_cast<Eigen::Index>(pivots.size()); }
};

// Gauss-Jordan elimination; the pivot in each column is the first nonzero
// entry at or below the current row.
template <class Scalar>
Echelon<Scalar> echelon(Mat<Scalar> M, const Scalar& one = Scalar(1)) {
  Echelon<Scalar> E;
  const Eigen::Index rows = M.rows(), cols = M.cols();
  Eigen::Index row = 0;
  for (Eigen::Index c = 0; c < cols && row < rows; ++c) {
    Eigen::Index p = row;
    while (p < rows && is_zero(M(p, c))) ++p;
    if (p == rows) continue;
    if (p != row) M.row(p).swap(M.row(row));
    const Scalar inv = one / M(row, c);
    std::vector<Eigen::Index> nz;
    for (Eigen::Index k = c; k < cols; ++k)
      if (!is_zero(M(row, k))) {
        M(row, k) *= inv;
        nz.push_back(k);
      }
    for (Eigen::Index r = 0; r < rows; ++r) {
      if (r == row || is_zero(M(r, c))) continue;
      const Scalar f = M(r, c);
      for (Eigen::Index k : nz) M(r, k) -= f * M(row, k);
    }
    E.pivots.push_back(c);
    ++row;
  }
  E.R = std::move(M);
  return E;
}

template <class Scalar>
Eigen::Index rank(const Mat<Scalar>& M, const Scalar& one = Scalar(1)) {
  return echelon<Scalar>(M, one).rank();
}

// Columns form a basis of the null space; free variables in increasing order.
template <class Scalar>
Mat<Scalar> kernel_basis(const Mat<Scalar>& M, const Scalar& one = Scalar(1)) {
  const Echelon<Scalar> E = echelon<Scalar>(M, one);
  const Eigen::Index n = M.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : E.pivots) is_pivot[c] = true;
  Mat<Scalar> K = Mat<Scalar>::Constant(n, n - E.rank(), one - one);
  Eigen::Index col = 0;
  for (Eigen::Index f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    K(f, col) = one;
    for (Eigen::Index i = 0; i < E.rank(); ++i) K(E.pivots[i], col) = -E.R(i, f);
    ++col;
  }
  return K;
}

// Target coordinates spanning a complement of the column space.
template <class Scalar>
std::vector<Eigen::Index> cokernel_coordinates(const Mat<Scalar>& M, const Scalar& one = Scalar(1)) {
  const Eigen::Index m = M.rows();
  Mat<Scalar> T = M.transpose();
  const Echelon<Scalar> E = echelon<Scalar>(std::move(T), one);
  std::vector<bool> is_pivot(m, false);
  for (auto c : E.pivots) is_pivot[c] = true;
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < m; ++i)
    if (!is_pivot[i]) out.push_back(i);
  return out;
}

template <class Scalar>
Mat<Scalar> hcat(const std::vector<Mat<Scalar>>& parts, Eigen::Index rows, const Scalar& zero) {
  Eigen::Index cols = 0;
  for (const auto& p : parts) cols += p.cols();
  Mat<Scalar> out = Mat<Scalar>::Constant(rows, cols, zero);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    if (p.cols() > 0 && rows > 0) out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

template <class Scalar>
Mat<Scalar> vcat(const std::vector<Mat<Scalar>>& parts, Eigen::Index cols, const Scalar& zero) {
  Eigen::Index rows = 0;
  for (const auto& p : parts) rows += p.rows();
  Mat<Scalar> out = Mat<Scalar>::Constant(rows, cols, zero);
  Eigen::Index at = 0;
  for (const auto& p : parts) {
    if (p.rows() > 0 && cols > 0) out.middleRows(at, p.rows()) = p;
    at += p.rows();
  }
  return out;
}

}  // namespace rr

#endif
