// SPDX-License-Identifier: Apache-2.0
#include "aligndof/subspace.hpp"

#include <Eigen/SVD>
#include <algorithm>

namespace aligndof {

namespace {

int rank_from_singular_values(const Eigen::VectorXd& sv, int rows, int cols, const Tolerance& tol) {
  if (sv.size() == 0) return 0;
  const double cutoff = tol.rel * sv(0) * static_cast<double>(std::max(rows, cols));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace

int numerical_rank(const CMatrix& a, const Tolerance& tol) {
  if (a.rows() == 0 || a.cols() == 0) fail(Errc::InvalidArgument, "numerical_rank of empty matrix");
  Eigen::JacobiSVD<CMatrix> svd(a);
  return rank_from_singular_values(svd.singularValues(), static_cast<int>(a.rows()),
                                   static_cast<int>(a.cols()), tol);
}

CMatrix null_space_basis(const CMatrix& a, const Tolerance& tol) {
  if (a.rows() == 0 || a.cols() == 0) fail(Errc::InvalidArgument, "null_space_basis of empty matrix");
  Eigen::JacobiSVD<CMatrix> svd(a, Eigen::ComputeFullV);
  const int rank = rank_from_singular_values(svd.singularValues(), static_cast<int>(a.rows()),
                                             static_cast<int>(a.cols()), tol);
  const int nullity = static_cast<int>(a.cols()) - rank;
  return svd.matrixV().rightCols(nullity);
}

CMatrix orth_complement(const CMatrix& basis, int ambient_dim, const Tolerance& tol) {
  if (ambient_dim < 1) fail(Errc::InvalidArgument, "ambient dimension must be positive");
  if (basis.cols() == 0) return CMatrix::Identity(ambient_dim, ambient_dim);
  if (basis.rows() != ambient_dim)
    fail(Errc::DimensionMismatch, "basis rows do not match the ambient dimension");
  if (basis.cols() > ambient_dim)
    fail(Errc::DimensionMismatch, "basis has more columns than the ambient dimension");
  (void)tol;  // the basis is orthonormal by contract, so its rank equals its column count
  Eigen::JacobiSVD<CMatrix> svd(basis, Eigen::ComputeFullU);
  return svd.matrixU().rightCols(ambient_dim - static_cast<int>(basis.cols()));
}

namespace {

CMatrix hconcat(const std::vector<CMatrix>& blocks) {
  if (blocks.empty()) fail(Errc::InvalidArgument, "span_dim of an empty block list");
  const Eigen::Index rows = blocks.front().rows();
  Eigen::Index cols = 0;
  for (const auto& b : blocks) {
    if (b.rows() != rows) fail(Errc::DimensionMismatch, "span_dim blocks disagree on row count");
    cols += b.cols();
  }
  CMatrix joined(rows, cols);
  Eigen::Index at = 0;
  for (const auto& b : blocks) {
    joined.middleCols(at, b.cols()) = b;
    at += b.cols();
  }
  return joined;
}

}  // namespace

int span_dim(const std::vector<CMatrix>& blocks, const Tolerance& tol) {
  const CMatrix joined = hconcat(blocks);
  if (joined.cols() == 0) return 0;
  return numerical_rank(joined, tol);
}

int span_dim_anchored(const std::vector<CMatrix>& blocks, double anchor, const Tolerance& tol) {
  const CMatrix joined = hconcat(blocks);
  if (joined.cols() == 0) return 0;
  Eigen::JacobiSVD<CMatrix> svd(joined);
  const auto& sv = svd.singularValues();
  const double scale = std::max(sv.size() > 0 ? sv(0) : 0.0, anchor);
  const double cutoff =
      tol.rel * scale * static_cast<double>(std::max(joined.rows(), joined.cols()));
  int rank = 0;
  for (Eigen::Index i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

}  // namespace aligndof
