// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>
#include <vector>

#include "aligndof/errors.hpp"

namespace aligndof {

using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

/// Relative singular-value threshold for all rank decisions. A singular value
/// counts toward the rank when sigma_i > rel * sigma_max * max(rows, cols).
struct Tolerance {
  double rel = 1e-10;

  Tolerance() = default;
  explicit Tolerance(double r) : rel(r) {
    if (!(rel > 0.0 && rel < 1.0)) fail(Errc::InvalidArgument, "tolerance must lie in (0, 1)");
  }
};

/// SVD-based numerical rank. The all-zero matrix has rank 0.
int numerical_rank(const CMatrix& a, const Tolerance& tol = {});

/// Orthonormal basis of the numerical null space, one column per dimension.
/// Column count is cols(a) - numerical_rank(a); may be zero columns.
CMatrix null_space_basis(const CMatrix& a, const Tolerance& tol = {});

/// Orthonormal basis of the orthogonal complement of the column space of
/// `basis` (which must itself have orthonormal columns) inside C^ambient_dim.
CMatrix orth_complement(const CMatrix& basis, int ambient_dim, const Tolerance& tol = {});

/// Dimension of the joint column space of the given blocks (equal row counts).
int span_dim(const std::vector<CMatrix>& blocks, const Tolerance& tol = {});

/// span_dim with the rank cutoff referenced to max(sigma_max, anchor). Used
/// when the blocks may be numerically zero relative to the inputs that
/// produced them (e.g. zero-forced interference), where a purely relative
/// cutoff would count noise as dimensions.
int span_dim_anchored(const std::vector<CMatrix>& blocks, double anchor, const Tolerance& tol = {});

}  // namespace aligndof
