#pragma once

#include <Eigen/Dense>

namespace hodgegraph::numerics {

/// Singular values at or below relative * max(1, sigma_max) count as zero.
/// One policy for every subspace computation keeps dimension reports consistent.
struct RankPolicy {
  double relative = 1e-9;

  double threshold(double sigma_max) const { return relative * std::max(1.0, sigma_max); }
};

/// Singular values of m, descending. Tall inputs are first compressed to their R factor.
Eigen::VectorXd singular_values(const Eigen::MatrixXd& m);

Eigen::Index numerical_rank(const Eigen::MatrixXd& m, RankPolicy policy = {});

/// Orthonormal basis of ker(m), one column per null direction (cols - rank columns).
Eigen::MatrixXd nullspace_basis(const Eigen::MatrixXd& m, RankPolicy policy = {});

/// Orthonormal basis of the column space of m.
Eigen::MatrixXd range_basis(const Eigen::MatrixXd& m, RankPolicy policy = {});

/// max |B^T B - I|.
double orthonormality_residual(const Eigen::MatrixXd& basis);

/// B B^T for an orthonormal B (zero matrix for an empty basis). Throws Errc::NotOrthonormal
/// when the orthonormality residual exceeds 1e-10.
Eigen::MatrixXd orthogonal_projector(const Eigen::MatrixXd& basis);

/// Solves m x = rhs on the orthogonal complement of span(deflation).
///
/// m must be symmetric positive semidefinite with kernel span(deflation). The rhs is
/// projected onto the complement before solving and the returned x is orthogonal to
/// the deflation set. Throws RhsNotOrthogonal when |D^T rhs| exceeds
/// tolerance * (1 + max|rhs|) (D orthonormalized) and SingularBeyondDeflation when
/// m + D D^T is not positive definite or the residual is not small.
Eigen::VectorXd deflated_solve(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs,
                               const Eigen::MatrixXd& deflation, double tolerance = 1e-9);

/// Flips each column so its first coordinate with |x| > 1e-10 is positive.
void normalize_signs(Eigen::MatrixXd& basis);

/// Largest absolute entry, 0 for empty matrices.
double max_abs(const Eigen::MatrixXd& m);

/// Largest singular value, 0 for empty matrices.
double operator_norm(const Eigen::MatrixXd& m);

}  // namespace hodgegraph::numerics
