#include "hodgegraph/numerics.hpp"

#include <cmath>

#include <Eigen/Cholesky>
#include <Eigen/QR>
#include <Eigen/SVD>

#include "hodgegraph/error.hpp"

namespace hodgegraph::numerics {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

// Row compression: for rows > cols, ker(m) = ker(R) and the singular values agree.
MatrixXd compress_rows(const MatrixXd& m) {
  if (m.rows() <= m.cols()) return m;
  Eigen::HouseholderQR<MatrixXd> qr(m);
  return qr.matrixQR().topRows(m.cols()).triangularView<Eigen::Upper>();
}

Index rank_from(const VectorXd& sigma, RankPolicy policy) {
  if (sigma.size() == 0) return 0;
  const double thr = policy.threshold(sigma[0]);
  Index r = 0;
  while (r < sigma.size() && sigma[r] > thr) ++r;
  return r;
}

}  // namespace

VectorXd singular_values(const MatrixXd& m) {
  if (m.size() == 0) return VectorXd();
  Eigen::JacobiSVD<MatrixXd> svd(compress_rows(m));
  return svd.singularValues();
}

Index numerical_rank(const MatrixXd& m, RankPolicy policy) { return rank_from(singular_values(m), policy); }

MatrixXd nullspace_basis(const MatrixXd& m, RankPolicy policy) {
  const Index n = m.cols();
  if (m.rows() == 0 || n == 0) return MatrixXd::Identity(n, n);
  const MatrixXd r = compress_rows(m);
  Eigen::JacobiSVD<MatrixXd> svd(r, Eigen::ComputeFullV);
  const Index rank = rank_from(svd.singularValues(), policy);
  return svd.matrixV().rightCols(n - rank);
}

MatrixXd range_basis(const MatrixXd& m, RankPolicy policy) {
  if (m.size() == 0) return MatrixXd(m.rows(), 0);
  Eigen::JacobiSVD<MatrixXd> svd(m, Eigen::ComputeThinU);
  const Index rank = rank_from(svd.singularValues(), policy);
  return svd.matrixU().leftCols(rank);
}

double orthonormality_residual(const MatrixXd& basis) {
  if (basis.cols() == 0) return 0.0;
  return max_abs(basis.transpose() * basis - MatrixXd::Identity(basis.cols(), basis.cols()));
}

MatrixXd orthogonal_projector(const MatrixXd& basis) {
  const double res = orthonormality_residual(basis);
  if (res > 1e-10) throw Error(Errc::NotOrthonormal, "basis residual " + std::to_string(res));
  return basis * basis.transpose();
}

VectorXd deflated_solve(const MatrixXd& m, const VectorXd& rhs, const MatrixXd& deflation, double tolerance) {
  if (m.rows() != m.cols() || m.rows() != rhs.size() || deflation.rows() != rhs.size()) {
    throw Error(Errc::DimensionMismatch, "deflated_solve operand sizes disagree");
  }
  const Index n = rhs.size();
  if (n == 0) return VectorXd();
  const MatrixXd d = range_basis(deflation);
  const double scale = 1.0 + rhs.cwiseAbs().maxCoeff();
  const VectorXd along = d.transpose() * rhs;
  if (along.size() > 0 && along.cwiseAbs().maxCoeff() > tolerance * scale) {
    throw Error(Errc::RhsNotOrthogonal, "rhs component along deflation set " +
                                            std::to_string(along.cwiseAbs().maxCoeff()));
  }
  const VectorXd b = rhs - d * along;
  if (b.cwiseAbs().maxCoeff() == 0.0) return VectorXd::Zero(n);

  const MatrixXd shifted = m + d * d.transpose();
  Eigen::LLT<MatrixXd> llt(shifted);
  if (llt.info() != Eigen::Success) {
    throw Error(Errc::SingularBeyondDeflation, "matrix has kernel outside the deflation set");
  }
  VectorXd x = llt.solve(b);
  x -= d * (d.transpose() * x);
  const double residual = (m * x - b).cwiseAbs().maxCoeff();
  const double mscale = 1.0 + max_abs(m) * x.cwiseAbs().maxCoeff();
  if (!std::isfinite(residual) || residual > 1e-8 * mscale) {
    throw Error(Errc::SingularBeyondDeflation, "solve residual " + std::to_string(residual));
  }
  return x;
}

void normalize_signs(MatrixXd& basis) {
  for (Index c = 0; c < basis.cols(); ++c) {
    for (Index r = 0; r < basis.rows(); ++r) {
      if (std::abs(basis(r, c)) > 1e-10) {
        if (basis(r, c) < 0) basis.col(c) *= -1.0;
        break;
      }
    }
  }
}

double max_abs(const MatrixXd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

double operator_norm(const MatrixXd& m) {
  const VectorXd s = singular_values(m);
  return s.size() == 0 ? 0.0 : s[0];
}

}  // namespace hodgegraph::numerics
