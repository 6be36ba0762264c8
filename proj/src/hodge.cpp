#include "hodgegraph/hodge.hpp"

#include <algorithm>
#include <cmath>

#include "hodgegraph/numerics.hpp"

namespace hodgegraph {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

std::size_t dim(Index n) { return static_cast<std::size_t>(n); }

MatrixXd normalized(MatrixXd basis) {
  numerics::normalize_signs(basis);
  return basis;
}

// Re-running the enumeration enforces the caller's cycle limit even when a projector
// was memoized under a more generous one.
void check_cycle_limit(const Graph& g, std::size_t limit) { (void)simple_cycles(g, limit); }

std::shared_ptr<const MatrixXd> cached_circulation_free(const Graph& g, std::size_t limit) {
  check_cycle_limit(g, limit);
  return g.memo<MatrixXd>("circulation_free", [&] {
    return normalized(numerics::nullspace_basis(circulation_system(g, limit).matrix));
  });
}

std::shared_ptr<const MatrixXd> cached_curl(const Graph& g, std::size_t limit) {
  auto z = cached_circulation_free(g, limit);
  return g.memo<MatrixXd>("curl", [&] {
    const Index n = z->rows();
    return MatrixXd(MatrixXd::Identity(n, n) - numerics::orthogonal_projector(*z));
  });
}

std::shared_ptr<const MatrixXd> cached_harmonic(const Graph& g, std::size_t limit) {
  check_cycle_limit(g, limit);
  return g.memo<MatrixXd>("harmonic", [&] {
    const MatrixXd div = divergence_matrix(g).matrix;
    const MatrixXd circ = circulation_system(g, limit).matrix;
    MatrixXd stacked(div.rows() + circ.rows(), div.cols());
    stacked << div, circ;
    return normalized(numerics::nullspace_basis(stacked));
  });
}

MatrixXd symmetrizer(const Graph& g) {
  const MatrixXd r = reversal_matrix(g);
  return 0.5 * (MatrixXd::Identity(r.rows(), r.cols()) + r);
}

MatrixXd antisymmetrizer(const Graph& g) {
  const MatrixXd r = reversal_matrix(g);
  return 0.5 * (MatrixXd::Identity(r.rows(), r.cols()) - r);
}

std::size_t rank_of(const MatrixXd& m) { return dim(numerics::numerical_rank(m)); }

}  // namespace

std::string_view to_string(SubspaceRole role) {
  switch (role) {
    case SubspaceRole::CirculationFree: return "circulation_free";
    case SubspaceRole::Harmonic: return "harmonic";
    case SubspaceRole::GradientImage: return "gradient_image";
    case SubspaceRole::CurlImage: return "curl_image";
    case SubspaceRole::SymmetricPart: return "symmetric_part";
    case SubspaceRole::AntisymmetricPart: return "antisymmetric_part";
  }
  return "unknown";
}

SubspaceBasis circulation_free_basis(const Graph& g, std::size_t cycle_limit) {
  return {SubspaceRole::CirculationFree, *cached_circulation_free(g, cycle_limit)};
}

OperatorMatrix curl_matrix(const Graph& g, std::size_t cycle_limit) {
  return {OperatorRole::Curl, *cached_curl(g, cycle_limit)};
}

VectorField curl(const VectorField& x, std::size_t cycle_limit) {
  return {x.graph(), *cached_curl(x.graph(), cycle_limit) * x.coefficients()};
}

SubspaceBasis harmonic_basis(const Graph& g, std::size_t cycle_limit) {
  return {SubspaceRole::Harmonic, *cached_harmonic(g, cycle_limit)};
}

SubspaceBasis gradient_image_basis(const Graph& g) {
  return {SubspaceRole::GradientImage, normalized(numerics::range_basis(gradient_matrix(g).matrix))};
}

SubspaceBasis curl_image_basis(const Graph& g, std::size_t cycle_limit) {
  return {SubspaceRole::CurlImage, normalized(numerics::range_basis(*cached_curl(g, cycle_limit)))};
}

DimensionReport dimension_report(const Graph& g, std::size_t cycle_limit) {
  g.require_connected();
  DimensionReport r;
  r.computed.gradient = rank_of(gradient_matrix(g).matrix);
  r.computed.curl = rank_of(*cached_curl(g, cycle_limit));
  r.computed.harmonic = dim(cached_harmonic(g, cycle_limit)->cols());
  r.circulation_free = dim(cached_circulation_free(g, cycle_limit)->cols());
  r.cyclomatic = g.edge_count() + 1 - g.vertex_count();
  r.formula = {g.vertex_count() - 1, 2 * r.cyclomatic, g.vertex_count() - 1};
  r.matches_formula = r.computed == r.formula;
  return r;
}

HodgeDecomposition hodge_decompose(const VectorField& x, std::size_t cycle_limit) {
  const Graph& g = x.graph();
  g.require_connected();
  const VectorXd& c = x.coefficients();
  const MatrixXd& h = *cached_harmonic(g, cycle_limit);

  const VectorXd curl_part = *cached_curl(g, cycle_limit) * c;
  const VectorXd harmonic_part = h * (h.transpose() * c);
  const VectorXd grad_part = c - curl_part - harmonic_part;
  const VectorXd direct = helmholtz_projector(g).matrix * c;

  const double scale = std::max(1.0, c.norm());
  HodgeDecomposition d{VectorField(g, grad_part), VectorField(g, curl_part), VectorField(g, harmonic_part),
                       {}, 0.0, 0.0, 0.0};
  d.dimensions = dimension_report(g, cycle_limit).computed;
  d.reconstruction_residual = (c - grad_part - curl_part - harmonic_part).norm() / scale;
  d.orthogonality_residual = std::max({std::abs(grad_part.dot(curl_part)), std::abs(grad_part.dot(harmonic_part)),
                                       std::abs(curl_part.dot(harmonic_part))}) /
                             (scale * scale);
  d.gradient_consistency_residual = (grad_part - direct).norm() / scale;
  return d;
}

ExactSequenceReport exact_sequence_report(const Graph& g, double tolerance, std::size_t cycle_limit) {
  g.require_connected();
  const MatrixXd grad = gradient_matrix(g).matrix;
  const MatrixXd div = divergence_matrix(g).matrix;
  const MatrixXd& curl_m = *cached_curl(g, cycle_limit);
  const MatrixXd s = symmetrizer(g);
  const MatrixXd a = antisymmetrizer(g);
  const MatrixXd& z = *cached_circulation_free(g, cycle_limit);
  const MatrixXd& h = *cached_harmonic(g, cycle_limit);
  const Index n = grad.rows();
  const MatrixXd id = MatrixXd::Identity(n, n);
  const MatrixXd pz = z * z.transpose();
  const MatrixXd ph = h * h.transpose();

  ExactSequenceReport r;
  r.symmetrize_gradient = numerics::operator_norm(s * grad);
  r.divergence_symmetric = numerics::operator_norm(div * s);
  r.curl_gradient = numerics::operator_norm(curl_m * grad);
  r.divergence_curl = numerics::operator_norm(div * curl_m);

  const std::size_t rank_grad = rank_of(grad);
  const std::size_t kernel_div = dim(n) - rank_of(div);
  r.antisymmetric_homology = g.edge_count() - rank_grad;
  r.divergence_homology = kernel_div - g.edge_count();
  r.cyclomatic = g.edge_count() + 1 - g.vertex_count();

  r.circulation_free_split =
      std::max(numerics::operator_norm((id - pz) * s * pz), numerics::operator_norm((id - pz) * a * pz));
  r.harmonic_split = std::max(numerics::operator_norm((id - ph) * s * ph), numerics::operator_norm((id - ph) * a * ph));
  for (Index k = 0; k < h.cols(); ++k) {
    const VectorXd sh = s * h.col(k);
    const VectorXd ah = a * h.col(k);
    r.harmonic_parity_residual =
        std::max({r.harmonic_parity_residual, (sh - ph * sh).norm(), (ah - ph * ah).norm()});
  }
  r.circulation_free_symmetric = rank_of(s * z);
  r.circulation_free_antisymmetric = rank_of(a * z);
  r.harmonic_symmetric = rank_of(s * h);
  r.harmonic_antisymmetric = rank_of(a * h);

  r.pass = r.symmetrize_gradient <= tolerance && r.divergence_symmetric <= tolerance &&
           r.curl_gradient <= tolerance && r.divergence_curl <= tolerance &&
           r.antisymmetric_homology == r.cyclomatic && r.divergence_homology == r.cyclomatic &&
           r.circulation_free_split <= tolerance && r.harmonic_split <= tolerance &&
           r.harmonic_parity_residual <= tolerance;
  return r;
}

AbstractHodge abstract_hodge(const MatrixXd& f, const MatrixXd& g, double tolerance) {
  if (g.cols() != f.rows()) throw Error(Errc::DimensionMismatch, "g must act on the codomain of f");
  const Index n = f.rows();
  if (n > 0 && f.cols() > 0 && g.rows() > 0) {
    const double scale = std::max(1.0, numerics::max_abs(f) * numerics::max_abs(g));
    const double comp = numerics::max_abs(g * f);
    if (comp > tolerance * scale) {
      throw Error(Errc::CompositionNotZero, "max|g f| = " + std::to_string(comp));
    }
  }
  AbstractHodge out;
  out.image_f = numerics::orthogonal_projector(numerics::range_basis(f));
  out.image_g_adjoint = numerics::orthogonal_projector(numerics::range_basis(g.transpose()));
  const MatrixXd box = f * f.transpose() + g.transpose() * g;
  out.kernel = numerics::orthogonal_projector(numerics::nullspace_basis(box));
  return out;
}

}  // namespace hodgegraph
