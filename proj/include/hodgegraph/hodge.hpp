#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "hodgegraph/cycles.hpp"
#include "hodgegraph/fields.hpp"
#include "hodgegraph/operators.hpp"

namespace hodgegraph {

enum class SubspaceRole { CirculationFree, Harmonic, GradientImage, CurlImage, SymmetricPart, AntisymmetricPart };

std::string_view to_string(SubspaceRole role);

/// Orthonormal, sign-normalized columns over the directed-edge coordinates.
struct SubspaceBasis {
  SubspaceRole role;
  Eigen::MatrixXd columns;

  std::size_t dimension() const { return static_cast<std::size_t>(columns.cols()); }
  Eigen::MatrixXd projector() const { return columns * columns.transpose(); }
};

/// Z(G): nullspace of the circulation system.
SubspaceBasis circulation_free_basis(const Graph& g, std::size_t cycle_limit = kDefaultCycleLimit);

/// I - P_Z, the orthogonal projector onto Z(G)^perp. Memoized per graph.
OperatorMatrix curl_matrix(const Graph& g, std::size_t cycle_limit = kDefaultCycleLimit);
VectorField curl(const VectorField& x, std::size_t cycle_limit = kDefaultCycleLimit);

/// H(G) = ker(div) ∩ Z(G), taken as the nullspace of [div; circulation system].
SubspaceBasis harmonic_basis(const Graph& g, std::size_t cycle_limit = kDefaultCycleLimit);
SubspaceBasis gradient_image_basis(const Graph& g);
SubspaceBasis curl_image_basis(const Graph& g, std::size_t cycle_limit = kDefaultCycleLimit);

struct HodgeDimensions {
  std::size_t gradient = 0;
  std::size_t curl = 0;
  std::size_t harmonic = 0;

  bool operator==(const HodgeDimensions&) const = default;
};

/// Numerically computed dimensions next to the closed-form counts
/// dim im grad = dim H = |V| - 1 and dim im curl = 2 xi.
struct DimensionReport {
  HodgeDimensions computed;
  std::size_t circulation_free = 0;
  /// xi = |E| - |V| + 1
  std::size_t cyclomatic = 0;
  HodgeDimensions formula;
  bool matches_formula = false;
};

DimensionReport dimension_report(const Graph& g, std::size_t cycle_limit = kDefaultCycleLimit);

/// X = grad part + curl part + harmonic part.
///
/// Residuals are relative to max(1, |X|): reconstruction, the largest pairwise inner
/// product between parts (relative to max(1, |X|^2)), and the distance between the
/// gradient part and p_grad X.
struct HodgeDecomposition {
  VectorField gradient_part;
  VectorField curl_part;
  VectorField harmonic_part;
  HodgeDimensions dimensions;
  double reconstruction_residual = 0.0;
  double orthogonality_residual = 0.0;
  double gradient_consistency_residual = 0.0;
};

HodgeDecomposition hodge_decompose(const VectorField& x, std::size_t cycle_limit = kDefaultCycleLimit);

/// Exactness and parity checks on one graph. Norms are operator norms.
struct ExactSequenceReport {
  double symmetrize_gradient = 0.0;   // |s o grad|
  double divergence_symmetric = 0.0;  // |div o s|
  double curl_gradient = 0.0;         // |curl o grad|
  double divergence_curl = 0.0;       // |div o curl|
  /// dim X^a / im grad and dim ker(div) / X^s.
  std::size_t antisymmetric_homology = 0;
  std::size_t divergence_homology = 0;
  std::size_t cyclomatic = 0;
  /// |(I - P_Z) s P_Z| and |(I - P_Z) a P_Z|; zero iff Z = Z^s ⊕ Z^a.
  double circulation_free_split = 0.0;
  double harmonic_split = 0.0;
  /// Largest distance of s h, a h from H over harmonic basis vectors h.
  double harmonic_parity_residual = 0.0;
  std::size_t circulation_free_symmetric = 0;
  std::size_t circulation_free_antisymmetric = 0;
  std::size_t harmonic_symmetric = 0;
  std::size_t harmonic_antisymmetric = 0;
  bool pass = false;
};

ExactSequenceReport exact_sequence_report(const Graph& g, double tolerance = 1e-10,
                                          std::size_t cycle_limit = kDefaultCycleLimit);

/// Orthogonal splitting B = im(f) ⊕ im(g*) ⊕ ker(f f* + g* g) for A -f-> B -g-> C,
/// given as the three orthogonal projectors on B.
struct AbstractHodge {
  Eigen::MatrixXd image_f;
  Eigen::MatrixXd image_g_adjoint;
  Eigen::MatrixXd kernel;
};

/// f is |B| x |A|, g is |C| x |B|. Throws Errc::CompositionNotZero when
/// max|g f| > tolerance * max(1, max|f| max|g|), and DimensionMismatch on shape errors.
AbstractHodge abstract_hodge(const Eigen::MatrixXd& f, const Eigen::MatrixXd& g, double tolerance = 1e-10);

}  // namespace hodgegraph
