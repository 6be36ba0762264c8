#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"

using namespace hodgegraph;
using namespace testing_support;
using Eigen::MatrixXd;

namespace {

MatrixXd random_matrix(Rng& rng, Eigen::Index rows, Eigen::Index cols) {
  MatrixXd m(rows, cols);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-1.0, 1.0);
  return m;
}

// Nullspace dimension of [top; bottom] by exact elimination.
std::size_t exact_kernel(const MatrixXd& top, const MatrixXd& bottom) {
  MatrixXd s(top.rows() + bottom.rows(), top.cols());
  s << top, bottom;
  return static_cast<std::size_t>(s.cols()) - exact_rank(s);
}

}  // namespace

TEST(CirculationFree, TreeIsEverything) {
  for (int n = 2; n <= 7; ++n) {
    const Graph g = path_graph(n);
    EXPECT_EQ(circulation_free_basis(g).dimension(), static_cast<std::size_t>(2 * (n - 1)));
    EXPECT_LE(numerics::max_abs(curl_matrix(g).matrix), 1e-12);
  }
}

TEST(CirculationFree, FourCycleAndRectangle) {
  EXPECT_EQ(circulation_free_basis(cycle_graph(4)).dimension(), 6u);
  const Graph g = diag_rect();
  EXPECT_EQ(circulation_free_basis(g).dimension(), oracle_dimensions(g).circulation_free);
  EXPECT_EQ(circulation_free_basis(g).dimension(), 5u);
}

TEST(CirculationFree, BasisIsOrthonormalAndAnnihilated) {
  for (const Graph& g : test_graphs()) {
    const SubspaceBasis z = circulation_free_basis(g);
    EXPECT_EQ(z.role, SubspaceRole::CirculationFree);
    EXPECT_LE(numerics::orthonormality_residual(z.columns), 1e-12);
    if (z.columns.cols() > 0) {
      EXPECT_LE(numerics::max_abs(circulation_system(g).matrix * z.columns), 1e-10);
    }
  }
}

TEST(Curl, SymmetricConstantOnCycleIsFixed) {
  for (int n = 3; n <= 8; ++n) {
    const Graph g = cycle_graph(n);
    const VectorField ones = VectorField::constant(g, 1.0);
    EXPECT_LE((curl(ones) - ones).norm(), 1e-12);
  }
}

TEST(Curl, ProjectorProperties) {
  for (const Graph& g : test_graphs()) {
    const MatrixXd c = curl_matrix(g).matrix;
    EXPECT_EQ(curl_matrix(g).role, OperatorRole::Curl);
    EXPECT_LE(numerics::max_abs(c * c - c), 1e-10);
    EXPECT_LE(numerics::max_abs(c - c.transpose()), 1e-10);
    EXPECT_LE(numerics::operator_norm(c * gradient_matrix(g).matrix), 1e-10);
    EXPECT_LE(numerics::operator_norm(divergence_matrix(g).matrix * c), 1e-10);
  }
}

TEST(Curl, PreservesCirculation) {
  Rng rng(1);
  for (const Graph& g : test_graphs()) {
    const CirculationSystem sys = circulation_system(g);
    for (int t = 0; t < 10; ++t) {
      const VectorField x = random_field(rng, g);
      const Eigen::VectorXd diff = sys.matrix * (x.coefficients() - curl(x).coefficients());
      if (diff.size() > 0) {
        EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-10);
      }
    }
  }
}

TEST(Curl, MatchesOracleDimension) {
  for (const Graph& g : test_graphs()) {
    EXPECT_EQ(static_cast<std::size_t>(numerics::numerical_rank(curl_matrix(g).matrix)), oracle_dimensions(g).curl);
  }
}

TEST(Harmonic, SingleEdge) {
  const Graph g = p2();
  const SubspaceBasis h = harmonic_basis(g);
  ASSERT_EQ(h.dimension(), 1u);
  EXPECT_NEAR(h.columns(0, 0), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(h.columns(1, 0), 1.0 / std::sqrt(2.0), 1e-15);
}

TEST(Harmonic, CycleGraphs) {
  for (int n = 3; n <= 8; ++n) EXPECT_EQ(harmonic_basis(cycle_graph(n)).dimension(), static_cast<std::size_t>(n - 1));
}

TEST(Harmonic, RectangleMatchesOracle) {
  const Graph g = diag_rect();
  EXPECT_EQ(harmonic_basis(g).dimension(), oracle_dimensions(g).harmonic);
  EXPECT_EQ(harmonic_basis(g).dimension(), 2u);
}

TEST(Harmonic, BasisIsDivergenceFreeAndCirculationFree) {
  for (const Graph& g : test_graphs()) {
    const MatrixXd h = harmonic_basis(g).columns;
    EXPECT_LE(numerics::max_abs(divergence_matrix(g).matrix * h), 1e-10);
    EXPECT_LE(numerics::max_abs(curl_matrix(g).matrix * h), 1e-10);
    EXPECT_EQ(harmonic_basis(g).dimension(), oracle_dimensions(g).harmonic);
  }
}

TEST(Harmonic, RectangleExampleFieldIsAGradient) {
  // Y = grad phi with phi = (0, 1, 2, 1), so it has no harmonic component.
  const Graph g = diag_rect();
  const VectorField y = rectangle_field(g);
  const ScalarField phi(g, Eigen::Vector4d(0, 1, 2, 1));
  EXPECT_EQ((gradient(phi) - y).norm(), 0.0);
  const HodgeDecomposition d = hodge_decompose(y);
  EXPECT_LE((d.gradient_part - y).norm(), 1e-10);
  EXPECT_LE(d.curl_part.norm(), 1e-10);
  EXPECT_LE(d.harmonic_part.norm(), 1e-10);
}

TEST(Dimensions, Trees) {
  for (const Graph& g : {p2(), path_graph(6), star_graph(5)}) {
    const DimensionReport r = dimension_report(g);
    const std::size_t n = g.vertex_count();
    EXPECT_EQ(r.computed, (HodgeDimensions{n - 1, 0, n - 1}));
    EXPECT_EQ(r.cyclomatic, 0u);
    EXPECT_TRUE(r.matches_formula);
  }
}

TEST(Dimensions, CycleGraphs) {
  for (int n = 3; n <= 8; ++n) {
    const DimensionReport r = dimension_report(cycle_graph(n));
    const auto m = static_cast<std::size_t>(n);
    EXPECT_EQ(r.computed, (HodgeDimensions{m - 1, 2, m - 1}));
    EXPECT_EQ(r.circulation_free, 2 * m - 2);
    EXPECT_EQ(r.cyclomatic, 1u);
    EXPECT_TRUE(r.matches_formula);
  }
}

TEST(Dimensions, RectangleDepartsFromClosedForm) {
  const DimensionReport r = dimension_report(diag_rect());
  EXPECT_EQ(r.computed, (HodgeDimensions{3, 5, 2}));
  EXPECT_EQ(r.circulation_free, 5u);
  EXPECT_EQ(r.cyclomatic, 2u);
  EXPECT_EQ(r.formula, (HodgeDimensions{3, 4, 3}));
  EXPECT_FALSE(r.matches_formula);
}

TEST(Dimensions, AgreeWithExactCountsOnRandomGraphs) {
  Rng rng(2);
  for (int t = 0; t < 40; ++t) {
    const Graph g = random_connected_graph(rng, 3, 8, 14);
    const DimensionReport r = dimension_report(g);
    const OracleDimensions o = oracle_dimensions(g);
    const std::size_t rs = exact_rank(oracle_cycle_edge_incidence(g));
    EXPECT_EQ(r.computed.gradient, g.vertex_count() - 1);
    EXPECT_EQ(r.computed.curl, o.curl);
    EXPECT_EQ(r.computed.harmonic, o.harmonic);
    EXPECT_EQ(r.computed.harmonic, g.edge_count() - rs);
    EXPECT_EQ(r.computed.gradient + r.computed.curl + r.computed.harmonic, 2 * g.edge_count());
    if (r.cyclomatic <= 1) {
      EXPECT_TRUE(r.matches_formula);
    }
  }
}

TEST(Decomposition, RandomFields) {
  Rng rng(3);
  for (const Graph& g : test_graphs()) {
    for (int t = 0; t < 5; ++t) {
      const VectorField x = random_field(rng, g);
      const HodgeDecomposition d = hodge_decompose(x);
      EXPECT_LE(d.reconstruction_residual, 1e-10);
      EXPECT_LE(d.orthogonality_residual, 1e-10);
      EXPECT_LE(d.gradient_consistency_residual, 1e-10);
      EXPECT_LE(divergence(d.harmonic_part).values().cwiseAbs().maxCoeff(), 1e-10);
      EXPECT_LE(curl(d.gradient_part).norm(), 1e-10);
    }
  }
}

TEST(Decomposition, TreeHasNoCurlPart) {
  Rng rng(4);
  const Graph g = star_graph(6);
  const HodgeDecomposition d = hodge_decompose(random_field(rng, g));
  EXPECT_LE(d.curl_part.norm(), 1e-12);
  EXPECT_EQ(d.dimensions, (HodgeDimensions{5, 0, 5}));
}

TEST(Decomposition, CycleLimitPropagates) {
  Rng rng(5);
  const Graph g = complete_graph(5);
  try {
    hodge_decompose(random_field(rng, g), 3);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CycleLimitExceeded);
  }
}

TEST(ExactSequence, HomologyAndSplits) {
  for (const Graph& g : test_graphs()) {
    const ExactSequenceReport r = exact_sequence_report(g);
    const std::size_t xi = g.edge_count() + 1 - g.vertex_count();
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.cyclomatic, xi);
    EXPECT_EQ(r.antisymmetric_homology, xi);
    EXPECT_EQ(r.divergence_homology, xi);
    EXPECT_LE(r.symmetrize_gradient, 1e-12);
    EXPECT_LE(r.divergence_symmetric, 1e-12);
    EXPECT_LE(r.circulation_free_split, 1e-10);
    EXPECT_LE(r.harmonic_split, 1e-10);
    EXPECT_LE(r.harmonic_parity_residual, 1e-10);

    const MatrixXd c = oracle_circulation_matrix(g);
    const MatrixXd d = oracle_divergence_matrix(g);
    const MatrixXd rev = reversal_matrix(g);
    const MatrixXd id = MatrixXd::Identity(rev.rows(), rev.cols());
    EXPECT_EQ(r.circulation_free_symmetric, exact_kernel(c, id - rev));
    EXPECT_EQ(r.circulation_free_antisymmetric, exact_kernel(c, id + rev));
    EXPECT_EQ(r.circulation_free_symmetric + r.circulation_free_antisymmetric, oracle_dimensions(g).circulation_free);
    MatrixXd dc(d.rows() + c.rows(), c.cols());
    dc << d, c;
    EXPECT_EQ(r.harmonic_symmetric, exact_kernel(dc, id - rev));
    EXPECT_EQ(r.harmonic_antisymmetric, exact_kernel(dc, id + rev));
  }
}

TEST(ExactSequence, TreeAndRectangle) {
  EXPECT_EQ(exact_sequence_report(path_graph(5)).antisymmetric_homology, 0u);
  const ExactSequenceReport r = exact_sequence_report(diag_rect());
  EXPECT_EQ(r.antisymmetric_homology, 2u);
  EXPECT_EQ(r.divergence_homology, 2u);
}

TEST(AbstractHodge, GradientAndCurl) {
  for (const Graph& g : test_graphs()) {
    const MatrixXd grad = gradient_matrix(g).matrix;
    const MatrixXd c = curl_matrix(g).matrix;
    const AbstractHodge a = abstract_hodge(grad, c);
    EXPECT_LE(numerics::max_abs(a.image_f - helmholtz_projector(g).matrix), 1e-10);
    EXPECT_LE(numerics::max_abs(a.image_g_adjoint - c), 1e-10);
    EXPECT_LE(numerics::max_abs(a.kernel - harmonic_basis(g).projector()), 1e-10);
  }
}

TEST(AbstractHodge, ZeroMapsLeaveEverythingInKernel) {
  const AbstractHodge a = abstract_hodge(MatrixXd::Zero(4, 2), MatrixXd::Zero(3, 4));
  EXPECT_EQ(a.image_f.norm(), 0.0);
  EXPECT_EQ(a.image_g_adjoint.norm(), 0.0);
  EXPECT_LE(numerics::max_abs(a.kernel - MatrixXd::Identity(4, 4)), 1e-12);
}

TEST(AbstractHodge, RandomComplex) {
  Rng rng(6);
  Eigen::HouseholderQR<MatrixXd> qr(random_matrix(rng, 8, 8));
  const MatrixXd q = qr.householderQ();
  const MatrixXd f = q.leftCols(3) * random_matrix(rng, 3, 4);
  const MatrixXd g = random_matrix(rng, 2, 3) * q.middleCols(3, 3).transpose();
  const AbstractHodge a = abstract_hodge(f, g);
  EXPECT_NEAR(a.image_f.trace(), 3.0, 1e-10);
  EXPECT_NEAR(a.image_g_adjoint.trace(), 2.0, 1e-10);
  EXPECT_NEAR(a.kernel.trace(), 3.0, 1e-10);
  EXPECT_LE(numerics::max_abs(a.image_f + a.image_g_adjoint + a.kernel - MatrixXd::Identity(8, 8)), 1e-10);
  EXPECT_LE(numerics::max_abs(a.image_f * a.image_g_adjoint), 1e-10);
  EXPECT_LE(numerics::max_abs(a.image_f * a.kernel), 1e-10);
  EXPECT_LE(numerics::max_abs(a.image_f * f - f), 1e-10);
}

TEST(AbstractHodge, Errors) {
  try {
    abstract_hodge(MatrixXd::Identity(3, 3), MatrixXd::Identity(3, 3));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CompositionNotZero);
  }
  try {
    abstract_hodge(MatrixXd::Zero(3, 2), MatrixXd::Zero(2, 4));
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::DimensionMismatch);
  }
}

TEST(SubspaceRole, Names) {
  EXPECT_EQ(to_string(SubspaceRole::CirculationFree), "circulation_free");
  EXPECT_EQ(to_string(SubspaceRole::Harmonic), "harmonic");
}
