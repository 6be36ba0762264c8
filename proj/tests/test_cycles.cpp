#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace hodgegraph;
using namespace testing_support;

namespace {

std::vector<std::vector<Vertex>> forwards(const CycleSet& s) {
  std::vector<std::vector<Vertex>> out;
  for (const auto& c : s.cycles) out.push_back(c.forward);
  return out;
}

}  // namespace

TEST(Walk, Validation) {
  const Graph g = diag_rect();
  EXPECT_THROW(Walk(g, {1}), Error);
  EXPECT_THROW(Walk(g, {2, 4}), Error);
  EXPECT_NO_THROW(Walk(g, {1, 2}));
}

TEST(Walk, Classification) {
  const Graph g = diag_rect();
  EXPECT_TRUE(Walk(g, {1, 2, 3}).is_trail());
  EXPECT_FALSE(Walk(g, {1, 2, 1}).is_trail());
  EXPECT_FALSE(Walk(g, {1, 2, 1}).is_circuit());
  EXPECT_TRUE(Walk(g, {1, 2, 3, 1}).is_simple_circuit());
  EXPECT_TRUE(Walk(g, {1, 2, 3, 4, 1}).is_simple_circuit());
  // Figure-eight through 1 and 3 repeats vertices but not edges.
  const Walk eight(g, {1, 2, 3, 1, 4, 3});
  EXPECT_TRUE(eight.is_trail());
  EXPECT_FALSE(eight.is_circuit());
  const Walk bowtie(g, {1, 2, 3, 4, 1, 3, 1});
  EXPECT_FALSE(bowtie.is_trail());
}

TEST(LineIntegral, SingleMatchingStep) {
  const Graph g = k3();
  EXPECT_EQ(line_integral(Walk(g, {1, 2, 3, 1}), VectorField::basis(g, {1, 2})), 1.0);
}

TEST(LineIntegral, GradientsVanishOnClosedWalks) {
  Rng rng(1);
  for (const Graph& g : test_graphs()) {
    const VectorField d = gradient(random_scalar(rng, g));
    for (const SimpleCycle& c : simple_cycles(g).cycles) {
      EXPECT_LE(std::abs(line_integral(Walk(g, c.circuit()), d)), 1e-14);
    }
  }
  // A closed walk that is not a trail.
  const Graph g = diag_rect();
  const VectorField d = gradient(random_scalar(rng, g));
  EXPECT_LE(std::abs(line_integral(Walk(g, {1, 2, 1, 3, 4, 3, 1}), d)), 1e-14);
}

TEST(LineIntegral, ReversalNegatesForAntisymmetricFields) {
  Rng rng(2);
  const Graph g = theta_graph();
  const VectorField a = parity_parts(random_field(rng, g)).antisymmetric;
  for (const SimpleCycle& c : simple_cycles(g).cycles) {
    const Walk w(g, c.circuit());
    EXPECT_NEAR(line_integral(w.reversed(), a), -line_integral(w, a), 1e-14);
  }
}

TEST(TrailTangent, OpenTrail) {
  const Graph g = k3();
  const VectorField t = trail_tangent_field(Walk(g, {1, 2, 3}));
  EXPECT_EQ(t(1, 2), 1.0);
  EXPECT_EQ(t(2, 3), 1.0);
  EXPECT_EQ(t.coefficients().sum(), 2.0);
}

TEST(TrailTangent, ClosedTrailAndInnerProduct) {
  Rng rng(3);
  const Graph g = k3();
  const Walk w(g, {1, 2, 3, 1});
  const VectorField t = trail_tangent_field(w);
  const VectorField expected = VectorField::basis(g, {1, 2}) + VectorField::basis(g, {2, 3}) + VectorField::basis(g, {3, 1});
  EXPECT_EQ(t.coefficients(), expected.coefficients());
  const VectorField x = random_field(rng, g);
  EXPECT_NEAR(inner_product(t, x), line_integral(w, x), 1e-15);
}

TEST(TrailTangent, AgreesWithLineIntegralOnRandomTrails) {
  Rng rng(4);
  const Graph g = complete_graph(5);
  int trails = 0;
  for (int t = 0; t < 200; ++t) {
    std::vector<Vertex> seq{static_cast<Vertex>(rng.index(5) + 1)};
    const std::size_t len = 1 + rng.index(6);
    for (std::size_t k = 0; k < len; ++k) {
      Vertex next = seq.back();
      while (next == seq.back()) next = static_cast<Vertex>(rng.index(5) + 1);
      seq.push_back(next);
    }
    const Walk w(g, seq);
    if (!w.is_trail()) {
      EXPECT_THROW(trail_tangent_field(w), Error);
      continue;
    }
    ++trails;
    const VectorField x = random_field(rng, g);
    EXPECT_NEAR(inner_product(trail_tangent_field(w), x), line_integral(w, x), 1e-14);
  }
  EXPECT_GT(trails, 20);
}

TEST(SimpleCycles, TreesHaveNone) {
  for (const Graph& g : {p2(), path_graph(6), star_graph(6)}) EXPECT_TRUE(simple_cycles(g).empty());
}

TEST(SimpleCycles, CycleGraphHasOne) {
  for (int n = 3; n <= 9; ++n) {
    const CycleSet s = simple_cycles(cycle_graph(n));
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s.cycles[0].length(), static_cast<std::size_t>(n));
    EXPECT_EQ(s.cycles[0].forward[1], 2);
    EXPECT_EQ(s.cycles[0].backward[1], n);
  }
}

TEST(SimpleCycles, Rectangle) {
  const CycleSet s = simple_cycles(diag_rect());
  EXPECT_EQ(forwards(s), (std::vector<std::vector<Vertex>>{{1, 2, 3}, {1, 3, 4}, {1, 2, 3, 4}}));
  EXPECT_EQ(s.cycles[1].backward, (std::vector<Vertex>{1, 4, 3}));
  EXPECT_EQ(forwards(s), brute_force_cycles(diag_rect()));
}

TEST(SimpleCycles, MatchBruteForceOnTestGraphs) {
  for (const Graph& g : test_graphs()) EXPECT_EQ(forwards(simple_cycles(g)), brute_force_cycles(g));
  EXPECT_EQ(simple_cycles(complete_graph(5)).size(), 37u);
}

TEST(SimpleCycles, MatchBruteForceOnRandomGraphsUpToSeven) {
  Rng rng(5);
  for (int t = 0; t < 60; ++t) {
    const Graph g = random_connected_graph(rng, 3, 7, 21);
    EXPECT_EQ(forwards(simple_cycles(g)), brute_force_cycles(g));
  }
}

TEST(SimpleCycles, LimitIsEnforced) {
  const Graph g = complete_graph(5);
  try {
    simple_cycles(g, 10);
    ADD_FAILURE();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::CycleLimitExceeded);
  }
  EXPECT_EQ(simple_cycles(g, 37).size(), 37u);
  // A cached result must not bypass a smaller limit.
  EXPECT_THROW(simple_cycles(g, 36), Error);
  EXPECT_THROW(circulation_system(g, 5), Error);
  EXPECT_THROW(curl_matrix(g, 5), Error);
}

TEST(SimpleCycles, CanonicalRepresentative) {
  const std::vector<Vertex> rotated{3, 4, 1, 2, 3};
  const SimpleCycle c = canonical_cycle(rotated);
  EXPECT_EQ(c.forward, (std::vector<Vertex>{1, 2, 3, 4}));
  EXPECT_EQ(c.backward, (std::vector<Vertex>{1, 4, 3, 2}));
  const std::vector<Vertex> reversed{2, 1, 4, 3, 2};
  EXPECT_EQ(canonical_cycle(reversed).forward, c.forward);
}

TEST(CirculationSystem, Rectangle) {
  const Graph g = diag_rect();
  const CirculationSystem sys = circulation_system(g);
  EXPECT_EQ(sys.matrix.rows(), 6);
  EXPECT_EQ(sys.matrix.cols(), 10);
  EXPECT_EQ(sys.matrix, oracle_circulation_matrix(g));
  // The six rows satisfy one linear relation, so the rank is 5 (exact elimination).
  EXPECT_EQ(exact_rank(sys.matrix), 5u);
  EXPECT_EQ(numerics::numerical_rank(sys.matrix), 5);
  Eigen::VectorXd coeffs(6);
  coeffs << 1, -1, 1, -1, -1, 1;
  EXPECT_EQ((coeffs.transpose() * sys.matrix).norm(), 0.0);
}

TEST(CirculationSystem, FourCycle) {
  const CirculationSystem sys = circulation_system(cycle_graph(4));
  EXPECT_EQ(sys.matrix.rows(), 2);
  EXPECT_EQ(sys.matrix.cols(), 8);
  EXPECT_EQ(numerics::numerical_rank(sys.matrix), 2);
}

TEST(CirculationSystem, TreeHasNoRows) {
  const Graph g = star_graph(4);
  const CirculationSystem sys = circulation_system(g);
  EXPECT_EQ(sys.matrix.rows(), 0);
  EXPECT_EQ(sys.matrix.cols(), 6);
}

TEST(CirculationSystem, RotationsGiveTwoDistinctRows) {
  for (const Graph& g : test_graphs()) {
    for (const SimpleCycle& c : simple_cycles(g).cycles) {
      std::set<std::vector<double>> rows;
      const std::size_t n = c.length();
      for (std::size_t shift = 0; shift < n; ++shift) {
        for (bool fwd : {true, false}) {
          std::vector<Vertex> seq = fwd ? c.forward : c.backward;
          std::rotate(seq.begin(), seq.begin() + static_cast<std::ptrdiff_t>(shift), seq.end());
          seq.push_back(seq.front());
          ASSERT_TRUE(Walk(g, seq).is_simple_circuit());
          const Eigen::RowVectorXd r = circulation_row(g, seq);
          rows.insert(std::vector<double>(r.data(), r.data() + r.size()));
        }
      }
      EXPECT_EQ(rows.size(), 2u);
    }
  }
}

TEST(CirculationSystem, NullspaceDimensionFromExactRank) {
  // dim Z = (|V| - 1) + (|E| - rank of the unsigned cycle/edge incidence). This equals
  // 2|V| - 2 exactly when that incidence has rank |E| - |V| + 1.
  for (const Graph& g : test_graphs()) {
    const std::size_t z = static_cast<std::size_t>(circulation_free_basis(g).columns.cols());
    const std::size_t rs = exact_rank(oracle_cycle_edge_incidence(g));
    EXPECT_EQ(z, (g.vertex_count() - 1) + (g.edge_count() - rs));
    EXPECT_EQ(z, oracle_dimensions(g).circulation_free);
  }
  EXPECT_EQ(circulation_free_basis(cycle_graph(7)).dimension(), 12u);
  EXPECT_EQ(circulation_free_basis(diag_rect()).dimension(), 5u);
}
