#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hodgegraph/fields.hpp"

namespace hodgegraph {

inline constexpr std::size_t kDefaultCycleLimit = 1'000'000;

/// Walk w_0 w_1 ... w_N (N >= 1) of mutually adjacent vertices.
class Walk {
 public:
  /// Throws Errc::InvalidWalk for fewer than two vertices or a non-adjacent step.
  Walk(Graph graph, std::vector<Vertex> vertices);

  const Graph& graph() const { return graph_; }
  std::span<const Vertex> vertices() const { return vertices_; }
  /// N, the number of steps.
  std::size_t length() const { return vertices_.size() - 1; }

  /// No undirected edge traversed twice.
  bool is_trail() const;
  /// Closed trail.
  bool is_circuit() const;
  /// Circuit of length >= 3 without repeated vertices among w_0 .. w_{N-1}.
  bool is_simple_circuit() const;

  /// Same vertices in reverse order.
  Walk reversed() const;

 private:
  Graph graph_;
  std::vector<Vertex> vertices_;
};

/// w . X = sum_n X(w_{n-1} w_n).
double line_integral(const Walk& w, const VectorField& x);

/// t_w(ij) = 1 for every step (i, j) of the trail, 0 elsewhere. Throws Errc::NotATrail.
VectorField trail_tangent_field(const Walk& w);

/// One simple cycle of G in its two canonical orientations.
///
/// Both sequences start at the cycle's smallest vertex and omit the closing repeat.
/// `forward` continues to the smaller of the two cycle neighbors, `backward` to the larger.
struct SimpleCycle {
  std::vector<Vertex> forward;
  std::vector<Vertex> backward;

  std::size_t length() const { return forward.size(); }
  /// Closed vertex sequence (first vertex repeated at the end).
  std::vector<Vertex> circuit(bool forward_orientation = true) const;
};

/// Every simple cycle of G exactly once, ordered by (length, forward sequence).
struct CycleSet {
  std::vector<SimpleCycle> cycles;

  std::size_t size() const { return cycles.size(); }
  bool empty() const { return cycles.empty(); }
};

/// Exhaustive enumeration. Throws Errc::CycleLimitExceeded once more than `limit`
/// cycles are found. Results are memoized per graph.
CycleSet simple_cycles(const Graph& g, std::size_t limit = kDefaultCycleLimit);

/// Canonical representative of a closed simple circuit given in any rotation/orientation.
SimpleCycle canonical_cycle(std::span<const Vertex> closed_circuit);

/// Row functional of a closed circuit: 1 at every traversed directed edge.
Eigen::RowVectorXd circulation_row(const Graph& g, std::span<const Vertex> closed_circuit);

/// Line-integral functionals of every oriented simple circuit.
///
/// Rows come in pairs per cycle (forward, then backward orientation), columns follow
/// the canonical directed-edge order. X is circulation-free iff matrix * X = 0.
struct CirculationSystem {
  Eigen::MatrixXd matrix;
  std::vector<std::vector<Vertex>> circuits;
};

CirculationSystem circulation_system(const Graph& g, std::size_t limit = kDefaultCycleLimit);

}  // namespace hodgegraph
