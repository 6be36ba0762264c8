#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "hodgegraph/boundary.hpp"
#include "hodgegraph/fields.hpp"

namespace hodgegraph {

/// Seeded generator with draws defined on top of the raw mt19937_64 stream, so
/// sequences agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double uniform();
  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n). n must be positive.
  std::size_t index(std::size_t n);
  /// Uniform integer in [lo, hi].
  long integer(long lo, long hi);
  bool coin(double p = 0.5) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Connected graph on labels 1..n with n in [min_vertices, max_vertices] and at most
/// max_edges edges (never fewer than n - 1). A random tree plus random extra edges.
Graph random_connected_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices, std::size_t max_edges);

/// Nonempty proper vertex subset; each edge of G inside the subset is kept with probability 1/2.
SubgraphSpec random_subgraph(Rng& rng, const Graph& g);

/// Coefficients uniform in [-1, 1).
VectorField random_field(Rng& rng, const Graph& g);
ScalarField random_scalar(Rng& rng, const Graph& g);
/// Integer coefficients in [-bound, bound].
VectorField random_integer_field(Rng& rng, const Graph& g, long bound = 5);
ScalarField random_integer_scalar(Rng& rng, const Graph& g, long bound = 5);

}  // namespace hodgegraph
