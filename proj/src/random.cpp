#include "hodgegraph/random.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace hodgegraph {

double Rng::uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

std::size_t Rng::index(std::size_t n) {
  // Rejection sampling keeps the draw unbiased.
  const std::uint64_t range = n;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x = engine_();
  while (x >= limit) x = engine_();
  return static_cast<std::size_t>(x % range);
}

long Rng::integer(long lo, long hi) { return lo + static_cast<long>(index(static_cast<std::size_t>(hi - lo + 1))); }

Graph random_connected_graph(Rng& rng, std::size_t min_vertices, std::size_t max_vertices, std::size_t max_edges) {
  const std::size_t n = min_vertices + rng.index(max_vertices - min_vertices + 1);
  std::vector<Vertex> vertices(n);
  for (std::size_t i = 0; i < n; ++i) vertices[i] = static_cast<Vertex>(i + 1);

  std::set<std::pair<Vertex, Vertex>> edges;
  for (std::size_t i = 1; i < n; ++i) {
    const auto parent = static_cast<Vertex>(rng.index(i) + 1);
    edges.insert({parent, static_cast<Vertex>(i + 1)});
  }
  const std::size_t complete = n * (n - 1) / 2;
  const std::size_t cap = std::max(n - 1, std::min(max_edges, complete));
  const std::size_t target = (n - 1) + rng.index(cap - (n - 1) + 1);
  while (edges.size() < target) {
    auto a = static_cast<Vertex>(rng.index(n) + 1);
    auto b = static_cast<Vertex>(rng.index(n) + 1);
    if (a == b) continue;
    edges.insert({std::min(a, b), std::max(a, b)});
  }
  return Graph::build(vertices, {edges.begin(), edges.end()});
}

SubgraphSpec random_subgraph(Rng& rng, const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> inside(n, false);
  std::size_t count = 0;
  // Nonempty and proper.
  while (count == 0 || count == n) {
    count = 0;
    for (std::size_t i = 0; i < n; ++i) {
      inside[i] = rng.coin();
      count += inside[i] ? 1 : 0;
    }
    if (n == 1) break;
  }
  SubgraphSpec h;
  for (std::size_t i = 0; i < n; ++i) {
    if (inside[i]) h.vertices.push_back(g.label(i));
  }
  for (const Edge& e : g.edges()) {
    if (inside[g.vertex_index(e.lo)] && inside[g.vertex_index(e.hi)] && rng.coin()) h.edges.push_back(e);
  }
  return h;
}

VectorField random_field(Rng& rng, const Graph& g) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(2 * g.edge_count()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = rng.uniform(-1.0, 1.0);
  return {g, std::move(c)};
}

ScalarField random_scalar(Rng& rng, const Graph& g) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(g.vertex_count()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = rng.uniform(-1.0, 1.0);
  return {g, std::move(v)};
}

VectorField random_integer_field(Rng& rng, const Graph& g, long bound) {
  Eigen::VectorXd c(static_cast<Eigen::Index>(2 * g.edge_count()));
  for (Eigen::Index i = 0; i < c.size(); ++i) c[i] = static_cast<double>(rng.integer(-bound, bound));
  return {g, std::move(c)};
}

ScalarField random_integer_scalar(Rng& rng, const Graph& g, long bound) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(g.vertex_count()));
  for (Eigen::Index i = 0; i < v.size(); ++i) v[i] = static_cast<double>(rng.integer(-bound, bound));
  return {g, std::move(v)};
}

}  // namespace hodgegraph
