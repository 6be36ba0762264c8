#pragma once

#include <vector>

#include "hodgegraph/fields.hpp"
#include "hodgegraph/graph.hpp"

namespace hodgegraph {

/// Subgraph H of G given by a vertex subset and an edge subset. Isolated vertices are allowed.
struct SubgraphSpec {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;

  /// Throws Errc::InvalidSubgraph unless H is a subgraph of g. Returns the canonical form.
  SubgraphSpec validated(const Graph& g) const;

  bool contains(Vertex v) const;

  /// The whole graph as a subgraph of itself.
  static SubgraphSpec whole(const Graph& g);
  /// Single vertex, no edges.
  static SubgraphSpec isolated_vertex(Vertex v) { return {{v}, {}}; }
};

/// Boundary graph of H in G together with the inward normal field.
///
/// boundary_edges are the edges of G with exactly one endpoint in V_H.
/// v_minus holds their endpoints inside V_H, v_plus those outside.
/// normal(u) = +1 if base(u) is in v_plus, -1 if in v_minus, 0 off the boundary.
struct BoundarySpec {
  std::vector<Vertex> v_minus;
  std::vector<Vertex> v_plus;
  std::vector<Edge> boundary_edges;
  VectorField normal;
  /// in_tangent[p] is true for directed edges of the boundary's tangent graph.
  std::vector<bool> in_tangent;
};

BoundarySpec boundary(const Graph& g, const SubgraphSpec& h);

}  // namespace hodgegraph
