#include "hodgegraph/boundary.hpp"

#include <algorithm>
#include <set>

namespace hodgegraph {

SubgraphSpec SubgraphSpec::validated(const Graph& g) const {
  SubgraphSpec out;
  std::set<Vertex> vs;
  for (Vertex v : vertices) {
    if (!g.find_vertex(v)) throw Error(Errc::InvalidSubgraph, "vertex " + std::to_string(v) + " not in graph");
    if (!vs.insert(v).second) throw Error(Errc::InvalidSubgraph, "vertex " + std::to_string(v) + " repeated");
  }
  std::set<Edge> es;
  for (Edge e : edges) {
    Edge c{std::min(e.lo, e.hi), std::max(e.lo, e.hi)};
    if (!g.has_edge(c.lo, c.hi)) {
      throw Error(Errc::InvalidSubgraph,
                  "edge {" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "} not in graph");
    }
    if (!vs.contains(c.lo) || !vs.contains(c.hi)) {
      throw Error(Errc::InvalidSubgraph,
                  "edge {" + std::to_string(c.lo) + "," + std::to_string(c.hi) + "} leaves the vertex subset");
    }
    if (!es.insert(c).second) throw Error(Errc::InvalidSubgraph, "edge repeated");
  }
  out.vertices.assign(vs.begin(), vs.end());
  out.edges.assign(es.begin(), es.end());
  return out;
}

bool SubgraphSpec::contains(Vertex v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

SubgraphSpec SubgraphSpec::whole(const Graph& g) {
  return {{g.vertices().begin(), g.vertices().end()}, {g.edges().begin(), g.edges().end()}};
}

BoundarySpec boundary(const Graph& g, const SubgraphSpec& h) {
  const SubgraphSpec sub = h.validated(g);
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex v : sub.vertices) inside[g.vertex_index(v)] = true;

  std::set<Vertex> minus, plus;
  std::vector<Edge> bedges;
  for (const Edge& e : g.edges()) {
    const bool lo_in = inside[g.vertex_index(e.lo)];
    const bool hi_in = inside[g.vertex_index(e.hi)];
    if (lo_in == hi_in) continue;
    bedges.push_back(e);
    minus.insert(lo_in ? e.lo : e.hi);
    plus.insert(lo_in ? e.hi : e.lo);
  }

  const TangentGraph& tg = g.tangent();
  Eigen::VectorXd n = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(tg.size()));
  std::vector<bool> in_tangent(tg.size(), false);
  for (std::size_t p = 0; p < tg.size(); ++p) {
    const bool base_in = inside[tg.base_index(p)];
    const bool tip_in = inside[tg.tip_index(p)];
    if (base_in == tip_in) continue;
    in_tangent[p] = true;
    n[static_cast<Eigen::Index>(p)] = base_in ? -1.0 : 1.0;
  }

  return BoundarySpec{{minus.begin(), minus.end()},
                      {plus.begin(), plus.end()},
                      std::move(bedges),
                      VectorField(g, std::move(n)),
                      std::move(in_tangent)};
}

}  // namespace hodgegraph
