#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hodgegraph/error.hpp"

namespace hodgegraph {

/// External vertex label. Labels are positive; dense indices follow sorted label order.
using Vertex = int;

/// Undirected edge stored with lo < hi.
struct Edge {
  Vertex lo = 0;
  Vertex hi = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Vertex of the tangent graph: the edge {base, tip} traversed from base to tip.
struct DirectedEdge {
  Vertex base = 0;
  Vertex tip = 0;

  DirectedEdge reversed() const { return {tip, base}; }
  auto operator<=>(const DirectedEdge&) const = default;
};

std::string to_string(const DirectedEdge& u);

/// Tangent graph of a simple graph.
///
/// Vertices are the 2|E| directed edges in lexicographic (base, tip) order. Two
/// directed edges u, v are adjacent when tip(u) = base(v) or tip(v) = base(u).
/// The position of a directed edge in this order is the coordinate used by every
/// vector field and operator matrix.
class TangentGraph {
 public:
  TangentGraph() = default;

  std::size_t size() const { return directed_.size(); }
  std::span<const DirectedEdge> directed_edges() const { return directed_; }
  const DirectedEdge& operator[](std::size_t pos) const { return directed_[pos]; }

  /// Edges of the tangent graph as position pairs (p < q), sorted.
  std::span<const std::pair<std::size_t, std::size_t>> adjacency() const { return adjacency_; }
  bool adjacent(std::size_t p, std::size_t q) const;

  std::optional<std::size_t> find(const DirectedEdge& u) const;
  /// Throws Errc::UnknownDirectedEdge.
  std::size_t index(const DirectedEdge& u) const;

  /// sigma: the reversal involution.
  DirectedEdge reverse(const DirectedEdge& u) const;
  std::size_t reverse_index(std::size_t pos) const { return sigma_[pos]; }

  /// Dense vertex index of pi(u) and pi_plus(u).
  std::size_t base_index(std::size_t pos) const { return base_[pos]; }
  std::size_t tip_index(std::size_t pos) const { return tip_[pos]; }

 private:
  friend class Graph;

  std::vector<DirectedEdge> directed_;
  std::vector<std::size_t> sigma_;
  std::vector<std::size_t> base_;
  std::vector<std::size_t> tip_;
  std::vector<std::pair<std::size_t, std::size_t>> adjacency_;
  std::map<DirectedEdge, std::size_t> lookup_;
};

namespace detail {
struct GraphData;
}

/// Finite simple graph with canonical vertex and edge order.
///
/// Graph is a cheap handle onto immutable shared data. Copies share the data and
/// the per-graph operator cache. Disconnected graphs can be built, but every
/// analysis entry point calls require_connected().
class Graph {
 public:
  /// Validates and canonicalizes. Throws InvalidVertex, SelfLoop, DuplicateEdge, UnknownVertex.
  static Graph build(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges);

  std::span<const Vertex> vertices() const;
  std::span<const Edge> edges() const;
  std::size_t vertex_count() const;
  std::size_t edge_count() const;

  std::optional<std::size_t> find_vertex(Vertex v) const;
  /// Throws Errc::UnknownVertex.
  std::size_t vertex_index(Vertex v) const;
  Vertex label(std::size_t index) const;

  bool has_edge(Vertex a, Vertex b) const;
  /// Dense neighbor indices of the vertex at `index`, ascending.
  std::span<const std::size_t> neighbors(std::size_t index) const;

  bool connected() const;
  /// Throws Errc::Disconnected.
  void require_connected() const;

  const TangentGraph& tangent() const;

  /// Same vertex labels and edges.
  bool same_as(const Graph& other) const;
  bool shares_data(const Graph& other) const { return data_ == other.data_; }

  /// Per-graph memoization of derived immutable values (operator matrices, cycle sets).
  /// `make` runs outside the lock; a concurrent duplicate computation is discarded.
  template <class T, class Make>
  std::shared_ptr<const T> memo(const std::string& key, Make&& make) const {
    if (auto hit = cache_lookup(key)) return std::static_pointer_cast<const T>(hit);
    std::shared_ptr<const T> fresh = std::make_shared<const T>(make());
    return std::static_pointer_cast<const T>(cache_insert(key, fresh));
  }

 private:
  explicit Graph(std::shared_ptr<const detail::GraphData> data) : data_(std::move(data)) {}

  std::shared_ptr<const void> cache_lookup(const std::string& key) const;
  std::shared_ptr<const void> cache_insert(const std::string& key, std::shared_ptr<const void> value) const;

  std::shared_ptr<const detail::GraphData> data_;
};

/// tangent graph accessor matching the free-function style of the other modules.
const TangentGraph& tangent_graph(const Graph& g);

/// sigma(u). Throws Errc::UnknownDirectedEdge when u is not a vertex of tg.
DirectedEdge reverse_edge(const TangentGraph& tg, const DirectedEdge& u);

}  // namespace hodgegraph
