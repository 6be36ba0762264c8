#include "hodgegraph/graph.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace hodgegraph {

namespace detail {

struct GraphData {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::map<Vertex, std::size_t> index;
  std::vector<std::vector<std::size_t>> neighbors;
  bool connected = false;
  TangentGraph tangent;

  mutable std::mutex cache_mutex;
  mutable std::unordered_map<std::string, std::shared_ptr<const void>> cache;
};

}  // namespace detail

std::string to_string(const DirectedEdge& u) {
  return std::to_string(u.base) + "->" + std::to_string(u.tip);
}

bool TangentGraph::adjacent(std::size_t p, std::size_t q) const {
  if (p > q) std::swap(p, q);
  return std::binary_search(adjacency_.begin(), adjacency_.end(), std::pair{p, q});
}

std::optional<std::size_t> TangentGraph::find(const DirectedEdge& u) const {
  auto it = lookup_.find(u);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::size_t TangentGraph::index(const DirectedEdge& u) const {
  if (auto pos = find(u)) return *pos;
  throw Error(Errc::UnknownDirectedEdge, to_string(u));
}

DirectedEdge TangentGraph::reverse(const DirectedEdge& u) const {
  return directed_[sigma_[index(u)]];
}

namespace {

bool is_connected(std::size_t n, const std::vector<std::vector<std::size_t>>& nbrs) {
  if (n == 0) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    for (std::size_t w : nbrs[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

Graph Graph::build(std::vector<Vertex> vertices, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  auto data = std::make_shared<detail::GraphData>();

  std::sort(vertices.begin(), vertices.end());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] <= 0) {
      throw Error(Errc::InvalidVertex, "vertex labels must be positive, got " + std::to_string(vertices[i]));
    }
    if (i > 0 && vertices[i] == vertices[i - 1]) {
      throw Error(Errc::InvalidVertex, "duplicate vertex label " + std::to_string(vertices[i]));
    }
    data->index.emplace(vertices[i], i);
  }
  data->vertices = std::move(vertices);

  std::vector<Edge> canon;
  canon.reserve(edges.size());
  for (auto [a, b] : edges) {
    if (a == b) throw Error(Errc::SelfLoop, "self-loop at " + std::to_string(a));
    for (Vertex v : {a, b}) {
      if (!data->index.contains(v)) throw Error(Errc::UnknownVertex, "edge references " + std::to_string(v));
    }
    canon.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(canon.begin(), canon.end());
  if (auto dup = std::adjacent_find(canon.begin(), canon.end()); dup != canon.end()) {
    throw Error(Errc::DuplicateEdge, "{" + std::to_string(dup->lo) + "," + std::to_string(dup->hi) + "}");
  }
  data->edges = std::move(canon);

  const std::size_t n = data->vertices.size();
  data->neighbors.assign(n, {});
  for (const Edge& e : data->edges) {
    std::size_t a = data->index.at(e.lo);
    std::size_t b = data->index.at(e.hi);
    data->neighbors[a].push_back(b);
    data->neighbors[b].push_back(a);
  }
  for (auto& nb : data->neighbors) std::sort(nb.begin(), nb.end());
  data->connected = is_connected(n, data->neighbors);

  TangentGraph& tg = data->tangent;
  for (const Edge& e : data->edges) {
    tg.directed_.push_back({e.lo, e.hi});
    tg.directed_.push_back({e.hi, e.lo});
  }
  std::sort(tg.directed_.begin(), tg.directed_.end());
  const std::size_t m = tg.directed_.size();
  for (std::size_t p = 0; p < m; ++p) tg.lookup_.emplace(tg.directed_[p], p);
  tg.sigma_.resize(m);
  tg.base_.resize(m);
  tg.tip_.resize(m);
  for (std::size_t p = 0; p < m; ++p) {
    tg.sigma_[p] = tg.lookup_.at(tg.directed_[p].reversed());
    tg.base_[p] = data->index.at(tg.directed_[p].base);
    tg.tip_[p] = data->index.at(tg.directed_[p].tip);
  }
  // {u, v} is a tangent edge iff tip(u) = base(v) or tip(v) = base(u).
  std::vector<std::vector<std::size_t>> leaving(n);
  for (std::size_t p = 0; p < m; ++p) leaving[tg.base_[p]].push_back(p);
  for (std::size_t p = 0; p < m; ++p) {
    for (std::size_t q : leaving[tg.tip_[p]]) {
      if (p != q) tg.adjacency_.emplace_back(std::min(p, q), std::max(p, q));
    }
  }
  std::sort(tg.adjacency_.begin(), tg.adjacency_.end());
  tg.adjacency_.erase(std::unique(tg.adjacency_.begin(), tg.adjacency_.end()), tg.adjacency_.end());

  return Graph(std::move(data));
}

std::span<const Vertex> Graph::vertices() const { return data_->vertices; }
std::span<const Edge> Graph::edges() const { return data_->edges; }
std::size_t Graph::vertex_count() const { return data_->vertices.size(); }
std::size_t Graph::edge_count() const { return data_->edges.size(); }

std::optional<std::size_t> Graph::find_vertex(Vertex v) const {
  auto it = data_->index.find(v);
  if (it == data_->index.end()) return std::nullopt;
  return it->second;
}

std::size_t Graph::vertex_index(Vertex v) const {
  if (auto i = find_vertex(v)) return *i;
  throw Error(Errc::UnknownVertex, std::to_string(v));
}

Vertex Graph::label(std::size_t index) const { return data_->vertices.at(index); }

bool Graph::has_edge(Vertex a, Vertex b) const {
  Edge e{std::min(a, b), std::max(a, b)};
  return std::binary_search(data_->edges.begin(), data_->edges.end(), e);
}

std::span<const std::size_t> Graph::neighbors(std::size_t index) const { return data_->neighbors.at(index); }

bool Graph::connected() const { return data_->connected; }

void Graph::require_connected() const {
  if (!data_->connected) throw Error(Errc::Disconnected, "analysis requires a connected graph");
}

const TangentGraph& Graph::tangent() const { return data_->tangent; }

bool Graph::same_as(const Graph& other) const {
  return data_ == other.data_ || (data_->vertices == other.data_->vertices && data_->edges == other.data_->edges);
}

std::shared_ptr<const void> Graph::cache_lookup(const std::string& key) const {
  std::lock_guard lock(data_->cache_mutex);
  auto it = data_->cache.find(key);
  return it == data_->cache.end() ? nullptr : it->second;
}

std::shared_ptr<const void> Graph::cache_insert(const std::string& key, std::shared_ptr<const void> value) const {
  std::lock_guard lock(data_->cache_mutex);
  auto [it, inserted] = data_->cache.emplace(key, std::move(value));
  return it->second;
}

const TangentGraph& tangent_graph(const Graph& g) { return g.tangent(); }

DirectedEdge reverse_edge(const TangentGraph& tg, const DirectedEdge& u) { return tg.reverse(u); }

}  // namespace hodgegraph
