#include "hodgegraph/cycles.hpp"

#include <algorithm>
#include <set>

namespace hodgegraph {

namespace {

using Eigen::Index;

Index ix(std::size_t i) { return static_cast<Index>(i); }

// Backtracking search for cycles whose smallest dense index is `start`. Only vertices
// above `start` are visited, and a cycle is kept only when its second vertex is smaller
// than its last, so each cycle appears in exactly one orientation.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, std::size_t limit) : g_(g), limit_(limit), on_path_(g.vertex_count(), false) {}

  std::vector<std::vector<std::size_t>> run() {
    for (std::size_t s = 0; s < g_.vertex_count(); ++s) {
      start_ = s;
      path_.assign(1, s);
      on_path_[s] = true;
      extend(s);
      on_path_[s] = false;
    }
    return std::move(found_);
  }

 private:
  void extend(std::size_t v) {
    for (std::size_t w : g_.neighbors(v)) {
      if (w == start_) {
        if (path_.size() >= 3 && path_[1] < path_.back()) record();
        continue;
      }
      if (w < start_ || on_path_[w]) continue;
      on_path_[w] = true;
      path_.push_back(w);
      extend(w);
      path_.pop_back();
      on_path_[w] = false;
    }
  }

  void record() {
    if (found_.size() >= limit_) {
      throw Error(Errc::CycleLimitExceeded, "more than " + std::to_string(limit_) + " simple cycles");
    }
    found_.push_back(path_);
  }

  const Graph& g_;
  std::size_t limit_;
  std::size_t start_ = 0;
  std::vector<std::size_t> path_;
  std::vector<bool> on_path_;
  std::vector<std::vector<std::size_t>> found_;
};

}  // namespace

Walk::Walk(Graph graph, std::vector<Vertex> vertices) : graph_(std::move(graph)), vertices_(std::move(vertices)) {
  if (vertices_.size() < 2) throw Error(Errc::InvalidWalk, "a walk needs at least one step");
  for (std::size_t n = 1; n < vertices_.size(); ++n) {
    if (!graph_.has_edge(vertices_[n - 1], vertices_[n])) {
      throw Error(Errc::InvalidWalk, "no edge between " + std::to_string(vertices_[n - 1]) + " and " +
                                         std::to_string(vertices_[n]));
    }
  }
}

bool Walk::is_trail() const {
  std::set<Edge> seen;
  for (std::size_t n = 1; n < vertices_.size(); ++n) {
    Edge e{std::min(vertices_[n - 1], vertices_[n]), std::max(vertices_[n - 1], vertices_[n])};
    if (!seen.insert(e).second) return false;
  }
  return true;
}

bool Walk::is_circuit() const { return vertices_.front() == vertices_.back() && is_trail(); }

bool Walk::is_simple_circuit() const {
  if (!is_circuit() || length() < 3) return false;
  std::set<Vertex> seen(vertices_.begin(), vertices_.end() - 1);
  return seen.size() == length();
}

Walk Walk::reversed() const { return Walk(graph_, {vertices_.rbegin(), vertices_.rend()}); }

double line_integral(const Walk& w, const VectorField& x) {
  require_same_graph(w.graph(), x.graph());
  const auto vs = w.vertices();
  double total = 0.0;
  for (std::size_t n = 1; n < vs.size(); ++n) total += x(vs[n - 1], vs[n]);
  return total;
}

VectorField trail_tangent_field(const Walk& w) {
  if (!w.is_trail()) throw Error(Errc::NotATrail, "walk repeats an edge");
  const Graph& g = w.graph();
  const auto vs = w.vertices();
  Eigen::VectorXd t = Eigen::VectorXd::Zero(ix(g.tangent().size()));
  for (std::size_t n = 1; n < vs.size(); ++n) t[ix(g.tangent().index({vs[n - 1], vs[n]}))] = 1.0;
  return {g, std::move(t)};
}

std::vector<Vertex> SimpleCycle::circuit(bool forward_orientation) const {
  std::vector<Vertex> out = forward_orientation ? forward : backward;
  out.push_back(out.front());
  return out;
}

SimpleCycle canonical_cycle(std::span<const Vertex> closed_circuit) {
  std::vector<Vertex> open(closed_circuit.begin(), closed_circuit.end());
  if (open.size() >= 2 && open.front() == open.back()) open.pop_back();
  if (open.size() < 3) throw Error(Errc::InvalidWalk, "a simple cycle has at least three vertices");
  auto min_it = std::min_element(open.begin(), open.end());
  std::rotate(open.begin(), min_it, open.end());
  std::vector<Vertex> other{open.front()};
  other.insert(other.end(), open.rbegin(), open.rend() - 1);
  if (open[1] > other[1]) std::swap(open, other);
  return {std::move(open), std::move(other)};
}

CycleSet simple_cycles(const Graph& g, std::size_t limit) {
  g.require_connected();
  auto cached = g.memo<CycleSet>("simple_cycles", [&] {
    // A throw here leaves the cache empty.
    std::vector<std::vector<std::size_t>> raw = CycleSearch(g, limit).run();
    CycleSet set;
    set.cycles.reserve(raw.size());
    for (const auto& path : raw) {
      std::vector<Vertex> labels;
      labels.reserve(path.size());
      for (std::size_t i : path) labels.push_back(g.label(i));
      set.cycles.push_back(canonical_cycle(labels));
    }
    std::sort(set.cycles.begin(), set.cycles.end(), [](const SimpleCycle& a, const SimpleCycle& b) {
      if (a.length() != b.length()) return a.length() < b.length();
      return a.forward < b.forward;
    });
    return set;
  });
  if (cached->size() > limit) {
    throw Error(Errc::CycleLimitExceeded, "more than " + std::to_string(limit) + " simple cycles");
  }
  return *cached;
}

Eigen::RowVectorXd circulation_row(const Graph& g, std::span<const Vertex> closed_circuit) {
  const TangentGraph& tg = g.tangent();
  Eigen::RowVectorXd row = Eigen::RowVectorXd::Zero(ix(tg.size()));
  for (std::size_t n = 1; n < closed_circuit.size(); ++n) {
    row[ix(tg.index({closed_circuit[n - 1], closed_circuit[n]}))] += 1.0;
  }
  return row;
}

CirculationSystem circulation_system(const Graph& g, std::size_t limit) {
  const CycleSet cycles = simple_cycles(g, limit);
  CirculationSystem sys;
  sys.matrix = Eigen::MatrixXd::Zero(ix(2 * cycles.size()), ix(g.tangent().size()));
  Index r = 0;
  for (const SimpleCycle& c : cycles.cycles) {
    for (bool orientation : {true, false}) {
      std::vector<Vertex> circuit = c.circuit(orientation);
      sys.matrix.row(r++) = circulation_row(g, circuit);
      sys.circuits.push_back(std::move(circuit));
    }
  }
  return sys;
}

}  // namespace hodgegraph
