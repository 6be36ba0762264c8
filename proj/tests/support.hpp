#pragma once

// Shared fixtures and test-side oracles. The oracles avoid the library's numerics:
// cycles by brute force over vertex orderings, ranks by exact elimination mod primes.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <set>
#include <vector>

#include <Eigen/Dense>

#include "hodgegraph/hodgegraph.hpp"

namespace testing_support {

using hodgegraph::Graph;
using hodgegraph::Vertex;

inline Graph p2() { return Graph::build({1, 2}, {{1, 2}}); }
inline Graph k3() { return Graph::build({1, 2, 3}, {{1, 2}, {2, 3}, {1, 3}}); }
inline Graph fig1() { return Graph::build({1, 2, 3, 4}, {{1, 2}, {2, 3}, {1, 3}, {1, 4}}); }
inline Graph diag_rect() { return Graph::build({1, 2, 3, 4}, {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {1, 3}}); }

inline Graph cycle_graph(int n) {
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i) {
    v.push_back(i);
    e.push_back({i, i % n + 1});
  }
  return Graph::build(v, e);
}

inline Graph path_graph(int n) {
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i) {
    v.push_back(i);
    if (i > 1) e.push_back({i - 1, i});
  }
  return Graph::build(v, e);
}

inline Graph star_graph(int n) {
  std::vector<Vertex> v{1};
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 2; i <= n; ++i) {
    v.push_back(i);
    e.push_back({1, i});
  }
  return Graph::build(v, e);
}

inline Graph complete_graph(int n) {
  std::vector<Vertex> v;
  std::vector<std::pair<Vertex, Vertex>> e;
  for (int i = 1; i <= n; ++i) {
    v.push_back(i);
    for (int j = i + 1; j <= n; ++j) e.push_back({i, j});
  }
  return Graph::build(v, e);
}

/// Theta graph: two vertices joined by three internally disjoint paths.
inline Graph theta_graph() {
  return Graph::build({1, 2, 3, 4, 5}, {{1, 2}, {2, 5}, {1, 3}, {3, 5}, {1, 4}, {4, 5}});
}

/// Non-contiguous labels, one pendant vertex and a 4-cycle.
inline Graph labelled_graph() {
  return Graph::build({3, 7, 10, 12, 20}, {{3, 7}, {7, 10}, {10, 12}, {12, 3}, {12, 20}});
}

inline std::vector<Graph> test_graphs() {
  return {p2(),          k3(),          fig1(),        diag_rect(),      cycle_graph(4), cycle_graph(6),
          path_graph(5), star_graph(5), theta_graph(), complete_graph(4), complete_graph(5), labelled_graph()};
}

/// Example field from the rectangle-with-diagonal discussion: 1 on 12 and 23, -1 on 34 and 41,
/// -2 on 31, negated on the reversals.
inline hodgegraph::VectorField rectangle_field(const Graph& g) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(10);
  const auto& tg = g.tangent();
  auto set = [&](Vertex a, Vertex b, double v) {
    c[static_cast<Eigen::Index>(tg.index({a, b}))] = v;
    c[static_cast<Eigen::Index>(tg.index({b, a}))] = -v;
  };
  set(1, 2, 1);
  set(2, 3, 1);
  set(3, 4, -1);
  set(4, 1, -1);
  set(3, 1, -2);
  return {g, c};
}

// ---------------------------------------------------------------------------
// Brute-force simple cycles: every vertex subset of size >= 3 and every cyclic
// ordering starting at its minimum, kept when consecutive vertices are adjacent
// and the second vertex is below the last.

inline std::vector<std::vector<Vertex>> brute_force_cycles(const Graph& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  std::set<std::pair<std::size_t, std::vector<Vertex>>> found;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<Vertex> subset;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) subset.push_back(verts[i]);
    }
    if (subset.size() < 3) continue;
    std::vector<Vertex> rest(subset.begin() + 1, subset.end());
    do {
      if (rest.front() > rest.back()) continue;
      std::vector<Vertex> cyc{subset.front()};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      bool ok = true;
      for (std::size_t k = 0; k < cyc.size() && ok; ++k) ok = g.has_edge(cyc[k], cyc[(k + 1) % cyc.size()]);
      if (ok) found.insert({cyc.size(), cyc});
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  std::vector<std::vector<Vertex>> out;
  for (const auto& [len, c] : found) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------------------
// Exact rank of an integer matrix: Gaussian elimination modulo two large primes.
// Rank over Q is at least the rank mod p and equals it unless p divides every
// maximal nonzero minor, so the larger of the two is the rational rank in practice.

inline std::size_t rank_mod(const Eigen::MatrixXd& m, std::int64_t p) {
  const auto rows = static_cast<std::size_t>(m.rows());
  const auto cols = static_cast<std::size_t>(m.cols());
  std::vector<std::vector<std::int64_t>> a(rows, std::vector<std::int64_t>(cols));
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = static_cast<std::int64_t>(std::llround(m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c))));
      a[r][c] = ((v % p) + p) % p;
    }
  }
  auto power = [p](std::int64_t b, std::int64_t e) {
    std::int64_t res = 1;
    b %= p;
    while (e > 0) {
      if (e & 1) res = static_cast<std::int64_t>((__int128)res * b % p);
      b = static_cast<std::int64_t>((__int128)b * b % p);
      e >>= 1;
    }
    return res;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = power(a[rank][c], p - 2);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const std::int64_t f = static_cast<std::int64_t>((__int128)a[r][c] * inv % p);
      for (std::size_t k = c; k < cols; ++k) {
        a[r][k] = static_cast<std::int64_t>(((__int128)a[r][k] - (__int128)f * a[rank][k] % p + p) % p);
      }
    }
    ++rank;
  }
  return rank;
}

inline std::size_t exact_rank(const Eigen::MatrixXd& m) {
  if (m.size() == 0) return 0;
  return std::max(rank_mod(m, 2147483647), rank_mod(m, 1000000007));
}

/// Circulation matrix rebuilt from the brute-force cycles, row per oriented circuit.
inline Eigen::MatrixXd oracle_circulation_matrix(const Graph& g) {
  const auto cycles = brute_force_cycles(g);
  const auto& tg = g.tangent();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(2 * cycles.size()),
                                            static_cast<Eigen::Index>(tg.size()));
  Eigen::Index r = 0;
  for (const auto& c : cycles) {
    for (int orient = 0; orient < 2; ++orient) {
      const std::size_t len = c.size();
      for (std::size_t k = 0; k < len; ++k) {
        Vertex a = c[k];
        Vertex b = c[(k + 1) % len];
        if (orient == 1) std::swap(a, b);
        m(r, static_cast<Eigen::Index>(tg.index({a, b}))) = 1.0;
      }
      ++r;
    }
  }
  return m;
}

/// Divergence matrix built entrywise from the definition.
inline Eigen::MatrixXd oracle_divergence_matrix(const Graph& g) {
  const auto& tg = g.tangent();
  Eigen::MatrixXd d = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(g.vertex_count()),
                                            static_cast<Eigen::Index>(tg.size()));
  for (std::size_t p = 0; p < tg.size(); ++p) {
    const auto u = tg[p];
    const auto i = static_cast<Eigen::Index>(g.vertex_index(u.base));
    d(i, static_cast<Eigen::Index>(tg.index({u.tip, u.base}))) += 1.0;
    d(i, static_cast<Eigen::Index>(p)) -= 1.0;
  }
  return d;
}

/// Unsigned cycle/edge incidence (rows = simple cycles, columns = undirected edges).
inline Eigen::MatrixXd oracle_cycle_edge_incidence(const Graph& g) {
  const auto cycles = brute_force_cycles(g);
  const auto edges = g.edges();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(static_cast<Eigen::Index>(cycles.size()),
                                            static_cast<Eigen::Index>(edges.size()));
  for (std::size_t r = 0; r < cycles.size(); ++r) {
    const auto& c = cycles[r];
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Vertex a = std::min(c[k], c[(k + 1) % c.size()]);
      const Vertex b = std::max(c[k], c[(k + 1) % c.size()]);
      const auto it = std::find(edges.begin(), edges.end(), hodgegraph::Edge{a, b});
      m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(it - edges.begin())) = 1.0;
    }
  }
  return m;
}

struct OracleDimensions {
  std::size_t circulation_free;
  std::size_t curl;
  std::size_t harmonic;
};

/// Exact dimensions of Z, im curl = Z^perp and H from integer matrices.
inline OracleDimensions oracle_dimensions(const Graph& g) {
  const Eigen::MatrixXd c = oracle_circulation_matrix(g);
  const Eigen::MatrixXd d = oracle_divergence_matrix(g);
  Eigen::MatrixXd stacked(d.rows() + c.rows(), d.cols());
  stacked << d, c;
  const std::size_t n = static_cast<std::size_t>(c.cols());
  const std::size_t z = n - exact_rank(c);
  return {z, n - z, n - exact_rank(stacked)};
}

/// All connected graphs on labels 1..n (every edge subset of K_n that connects).
inline std::vector<Graph> all_connected_graphs(int n) {
  std::vector<std::pair<Vertex, Vertex>> all;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) all.push_back({i, j});
  }
  std::vector<Vertex> verts;
  for (int i = 1; i <= n; ++i) verts.push_back(i);
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << all.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (static_cast<int>(__builtin_popcountll(mask)) < n - 1) continue;
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t k = 0; k < all.size(); ++k) {
      if (mask & (std::uint64_t{1} << k)) edges.push_back(all[k]);
    }
    Graph g = Graph::build(verts, edges);
    if (g.connected()) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace testing_support
