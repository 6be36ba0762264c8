#pragma once

#include <span>

#include <Eigen/Dense>

#include "hodgegraph/graph.hpp"

namespace hodgegraph {

/// Real function on the vertices, stored in canonical vertex order.
class ScalarField {
 public:
  /// Throws Errc::DimensionMismatch when values.size() != |V|.
  ScalarField(Graph graph, Eigen::VectorXd values);

  static ScalarField zero(const Graph& g);
  static ScalarField constant(const Graph& g, double c);
  /// e_v
  static ScalarField basis(const Graph& g, Vertex v);
  /// 1_H for a vertex subset.
  static ScalarField indicator(const Graph& g, std::span<const Vertex> subset);

  const Graph& graph() const { return graph_; }
  const Eigen::VectorXd& values() const { return values_; }
  std::size_t size() const { return static_cast<std::size_t>(values_.size()); }

  double operator()(Vertex v) const { return values_[static_cast<Eigen::Index>(graph_.vertex_index(v))]; }
  double at(std::size_t index) const { return values_[static_cast<Eigen::Index>(index)]; }

  double sum() const { return values_.sum(); }
  /// |sum| <= 1e-9 (1 + max|phi|).
  bool is_mean_zero() const;

  ScalarField operator+(const ScalarField& o) const;
  ScalarField operator-(const ScalarField& o) const;
  ScalarField operator*(double s) const;

 private:
  Graph graph_;
  Eigen::VectorXd values_;
};

/// Coefficients X(u) over the directed edges, in canonical tangent-graph order.
class VectorField {
 public:
  /// Throws Errc::DimensionMismatch when coefficients.size() != 2|E|.
  VectorField(Graph graph, Eigen::VectorXd coefficients);

  static VectorField zero(const Graph& g);
  static VectorField constant(const Graph& g, double c);
  /// e_u
  static VectorField basis(const Graph& g, const DirectedEdge& u);

  const Graph& graph() const { return graph_; }
  const TangentGraph& tangent() const { return graph_.tangent(); }
  const Eigen::VectorXd& coefficients() const { return coefficients_; }
  std::size_t size() const { return static_cast<std::size_t>(coefficients_.size()); }

  double operator()(const DirectedEdge& u) const {
    return coefficients_[static_cast<Eigen::Index>(tangent().index(u))];
  }
  double operator()(Vertex base, Vertex tip) const { return (*this)(DirectedEdge{base, tip}); }
  double at(std::size_t pos) const { return coefficients_[static_cast<Eigen::Index>(pos)]; }

  double norm() const { return coefficients_.norm(); }

  VectorField operator+(const VectorField& o) const;
  VectorField operator-(const VectorField& o) const;
  VectorField operator*(double s) const;

 private:
  Graph graph_;
  Eigen::VectorXd coefficients_;
};

/// Throws Errc::GraphMismatch unless both refer to the same graph.
void require_same_graph(const Graph& a, const Graph& b);

double inner_product(const VectorField& x, const VectorField& y);
double inner_product(const ScalarField& phi, const ScalarField& psi);

/// X-bar(u) = X(sigma(u)).
VectorField reverse_field(const VectorField& x);

struct ParityParts {
  VectorField symmetric;
  VectorField antisymmetric;
};

/// s X = (X + X-bar)/2, a X = (X - X-bar)/2.
ParityParts parity_parts(const VectorField& x);

/// (phi X)(u) = phi(pi(u)) X(u).
VectorField pointwise_scale(const ScalarField& phi, const VectorField& x);

/// Permutation matrix of sigma on the directed-edge coordinates.
Eigen::MatrixXd reversal_matrix(const Graph& g);

}  // namespace hodgegraph
