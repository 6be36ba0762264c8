#include "hodgegraph/fields.hpp"

#include <cmath>

namespace hodgegraph {

namespace {

Eigen::Index to_index(std::size_t i) { return static_cast<Eigen::Index>(i); }

}  // namespace

ScalarField::ScalarField(Graph graph, Eigen::VectorXd values) : graph_(std::move(graph)), values_(std::move(values)) {
  if (size() != graph_.vertex_count()) {
    throw Error(Errc::DimensionMismatch, "scalar field has " + std::to_string(size()) + " values for " +
                                             std::to_string(graph_.vertex_count()) + " vertices");
  }
}

ScalarField ScalarField::zero(const Graph& g) { return {g, Eigen::VectorXd::Zero(to_index(g.vertex_count()))}; }

ScalarField ScalarField::constant(const Graph& g, double c) {
  return {g, Eigen::VectorXd::Constant(to_index(g.vertex_count()), c)};
}

ScalarField ScalarField::basis(const Graph& g, Vertex v) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(to_index(g.vertex_count()));
  values[to_index(g.vertex_index(v))] = 1.0;
  return {g, std::move(values)};
}

ScalarField ScalarField::indicator(const Graph& g, std::span<const Vertex> subset) {
  Eigen::VectorXd values = Eigen::VectorXd::Zero(to_index(g.vertex_count()));
  for (Vertex v : subset) values[to_index(g.vertex_index(v))] = 1.0;
  return {g, std::move(values)};
}

bool ScalarField::is_mean_zero() const {
  const double scale = values_.size() == 0 ? 0.0 : values_.cwiseAbs().maxCoeff();
  return std::abs(sum()) <= 1e-9 * (1.0 + scale);
}

ScalarField ScalarField::operator+(const ScalarField& o) const {
  require_same_graph(graph_, o.graph_);
  return {graph_, values_ + o.values_};
}

ScalarField ScalarField::operator-(const ScalarField& o) const {
  require_same_graph(graph_, o.graph_);
  return {graph_, values_ - o.values_};
}

ScalarField ScalarField::operator*(double s) const { return {graph_, values_ * s}; }

VectorField::VectorField(Graph graph, Eigen::VectorXd coefficients)
    : graph_(std::move(graph)), coefficients_(std::move(coefficients)) {
  if (size() != graph_.tangent().size()) {
    throw Error(Errc::DimensionMismatch, "vector field has " + std::to_string(size()) + " coefficients for " +
                                             std::to_string(graph_.tangent().size()) + " directed edges");
  }
}

VectorField VectorField::zero(const Graph& g) { return {g, Eigen::VectorXd::Zero(to_index(g.tangent().size()))}; }

VectorField VectorField::constant(const Graph& g, double c) {
  return {g, Eigen::VectorXd::Constant(to_index(g.tangent().size()), c)};
}

VectorField VectorField::basis(const Graph& g, const DirectedEdge& u) {
  Eigen::VectorXd c = Eigen::VectorXd::Zero(to_index(g.tangent().size()));
  c[to_index(g.tangent().index(u))] = 1.0;
  return {g, std::move(c)};
}

VectorField VectorField::operator+(const VectorField& o) const {
  require_same_graph(graph_, o.graph_);
  return {graph_, coefficients_ + o.coefficients_};
}

VectorField VectorField::operator-(const VectorField& o) const {
  require_same_graph(graph_, o.graph_);
  return {graph_, coefficients_ - o.coefficients_};
}

VectorField VectorField::operator*(double s) const { return {graph_, coefficients_ * s}; }

void require_same_graph(const Graph& a, const Graph& b) {
  if (!a.same_as(b)) throw Error(Errc::GraphMismatch, "fields live on different graphs");
}

double inner_product(const VectorField& x, const VectorField& y) {
  require_same_graph(x.graph(), y.graph());
  return x.coefficients().dot(y.coefficients());
}

double inner_product(const ScalarField& phi, const ScalarField& psi) {
  require_same_graph(phi.graph(), psi.graph());
  return phi.values().dot(psi.values());
}

VectorField reverse_field(const VectorField& x) {
  const TangentGraph& tg = x.tangent();
  Eigen::VectorXd out(x.coefficients().size());
  for (std::size_t p = 0; p < tg.size(); ++p) out[to_index(p)] = x.at(tg.reverse_index(p));
  return {x.graph(), std::move(out)};
}

ParityParts parity_parts(const VectorField& x) {
  const VectorField xbar = reverse_field(x);
  return {(x + xbar) * 0.5, (x - xbar) * 0.5};
}

VectorField pointwise_scale(const ScalarField& phi, const VectorField& x) {
  require_same_graph(phi.graph(), x.graph());
  const TangentGraph& tg = x.tangent();
  Eigen::VectorXd out(x.coefficients().size());
  for (std::size_t p = 0; p < tg.size(); ++p) out[to_index(p)] = phi.at(tg.base_index(p)) * x.at(p);
  return {x.graph(), std::move(out)};
}

Eigen::MatrixXd reversal_matrix(const Graph& g) {
  const TangentGraph& tg = g.tangent();
  const auto m = to_index(tg.size());
  Eigen::MatrixXd r = Eigen::MatrixXd::Zero(m, m);
  for (std::size_t p = 0; p < tg.size(); ++p) r(to_index(p), to_index(tg.reverse_index(p))) = 1.0;
  return r;
}

}  // namespace hodgegraph
