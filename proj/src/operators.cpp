#include "hodgegraph/operators.hpp"

#include "hodgegraph/numerics.hpp"

namespace hodgegraph {

namespace {

using Eigen::Index;
using Eigen::MatrixXd;
using Eigen::VectorXd;

Index ix(std::size_t i) { return static_cast<Index>(i); }

std::shared_ptr<const MatrixXd> cached_gradient(const Graph& g) {
  g.require_connected();
  return g.memo<MatrixXd>("gradient", [&] {
    const TangentGraph& tg = g.tangent();
    MatrixXd d = MatrixXd::Zero(ix(tg.size()), ix(g.vertex_count()));
    for (std::size_t p = 0; p < tg.size(); ++p) {
      d(ix(p), ix(tg.tip_index(p))) += 1.0;
      d(ix(p), ix(tg.base_index(p))) -= 1.0;
    }
    return d;
  });
}

std::shared_ptr<const MatrixXd> cached_laplacian(const Graph& g) {
  auto grad = cached_gradient(g);
  return g.memo<MatrixXd>("laplacian", [&] { return MatrixXd(grad->transpose() * *grad); });
}

VectorXd solve_mean_zero(const Graph& g, const VectorXd& rhs) {
  const auto lap = cached_laplacian(g);
  const MatrixXd ones = MatrixXd::Ones(ix(g.vertex_count()), 1);
  return numerics::deflated_solve(*lap, rhs, ones);
}

std::shared_ptr<const MatrixXd> cached_greens(const Graph& g) {
  g.require_connected();
  return g.memo<MatrixXd>("greens", [&] {
    const Index n = ix(g.vertex_count());
    MatrixXd out(n, n);
    for (Index j = 0; j < n; ++j) {
      VectorXd rhs = VectorXd::Constant(n, -1.0 / static_cast<double>(n));
      rhs[j] += 1.0;
      out.col(j) = solve_mean_zero(g, rhs);
    }
    return out;
  });
}

}  // namespace

std::string_view to_string(OperatorRole role) {
  switch (role) {
    case OperatorRole::Gradient: return "gradient";
    case OperatorRole::Divergence: return "divergence";
    case OperatorRole::Laplacian: return "laplacian";
    case OperatorRole::FirstOrder: return "first-order";
    case OperatorRole::Adjoint: return "adjoint";
    case OperatorRole::Projector: return "projector";
    case OperatorRole::Curl: return "curl";
    case OperatorRole::Greens: return "greens";
  }
  return "unknown";
}

OperatorMatrix gradient_matrix(const Graph& g) { return {OperatorRole::Gradient, *cached_gradient(g)}; }

OperatorMatrix divergence_matrix(const Graph& g) {
  return {OperatorRole::Divergence, cached_gradient(g)->transpose()};
}

OperatorMatrix laplacian_matrix(const Graph& g) { return {OperatorRole::Laplacian, *cached_laplacian(g)}; }

OperatorMatrix first_order_matrix(const VectorField& x) {
  const Graph& g = x.graph();
  g.require_connected();
  const TangentGraph& tg = g.tangent();
  const Index n = ix(g.vertex_count());
  MatrixXd m = MatrixXd::Zero(n, n);
  for (std::size_t p = 0; p < tg.size(); ++p) {
    const Index i = ix(tg.base_index(p));
    m(i, ix(tg.tip_index(p))) += x.at(p);
    m(i, i) -= x.at(p);
  }
  return {OperatorRole::FirstOrder, std::move(m)};
}

OperatorMatrix adjoint_matrix(const VectorField& x) {
  MatrixXd m = first_order_matrix(reverse_field(x)).matrix;
  m.diagonal() += divergence(x).values();
  return {OperatorRole::Adjoint, std::move(m)};
}

OperatorMatrix helmholtz_projector(const Graph& g) {
  auto grad = cached_gradient(g);
  auto greens = cached_greens(g);
  // Laplacian^{-1} on mean-zero functions is the Green's matrix; div maps into mean-zero functions.
  return {OperatorRole::Projector, *grad * *greens * grad->transpose()};
}

OperatorMatrix greens_matrix(const Graph& g) { return {OperatorRole::Greens, *cached_greens(g)}; }

VectorField gradient(const ScalarField& phi) {
  const Graph& g = phi.graph();
  g.require_connected();
  const TangentGraph& tg = g.tangent();
  VectorXd out(ix(tg.size()));
  for (std::size_t p = 0; p < tg.size(); ++p) out[ix(p)] = phi.at(tg.tip_index(p)) - phi.at(tg.base_index(p));
  return {g, std::move(out)};
}

ScalarField divergence(const VectorField& x) {
  const Graph& g = x.graph();
  g.require_connected();
  const TangentGraph& tg = g.tangent();
  VectorXd out = VectorXd::Zero(ix(g.vertex_count()));
  for (std::size_t p = 0; p < tg.size(); ++p) out[ix(tg.base_index(p))] += x.at(tg.reverse_index(p)) - x.at(p);
  return {g, std::move(out)};
}

ScalarField laplacian_apply(const ScalarField& phi) {
  const Graph& g = phi.graph();
  const VectorField dphi = gradient(phi);
  const TangentGraph& tg = g.tangent();
  VectorXd out = VectorXd::Zero(ix(g.vertex_count()));
  for (std::size_t p = 0; p < tg.size(); ++p) out[ix(tg.base_index(p))] -= 2.0 * dphi.at(p);
  return {g, std::move(out)};
}

ScalarField first_order_apply(const VectorField& x, const ScalarField& phi) {
  require_same_graph(x.graph(), phi.graph());
  const Graph& g = x.graph();
  const VectorField dphi = gradient(phi);
  const TangentGraph& tg = g.tangent();
  VectorXd out = VectorXd::Zero(ix(g.vertex_count()));
  for (std::size_t p = 0; p < tg.size(); ++p) out[ix(tg.base_index(p))] += x.at(p) * dphi.at(p);
  return {g, std::move(out)};
}

ScalarField laplacian_solve(const ScalarField& phi) {
  const Graph& g = phi.graph();
  g.require_connected();
  if (!phi.is_mean_zero()) {
    throw Error(Errc::NotMeanZero, "sum of values is " + std::to_string(phi.sum()));
  }
  // The mean-zero check above is stricter than the solver's own rhs check.
  const VectorXd centered = phi.values().array() - phi.values().mean();
  return {g, solve_mean_zero(g, centered)};
}

ScalarField greens_function(const Graph& g, Vertex pole) {
  const std::size_t i = g.vertex_index(pole);
  return {g, cached_greens(g)->col(ix(i))};
}

HelmholtzSplit helmholtz_split(const VectorField& x) {
  const ScalarField div = divergence(x);
  const VectorField grad_part = gradient(laplacian_solve(div));
  return {grad_part, x - grad_part};
}

}  // namespace hodgegraph
