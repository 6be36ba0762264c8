#include "hodgegraph/theorems.hpp"

#include <algorithm>
#include <cmath>

#include "hodgegraph/operators.hpp"

namespace hodgegraph {

namespace {

using Eigen::Index;
using Eigen::VectorXd;

Index ix(std::size_t i) { return static_cast<Index>(i); }

// sum_u n_H(u) Y(u), i.e. sum over boundary vertices of n_H . Y
double normal_flux(const BoundarySpec& b, const VectorField& y) { return inner_product(b.normal, y); }

// Divergence of the restriction of Y to the boundary graph, summed over V-.
double boundary_divergence_over_minus(const Graph& g, const BoundarySpec& b, const VectorField& y) {
  const TangentGraph& tg = g.tangent();
  std::vector<bool> minus(g.vertex_count(), false);
  for (Vertex v : b.v_minus) minus[g.vertex_index(v)] = true;
  double total = 0.0;
  for (std::size_t p = 0; p < tg.size(); ++p) {
    if (!b.in_tangent[p] || !minus[tg.base_index(p)]) continue;
    total += y.at(tg.reverse_index(p)) - y.at(p);
  }
  return total;
}

double sum_over(const ScalarField& f, const SubgraphSpec& h) {
  double total = 0.0;
  for (Vertex v : h.vertices) total += f(v);
  return total;
}

// X-bar scaled by phi at the base point.
VectorField scaled_reverse(const ScalarField& phi, const VectorField& x) {
  return pointwise_scale(phi, reverse_field(x));
}

}  // namespace

IdentityReport make_identity_report(std::string identity, std::vector<NamedValue> sides,
                                    std::vector<NamedValue> terms, double tolerance) {
  IdentityReport r{std::move(identity), std::move(sides), std::move(terms), 0.0, tolerance, false};
  for (const NamedValue& s : r.sides) r.residual = std::max(r.residual, std::abs(s.value - r.sides.front().value));
  r.pass = std::isfinite(r.residual) && r.residual <= tolerance;
  return r;
}

double average_over(const ScalarField& phi, const SubgraphSpec& h) {
  if (h.vertices.empty()) return 0.0;
  return sum_over(phi, h) / static_cast<double>(h.vertices.size());
}

IdentityReport divergence_theorem_sides(const SubgraphSpec& h, const VectorField& x, double tolerance) {
  const Graph& g = x.graph();
  g.require_connected();
  const SubgraphSpec sub = h.validated(g);
  const BoundarySpec b = boundary(g, sub);
  return make_identity_report("divergence_theorem",
                              {{"sum_div_over_H", sum_over(divergence(x), sub)},
                               {"boundary_normal_flux", normal_flux(b, x)},
                               {"boundary_divergence_over_v_minus", boundary_divergence_over_minus(g, b, x)}},
                              {}, tolerance);
}

IdentityReport greens_theorem_sides(const SubgraphSpec& h, const ScalarField& phi, double tolerance) {
  const Graph& g = phi.graph();
  g.require_connected();
  const SubgraphSpec sub = h.validated(g);
  const BoundarySpec b = boundary(g, sub);
  const VectorField dphi = gradient(phi);

  // Laplacian of the boundary graph: -2 sum of d phi over boundary directed edges at j.
  const TangentGraph& tg = g.tangent();
  std::vector<bool> minus(g.vertex_count(), false);
  for (Vertex v : b.v_minus) minus[g.vertex_index(v)] = true;
  double boundary_laplacian = 0.0;
  for (std::size_t p = 0; p < tg.size(); ++p) {
    if (b.in_tangent[p] && minus[tg.base_index(p)]) boundary_laplacian -= 2.0 * dphi.at(p);
  }

  return make_identity_report("greens_theorem",
                              {{"sum_laplacian_over_H", sum_over(laplacian_apply(phi), sub)},
                               {"boundary_normal_gradient", normal_flux(b, dphi)},
                               {"boundary_laplacian_over_v_minus", boundary_laplacian}},
                              {}, tolerance);
}

IdentityReport greens_identity_sides(const SubgraphSpec& h, const ScalarField& phi, const ScalarField& psi,
                                     GreensIdentity which, std::optional<Vertex> pole, double tolerance) {
  const Graph& g = phi.graph();
  g.require_connected();
  const SubgraphSpec sub = h.validated(g);
  const BoundarySpec b = boundary(g, sub);
  const TangentGraph& tg = g.tangent();

  // psi(j) n_H . grad phi(j) summed over the boundary = sum_u n_H(u) psi(base u) d phi(u).
  auto mixed_flux = [&](const ScalarField& weight, const ScalarField& f) {
    return normal_flux(b, pointwise_scale(weight, gradient(f)));
  };

  switch (which) {
    case GreensIdentity::First: {
      require_same_graph(phi.graph(), psi.graph());
      const VectorField dphi = gradient(phi);
      const VectorField dpsi = gradient(psi);
      const ScalarField lap = laplacian_apply(phi);
      // grad psi . grad phi (j) = sum over base(u) = j of d psi(u) d phi(u)
      VectorXd dot = VectorXd::Zero(ix(g.vertex_count()));
      for (std::size_t p = 0; p < tg.size(); ++p) dot[ix(tg.base_index(p))] += dpsi.at(p) * dphi.at(p);
      double left = 0.0;
      for (Vertex v : sub.vertices) {
        const std::size_t j = g.vertex_index(v);
        left += psi.at(j) * lap.at(j) - dot[ix(j)];
      }
      return make_identity_report("greens_first_identity",
                                  {{"interior", left}, {"boundary", mixed_flux(psi, phi)}}, {}, tolerance);
    }
    case GreensIdentity::Second: {
      require_same_graph(phi.graph(), psi.graph());
      const ScalarField lap_phi = laplacian_apply(phi);
      const ScalarField lap_psi = laplacian_apply(psi);
      double left = 0.0;
      for (Vertex v : sub.vertices) left += psi(v) * lap_phi(v) - phi(v) * lap_psi(v);
      const double right = mixed_flux(psi, phi) - mixed_flux(phi, psi);
      return make_identity_report("greens_second_identity", {{"interior", left}, {"boundary", right}}, {},
                                  tolerance);
    }
    case GreensIdentity::Third: {
      if (!pole) throw Error(Errc::MissingPole, "the third identity needs a pole");
      const ScalarField green = greens_function(g, *pole);
      const ScalarField lap_phi = laplacian_apply(phi);
      double left = 0.0;
      for (Vertex v : sub.vertices) left += green(v) * lap_phi(v);
      const double indicator = sub.contains(*pole) ? 1.0 : 0.0;
      const double avg = average_over(phi, sub);
      const double point_term = phi(*pole) * indicator -
                                static_cast<double>(sub.vertices.size()) / static_cast<double>(g.vertex_count()) * avg;
      const double boundary_sum = mixed_flux(green, phi) - mixed_flux(phi, green);
      return make_identity_report("greens_third_identity",
                                  {{"interior", left}, {"point_plus_boundary", point_term + boundary_sum}},
                                  {{"point_term", point_term},
                                   {"boundary_sum", boundary_sum},
                                   {"average_over_H", avg},
                                   {"phi_at_pole", phi(*pole)}},
                                  tolerance);
    }
  }
  throw Error(Errc::MalformedInput, "unknown Green's identity");
}

IdentityReport first_order_boundary_sides(const SubgraphSpec& h, const VectorField& x, const ScalarField& phi,
                                          double tolerance) {
  require_same_graph(x.graph(), phi.graph());
  const Graph& g = x.graph();
  g.require_connected();
  const SubgraphSpec sub = h.validated(g);
  const BoundarySpec b = boundary(g, sub);

  const ScalarField xphi = first_order_apply(x, phi);
  const ScalarField divx = divergence(x);
  double interior = 0.0;
  for (Vertex v : sub.vertices) interior += phi(v) * divx(v);
  const VectorField phi_xbar = scaled_reverse(phi, x);
  const double flux = normal_flux(b, phi_xbar);
  const double bdiv = boundary_divergence_over_minus(g, b, phi_xbar);

  return make_identity_report("first_order_boundary",
                              {{"sum_first_order_over_H", sum_over(xphi, sub)},
                               {"interior_plus_normal_flux", interior + flux},
                               {"interior_plus_boundary_divergence", interior + bdiv}},
                              {{"interior_term", interior}, {"boundary_term", flux}}, tolerance);
}

}  // namespace hodgegraph
