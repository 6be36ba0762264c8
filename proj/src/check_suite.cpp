#include "hodgegraph/check_suite.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "hodgegraph/hodge.hpp"
#include "hodgegraph/numerics.hpp"
#include "hodgegraph/operators.hpp"
#include "hodgegraph/random.hpp"
#include "hodgegraph/theorems.hpp"

namespace hodgegraph {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

constexpr double kTheoremTolerance = 1e-12;
constexpr double kHodgeTolerance = 1e-10;

class Ledger {
 public:
  explicit Ledger(std::optional<double> override) : override_(override) {}

  void record(const std::string& identity, double residual, double tolerance) {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const CheckEntry& e) { return e.identity == identity; });
    if (it == entries_.end()) {
      entries_.push_back({identity, 0, 0.0, override_.value_or(tolerance), true});
      it = entries_.end() - 1;
    }
    ++it->trials;
    if (!std::isfinite(residual)) residual = INFINITY;
    it->max_residual = std::max(it->max_residual, residual);
    it->pass = it->pass && residual <= it->tolerance;
  }

  void record(const IdentityReport& r) { record(r.identity, r.residual, kTheoremTolerance); }

  std::vector<CheckEntry> take() { return std::move(entries_); }

 private:
  std::optional<double> override_;
  std::vector<CheckEntry> entries_;
};

void theorem_trial(Rng& rng, const Graph& g, Ledger& ledger) {
  const SubgraphSpec h = random_subgraph(rng, g);
  const VectorField x = random_field(rng, g);
  const ScalarField phi = random_scalar(rng, g);
  const ScalarField psi = random_scalar(rng, g);
  const Vertex pole = g.label(rng.index(g.vertex_count()));

  ledger.record(divergence_theorem_sides(h, x));
  ledger.record(greens_theorem_sides(h, phi));
  ledger.record(greens_identity_sides(h, phi, psi, GreensIdentity::First));
  ledger.record(greens_identity_sides(h, phi, psi, GreensIdentity::Second));
  ledger.record(greens_identity_sides(h, phi, psi, GreensIdentity::Third, pole));
  ledger.record(greens_identity_sides(SubgraphSpec::whole(g), phi, psi, GreensIdentity::Third, pole));
  ledger.record(first_order_boundary_sides(h, x, phi));

  // <grad phi, X> = <phi, div X> and <X phi, psi> = <phi, X* psi>
  ledger.record("gradient_divergence_adjoint", std::abs(inner_product(gradient(phi), x) - inner_product(phi, divergence(x))),
                kTheoremTolerance);
  const VectorXd lhs = first_order_matrix(x).matrix * phi.values();
  const VectorXd rhs = adjoint_matrix(x).matrix * psi.values();
  ledger.record("first_order_adjoint", std::abs(lhs.dot(psi.values()) - phi.values().dot(rhs)), kTheoremTolerance);
}

void greens_function_checks(const Graph& g, Ledger& ledger) {
  const double n = static_cast<double>(g.vertex_count());
  for (Vertex pole : g.vertices()) {
    const ScalarField green = greens_function(g, pole);
    VectorXd target = VectorXd::Constant(static_cast<Eigen::Index>(g.vertex_count()), -1.0 / n);
    target[static_cast<Eigen::Index>(g.vertex_index(pole))] += 1.0;
    ledger.record("greens_function_equation", numerics::max_abs(laplacian_apply(green).values() - target),
                  kTheoremTolerance);
    ledger.record("greens_function_mean_zero", std::abs(green.sum()), kTheoremTolerance);
  }
}

void hodge_graph_checks(const Graph& g, std::size_t limit, Ledger& ledger) {
  const MatrixXd c = curl_matrix(g, limit).matrix;
  const MatrixXd grad = gradient_matrix(g).matrix;
  ledger.record("curl_idempotent", numerics::max_abs(c * c - c), kHodgeTolerance);
  ledger.record("curl_self_adjoint", numerics::max_abs(c - c.transpose()), kHodgeTolerance);

  const ExactSequenceReport ex = exact_sequence_report(g, kHodgeTolerance, limit);
  ledger.record("curl_gradient_zero", ex.curl_gradient, kHodgeTolerance);
  ledger.record("divergence_curl_zero", ex.divergence_curl, kHodgeTolerance);
  ledger.record("symmetrize_gradient_zero", ex.symmetrize_gradient, kHodgeTolerance);
  ledger.record("divergence_symmetric_zero", ex.divergence_symmetric, kHodgeTolerance);
  const double homology = std::max(std::abs(static_cast<double>(ex.antisymmetric_homology) - ex.cyclomatic),
                                   std::abs(static_cast<double>(ex.divergence_homology) - ex.cyclomatic));
  ledger.record("homology_equals_cyclomatic", homology, 0.0);
  ledger.record("circulation_free_parity_split", ex.circulation_free_split, kHodgeTolerance);
  ledger.record("harmonic_parity_split", std::max(ex.harmonic_split, ex.harmonic_parity_residual), kHodgeTolerance);

  const DimensionReport dims = dimension_report(g, limit);
  const double grad_gap = std::abs(static_cast<double>(dims.computed.gradient) - dims.formula.gradient);
  const double curl_gap = std::abs(static_cast<double>(dims.computed.curl) - dims.formula.curl);
  const double harm_gap = std::abs(static_cast<double>(dims.computed.harmonic) - dims.formula.harmonic);
  ledger.record("dimension_gradient_formula", grad_gap, 0.0);
  ledger.record("dimension_curl_formula", curl_gap, 0.0);
  ledger.record("dimension_harmonic_formula", harm_gap, 0.0);
  const double total = static_cast<double>(dims.computed.gradient + dims.computed.curl + dims.computed.harmonic);
  ledger.record("dimension_sum", std::abs(total - 2.0 * static_cast<double>(g.edge_count())), 0.0);

  const AbstractHodge ah = abstract_hodge(grad, c);
  const MatrixXd ph = harmonic_basis(g, limit).projector();
  const double lemma = std::max({numerics::max_abs(ah.image_f - helmholtz_projector(g).matrix),
                                 numerics::max_abs(ah.image_g_adjoint - c), numerics::max_abs(ah.kernel - ph)});
  ledger.record("abstract_hodge_projectors", lemma, kHodgeTolerance);
}

void hodge_trial(Rng& rng, const Graph& g, const CirculationSystem& circ, std::size_t limit, Ledger& ledger) {
  const VectorField x = random_field(rng, g);
  const HodgeDecomposition d = hodge_decompose(x, limit);
  ledger.record("hodge_reconstruction", d.reconstruction_residual, kHodgeTolerance);
  ledger.record("hodge_orthogonality", d.orthogonality_residual, kHodgeTolerance);
  ledger.record("hodge_gradient_consistency", d.gradient_consistency_residual, kHodgeTolerance);
  ledger.record("harmonic_part_divergence_free", numerics::max_abs(divergence(d.harmonic_part).values()),
                kHodgeTolerance);

  const VectorXd diff = circ.matrix * (x.coefficients() - curl(x, limit).coefficients());
  ledger.record("circulation_preservation", diff.size() == 0 ? 0.0 : diff.cwiseAbs().maxCoeff(), kHodgeTolerance);

  const ScalarField phi = random_scalar(rng, g);
  ledger.record("curl_of_gradient", curl(gradient(phi), limit).coefficients().cwiseAbs().maxCoeff(), kHodgeTolerance);
}

}  // namespace

CheckSuite parse_check_suite(std::string_view name) {
  if (name == "theorems") return CheckSuite::Theorems;
  if (name == "hodge") return CheckSuite::Hodge;
  if (name == "all") return CheckSuite::All;
  throw Error(Errc::MalformedInput, "unknown suite " + std::string(name));
}

std::string_view to_string(CheckSuite suite) {
  switch (suite) {
    case CheckSuite::Theorems: return "theorems";
    case CheckSuite::Hodge: return "hodge";
    case CheckSuite::All: return "all";
  }
  return "unknown";
}

CheckResult run_checks(const Graph& g, const CheckOptions& options) {
  g.require_connected();
  Ledger ledger(options.tolerance);
  Rng rng(options.seed);
  const bool theorems = options.suite != CheckSuite::Hodge;
  const bool hodge = options.suite != CheckSuite::Theorems;

  if (theorems) {
    greens_function_checks(g, ledger);
    for (std::size_t t = 0; t < options.trials; ++t) theorem_trial(rng, g, ledger);
  }
  if (hodge) {
    hodge_graph_checks(g, options.cycle_limit, ledger);
    const CirculationSystem circ = circulation_system(g, options.cycle_limit);
    for (std::size_t t = 0; t < options.trials; ++t) hodge_trial(rng, g, circ, options.cycle_limit, ledger);
  }

  CheckResult result{options.suite, options.seed, options.trials, ledger.take(), true};
  for (const CheckEntry& e : result.entries) result.pass = result.pass && e.pass;
  return result;
}

}  // namespace hodgegraph
