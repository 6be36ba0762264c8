#include "hodgegraph/maxwell.hpp"

#include <algorithm>
#include <cmath>

#include "hodgegraph/hodge.hpp"
#include "hodgegraph/operators.hpp"

namespace hodgegraph {

namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

void require_same_sources(const EMState& s, const Sources& src) {
  require_same_graph(s.E.graph(), s.B.graph());
  require_same_graph(s.E.graph(), src.J.graph());
  require_same_graph(s.E.graph(), src.rho.graph());
}

double sup(const VectorXd& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

}  // namespace

EMDerivative maxwell_rhs(const EMState& state, const Sources& sources, std::size_t cycle_limit) {
  require_same_sources(state, sources);
  return {curl(state.B, cycle_limit) * -1.0, curl(state.E, cycle_limit) - sources.J};
}

double electromagnetic_energy(const EMState& state) {
  return 0.5 * (state.E.coefficients().squaredNorm() + state.B.coefficients().squaredNorm());
}

MaxwellRun maxwell_integrate(const EMState& initial, const Sources& sources, double dt, std::size_t steps,
                             std::size_t record_every, std::size_t cycle_limit) {
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error(Errc::NonPositiveStep, "dt must be positive");
  require_same_sources(initial, sources);
  const Graph& g = initial.E.graph();
  g.require_connected();
  if (record_every == 0) record_every = 1;

  const MatrixXd c = curl_matrix(g, cycle_limit).matrix;
  const MatrixXd div = divergence_matrix(g).matrix;
  const VectorXd& j = sources.J.coefficients();
  const VectorXd& rho = sources.rho.values();

  VectorXd e = initial.E.coefficients();
  VectorXd b = initial.B.coefficients();
  double t = initial.t;

  MaxwellRun run;
  ConstraintReport& rep = run.report;
  const VectorXd gauss0 = div * e - rho;
  const VectorXd magnetic0 = div * b;
  rep.initial_gauss_residual = sup(gauss0);
  rep.initial_magnetic_residual = sup(magnetic0);
  if (rep.initial_gauss_residual > kConstraintTolerance) {
    rep.warnings.push_back("initial state violates div E = rho by " + std::to_string(rep.initial_gauss_residual));
  }
  if (rep.initial_magnetic_residual > kConstraintTolerance) {
    rep.warnings.push_back("initial state violates div B = 0 by " + std::to_string(rep.initial_magnetic_residual));
  }
  if (sup(div * j) > kConstraintTolerance) {
    rep.warnings.push_back("div J is nonzero; div B is not conserved");
  }
  rep.energy_tracked = sup(j) == 0.0;
  rep.initial_energy = electromagnetic_energy(initial);
  const double energy_scale = rep.initial_energy > 0.0 ? rep.initial_energy : 1.0;

  run.trajectory.push_back({VectorField(g, e), VectorField(g, b), t});
  for (std::size_t n = 1; n <= steps; ++n) {
    const VectorXd k1e = -(c * b);
    const VectorXd k1b = c * e - j;
    const VectorXd k2e = -(c * (b + 0.5 * dt * k1b));
    const VectorXd k2b = c * (e + 0.5 * dt * k1e) - j;
    const VectorXd k3e = -(c * (b + 0.5 * dt * k2b));
    const VectorXd k3b = c * (e + 0.5 * dt * k2e) - j;
    const VectorXd k4e = -(c * (b + dt * k3b));
    const VectorXd k4b = c * (e + dt * k3e) - j;
    e += dt / 6.0 * (k1e + 2.0 * k2e + 2.0 * k3e + k4e);
    b += dt / 6.0 * (k1b + 2.0 * k2b + 2.0 * k3b + k4b);
    t = initial.t + static_cast<double>(n) * dt;

    rep.gauss_drift = std::max(rep.gauss_drift, sup(div * e - rho - gauss0));
    rep.magnetic_drift = std::max(rep.magnetic_drift, sup(div * b - magnetic0));
    if (rep.energy_tracked) {
      const double w = 0.5 * (e.squaredNorm() + b.squaredNorm());
      rep.energy_drift = std::max(rep.energy_drift, std::abs(w - rep.initial_energy) / energy_scale);
    }
    if (n % record_every == 0 || n == steps) run.trajectory.push_back({VectorField(g, e), VectorField(g, b), t});
  }

  rep.within_tolerance = rep.gauss_drift <= kConstraintTolerance && rep.magnetic_drift <= kConstraintTolerance &&
                         (!rep.energy_tracked || rep.energy_drift <= kConstraintTolerance);
  return run;
}

}  // namespace hodgegraph
