#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hodgegraph/cycles.hpp"
#include "hodgegraph/fields.hpp"

namespace hodgegraph {

struct EMState {
  VectorField E;
  VectorField B;
  double t = 0.0;
};

struct Sources {
  VectorField J;
  ScalarField rho;
};

struct EMDerivative {
  VectorField dE;
  VectorField dB;
};

/// dE/dt = -curl B, dB/dt = -J + curl E.
EMDerivative maxwell_rhs(const EMState& state, const Sources& sources,
                         std::size_t cycle_limit = kDefaultCycleLimit);

inline constexpr double kConstraintTolerance = 1e-8;

/// Drift is measured against the initial state: constraint drifts are sup-norms of
/// (div E_t - rho) - (div E_0 - rho) and div B_t - div B_0, energy drift is
/// max |W_t - W_0| / W_0 with W = (|E|^2 + |B|^2) / 2 and is only tracked when J = 0.
struct ConstraintReport {
  double initial_gauss_residual = 0.0;     // |div E_0 - rho|
  double initial_magnetic_residual = 0.0;  // |div B_0|
  std::vector<std::string> warnings;
  double gauss_drift = 0.0;
  double magnetic_drift = 0.0;
  bool energy_tracked = false;
  double initial_energy = 0.0;
  double energy_drift = 0.0;
  /// All tracked drifts within kConstraintTolerance.
  bool within_tolerance = false;
};

struct MaxwellRun {
  /// States at t = 0 and every `record_every` steps, always ending with the final state.
  std::vector<EMState> trajectory;
  ConstraintReport report;
};

double electromagnetic_energy(const EMState& state);

/// Fixed-step classical RK4. Throws Errc::NonPositiveStep for dt <= 0 and
/// GraphMismatch when the fields live on different graphs.
MaxwellRun maxwell_integrate(const EMState& initial, const Sources& sources, double dt, std::size_t steps,
                             std::size_t record_every = 1, std::size_t cycle_limit = kDefaultCycleLimit);

}  // namespace hodgegraph
