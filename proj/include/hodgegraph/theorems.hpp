#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodgegraph/boundary.hpp"
#include "hodgegraph/fields.hpp"

namespace hodgegraph {

inline constexpr double kIdentityTolerance = 1e-12;

struct NamedValue {
  std::string name;
  double value = 0.0;
};

/// Both (or all) sides of an identity evaluated on concrete inputs.
///
/// residual is the largest absolute difference between any side and the first one.
/// terms carries intermediate quantities (interior/boundary contributions, averages).
struct IdentityReport {
  std::string identity;
  std::vector<NamedValue> sides;
  std::vector<NamedValue> terms;
  double residual = 0.0;
  double tolerance = kIdentityTolerance;
  bool pass = false;
};

IdentityReport make_identity_report(std::string identity, std::vector<NamedValue> sides,
                                    std::vector<NamedValue> terms = {}, double tolerance = kIdentityTolerance);

/// Average of phi over the vertices of H (0 for an empty vertex set).
double average_over(const ScalarField& phi, const SubgraphSpec& h);

/// sum_{V_H} div X  =  sum_{V_dH} n_H . X  =  sum_{V-_dH} div_dH X
IdentityReport divergence_theorem_sides(const SubgraphSpec& h, const VectorField& x,
                                        double tolerance = kIdentityTolerance);

/// sum_{V_H} Lap phi  =  sum_{V_dH} n_H . grad phi  =  sum_{V-_dH} Lap_dH phi
IdentityReport greens_theorem_sides(const SubgraphSpec& h, const ScalarField& phi,
                                    double tolerance = kIdentityTolerance);

enum class GreensIdentity { First = 1, Second = 2, Third = 3 };

/// Green's identities on H. psi is ignored for the third identity, which uses the
/// Green's function with the given pole instead (Errc::MissingPole without one).
IdentityReport greens_identity_sides(const SubgraphSpec& h, const ScalarField& phi, const ScalarField& psi,
                                     GreensIdentity which, std::optional<Vertex> pole = std::nullopt,
                                     double tolerance = kIdentityTolerance);

/// sum_{V_H} X phi  =  sum_{V_H} phi div X + sum_{V_dH} n_H . (phi X-bar)
///                 =  sum_{V_H} phi div X + sum_{V-_dH} div_dH (phi X-bar)
/// where (phi X-bar)(u) = phi(base u) X(sigma u).
IdentityReport first_order_boundary_sides(const SubgraphSpec& h, const VectorField& x, const ScalarField& phi,
                                          double tolerance = kIdentityTolerance);

}  // namespace hodgegraph
