#pragma once

#include <cstddef>
#include <string>

#include <Eigen/Dense>
#include <json.hpp>

#include "hodgegraph/boundary.hpp"
#include "hodgegraph/cycles.hpp"
#include "hodgegraph/fields.hpp"
#include "hodgegraph/hodge.hpp"
#include "hodgegraph/maxwell.hpp"
#include "hodgegraph/theorems.hpp"

namespace hodgegraph::io {

using Json = nlohmann::ordered_json;

// Readers throw Errc::MalformedInput for anything that does not fit the schema,
// and the graph validation errors for structurally invalid graphs.

/// Parses text; throws Errc::MalformedInput.
Json parse_json(const std::string& text);
/// Reads and parses a file; throws Errc::MalformedInput.
Json read_json_file(const std::string& path);

/// {"vertices":[1,2,3],"edges":[[1,2],[2,3]]}
Graph graph_from_json(const Json& j);
Json to_json(const Graph& g);

/// {"coefficients":[{"from":1,"to":2,"value":1.0}, ...]}, omitted entries are 0.
VectorField field_from_json(const Graph& g, const Json& j);
Json to_json(const VectorField& x);

/// {"values":[{"vertex":1,"value":0.5}, ...]}, omitted entries are 0.
ScalarField scalar_from_json(const Graph& g, const Json& j);
Json to_json(const ScalarField& phi);

/// Same layout as a graph: {"vertices":[...],"edges":[[a,b],...]}.
SubgraphSpec subgraph_from_json(const Json& j);
Json to_json(const SubgraphSpec& h);

Json to_json(const TangentGraph& tg);
Json to_json(const BoundarySpec& b);
Json to_json(const IdentityReport& r);
Json to_json(const HodgeDimensions& d);
Json to_json(const DimensionReport& r);
Json to_json(const HodgeDecomposition& d);
Json to_json(const SubspaceBasis& b, const Graph& g);
Json to_json(const ExactSequenceReport& r);
Json to_json(const CycleSet& cycles);
Json to_json(const CirculationSystem& sys);
Json matrix_to_json(const Eigen::MatrixXd& m);
Json to_json(const EMState& s);
Json to_json(const ConstraintReport& r);

/// Maxwell scenario: {"graph":..., "E0":field, "B0":field, "J":field, "rho":scalar,
/// "dt":0.01, "steps":1000, "record_every":10}. J, rho, B0 and record_every are optional.
struct Scenario {
  EMState initial;
  Sources sources;
  double dt = 0.0;
  std::size_t steps = 0;
  std::size_t record_every = 1;
};

Scenario scenario_from_json(const Json& j);

}  // namespace hodgegraph::io
