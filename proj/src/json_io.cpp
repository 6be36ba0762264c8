#include "hodgegraph/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

namespace hodgegraph::io {

namespace {

using Eigen::Index;

[[noreturn]] void malformed(const std::string& what) { throw Error(Errc::MalformedInput, what); }

const Json& member(const Json& j, const char* key) {
  if (!j.is_object()) malformed("expected an object");
  auto it = j.find(key);
  if (it == j.end()) malformed(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& array_member(const Json& j, const char* key) {
  const Json& a = member(j, key);
  if (!a.is_array()) malformed(std::string("\"") + key + "\" must be an array");
  return a;
}

Vertex vertex_of(const Json& j) {
  if (!j.is_number_integer()) malformed("vertex labels must be integers");
  const auto v = j.get<long long>();
  if (v <= 0 || v > std::numeric_limits<Vertex>::max()) malformed("vertex label out of range: " + std::to_string(v));
  return static_cast<Vertex>(v);
}

double number_of(const Json& j, const char* what) {
  if (!j.is_number()) malformed(std::string(what) + " must be a number");
  const double x = j.get<double>();
  if (!std::isfinite(x)) malformed(std::string(what) + " must be finite");
  return x;
}

std::pair<Vertex, Vertex> pair_of(const Json& j) {
  if (!j.is_array() || j.size() != 2) malformed("edges must be 2-element arrays");
  return {vertex_of(j[0]), vertex_of(j[1])};
}

Json edge_json(Vertex a, Vertex b) { return Json::array({a, b}); }

Json named_values(const std::vector<NamedValue>& values) {
  Json out = Json::object();
  for (const NamedValue& v : values) out[v.name] = v.value;
  return out;
}

Json coefficient_array(const VectorField& x) {
  const TangentGraph& tg = x.tangent();
  Json arr = Json::array();
  for (std::size_t p = 0; p < tg.size(); ++p) {
    arr.push_back({{"from", tg[p].base}, {"to", tg[p].tip}, {"value", x.at(p)}});
  }
  return arr;
}

}  // namespace

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    malformed(e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) malformed("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

Graph graph_from_json(const Json& j) {
  std::vector<Vertex> vertices;
  for (const Json& v : array_member(j, "vertices")) vertices.push_back(vertex_of(v));
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (const Json& e : array_member(j, "edges")) edges.push_back(pair_of(e));
  return Graph::build(std::move(vertices), edges);
}

Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back(edge_json(e.lo, e.hi));
  return {{"vertices", std::vector<Vertex>(g.vertices().begin(), g.vertices().end())}, {"edges", edges}};
}

VectorField field_from_json(const Graph& g, const Json& j) {
  const TangentGraph& tg = g.tangent();
  Eigen::VectorXd c = Eigen::VectorXd::Zero(static_cast<Index>(tg.size()));
  for (const Json& entry : array_member(j, "coefficients")) {
    const DirectedEdge u{vertex_of(member(entry, "from")), vertex_of(member(entry, "to"))};
    auto pos = tg.find(u);
    if (!pos) malformed("no directed edge " + to_string(u));
    c[static_cast<Index>(*pos)] = number_of(member(entry, "value"), "coefficient");
  }
  return {g, std::move(c)};
}

Json to_json(const VectorField& x) { return {{"coefficients", coefficient_array(x)}}; }

ScalarField scalar_from_json(const Graph& g, const Json& j) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(static_cast<Index>(g.vertex_count()));
  for (const Json& entry : array_member(j, "values")) {
    const Vertex label = vertex_of(member(entry, "vertex"));
    auto idx = g.find_vertex(label);
    if (!idx) malformed("unknown vertex " + std::to_string(label));
    v[static_cast<Index>(*idx)] = number_of(member(entry, "value"), "value");
  }
  return {g, std::move(v)};
}

Json to_json(const ScalarField& phi) {
  const Graph& g = phi.graph();
  Json arr = Json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) arr.push_back({{"vertex", g.label(i)}, {"value", phi.at(i)}});
  return {{"values", arr}};
}

SubgraphSpec subgraph_from_json(const Json& j) {
  SubgraphSpec h;
  for (const Json& v : array_member(j, "vertices")) h.vertices.push_back(vertex_of(v));
  if (j.contains("edges")) {
    for (const Json& e : array_member(j, "edges")) {
      auto [a, b] = pair_of(e);
      h.edges.push_back({std::min(a, b), std::max(a, b)});
    }
  }
  return h;
}

Json to_json(const SubgraphSpec& h) {
  Json edges = Json::array();
  for (const Edge& e : h.edges) edges.push_back(edge_json(e.lo, e.hi));
  return {{"vertices", h.vertices}, {"edges", edges}};
}

Json to_json(const TangentGraph& tg) {
  Json vertices = Json::array();
  for (const DirectedEdge& u : tg.directed_edges()) vertices.push_back(edge_json(u.base, u.tip));
  Json adjacency = Json::array();
  for (const auto& [p, q] : tg.adjacency()) {
    adjacency.push_back(Json::array({edge_json(tg[p].base, tg[p].tip), edge_json(tg[q].base, tg[q].tip)}));
  }
  return {{"directed_edges", vertices}, {"adjacency", adjacency}};
}

Json to_json(const BoundarySpec& b) {
  Json edges = Json::array();
  for (const Edge& e : b.boundary_edges) edges.push_back(edge_json(e.lo, e.hi));
  Json normal = Json::array();
  const TangentGraph& tg = b.normal.tangent();
  for (std::size_t p = 0; p < tg.size(); ++p) {
    if (b.in_tangent[p]) normal.push_back({{"from", tg[p].base}, {"to", tg[p].tip}, {"value", b.normal.at(p)}});
  }
  return {{"v_minus", b.v_minus}, {"v_plus", b.v_plus}, {"boundary_edges", edges}, {"normal", normal}};
}

Json to_json(const IdentityReport& r) {
  return {{"identity", r.identity},     {"sides", named_values(r.sides)}, {"terms", named_values(r.terms)},
          {"residual", r.residual},     {"tolerance", r.tolerance},       {"pass", r.pass}};
}

Json to_json(const HodgeDimensions& d) {
  return {{"gradient", d.gradient}, {"curl", d.curl}, {"harmonic", d.harmonic}};
}

Json to_json(const DimensionReport& r) {
  return {{"computed", to_json(r.computed)},
          {"circulation_free", r.circulation_free},
          {"cyclomatic", r.cyclomatic},
          {"formula", to_json(r.formula)},
          {"matches_formula", r.matches_formula}};
}

Json to_json(const HodgeDecomposition& d) {
  return {{"gradient_part", to_json(d.gradient_part)},
          {"curl_part", to_json(d.curl_part)},
          {"harmonic_part", to_json(d.harmonic_part)},
          {"dimensions", to_json(d.dimensions)},
          {"residuals",
           {{"reconstruction", d.reconstruction_residual},
            {"orthogonality", d.orthogonality_residual},
            {"gradient_consistency", d.gradient_consistency_residual}}}};
}

Json to_json(const SubspaceBasis& b, const Graph& g) {
  Json columns = Json::array();
  for (Index k = 0; k < b.columns.cols(); ++k) columns.push_back(coefficient_array(VectorField(g, b.columns.col(k))));
  return {{"role", std::string(to_string(b.role))}, {"dimension", b.dimension()}, {"basis", columns}};
}

Json to_json(const ExactSequenceReport& r) {
  return {{"norms",
           {{"symmetrize_gradient", r.symmetrize_gradient},
            {"divergence_symmetric", r.divergence_symmetric},
            {"curl_gradient", r.curl_gradient},
            {"divergence_curl", r.divergence_curl}}},
          {"homology",
           {{"antisymmetric_mod_gradient", r.antisymmetric_homology},
            {"divergence_free_mod_symmetric", r.divergence_homology},
            {"cyclomatic", r.cyclomatic}}},
          {"parity",
           {{"circulation_free_split", r.circulation_free_split},
            {"harmonic_split", r.harmonic_split},
            {"harmonic_parity_residual", r.harmonic_parity_residual},
            {"circulation_free_symmetric", r.circulation_free_symmetric},
            {"circulation_free_antisymmetric", r.circulation_free_antisymmetric},
            {"harmonic_symmetric", r.harmonic_symmetric},
            {"harmonic_antisymmetric", r.harmonic_antisymmetric}}},
          {"pass", r.pass}};
}

Json to_json(const CycleSet& cycles) {
  Json arr = Json::array();
  for (const SimpleCycle& c : cycles.cycles) arr.push_back(c.forward);
  return arr;
}

Json matrix_to_json(const Eigen::MatrixXd& m) {
  Json rows = Json::array();
  for (Index r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (Index c = 0; c < m.cols(); ++c) row.push_back(m(r, c));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json to_json(const CirculationSystem& sys) {
  return {{"rows", sys.matrix.rows()},
          {"cols", sys.matrix.cols()},
          {"circuits", sys.circuits},
          {"matrix", matrix_to_json(sys.matrix)}};
}

Json to_json(const EMState& s) { return {{"t", s.t}, {"E", to_json(s.E)}, {"B", to_json(s.B)}}; }

Json to_json(const ConstraintReport& r) {
  Json out = {{"initial_gauss_residual", r.initial_gauss_residual},
              {"initial_magnetic_residual", r.initial_magnetic_residual},
              {"warnings", r.warnings},
              {"gauss_drift", r.gauss_drift},
              {"magnetic_drift", r.magnetic_drift},
              {"energy_tracked", r.energy_tracked},
              {"initial_energy", r.initial_energy}};
  if (r.energy_tracked) out["energy_drift"] = r.energy_drift;
  out["within_tolerance"] = r.within_tolerance;
  return out;
}

Scenario scenario_from_json(const Json& j) {
  const Graph g = graph_from_json(member(j, "graph"));
  const VectorField e0 = field_from_json(g, member(j, "E0"));
  const VectorField b0 = j.contains("B0") ? field_from_json(g, j["B0"]) : VectorField::zero(g);
  const VectorField cur = j.contains("J") ? field_from_json(g, j["J"]) : VectorField::zero(g);
  const ScalarField rho = j.contains("rho") ? scalar_from_json(g, j["rho"]) : ScalarField::zero(g);
  const double dt = number_of(member(j, "dt"), "dt");
  const Json& steps = member(j, "steps");
  if (!steps.is_number_integer() || steps.get<long long>() < 0) malformed("steps must be a non-negative integer");
  std::size_t every = 1;
  if (j.contains("record_every")) {
    const Json& r = j["record_every"];
    if (!r.is_number_integer() || r.get<long long>() < 1) malformed("record_every must be a positive integer");
    every = r.get<std::size_t>();
  }
  return {{e0, b0, 0.0}, {cur, rho}, dt, steps.get<std::size_t>(), every};
}

}  // namespace hodgegraph::io
