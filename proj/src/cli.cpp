#include "hodgegraph/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>

#include <CLI11.hpp>

#include "hodgegraph/check_suite.hpp"
#include "hodgegraph/json_io.hpp"
#include "hodgegraph/numerics.hpp"
#include "hodgegraph/operators.hpp"

namespace hodgegraph {

namespace {

using io::Json;

struct Options {
  std::string graph;
  std::string field;
  std::string subgraph;
  std::string scenario;
  std::optional<Vertex> pole;
  bool dot = false;
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t cycle_limit = kDefaultCycleLimit;
  std::optional<double> tolerance;
  std::string suite = "all";
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string dot_name(const DirectedEdge& u) { return "\"" + std::to_string(u.base) + "," + std::to_string(u.tip) + "\""; }

void emit_dot(std::ostream& out, const Graph& g) {
  const TangentGraph& tg = g.tangent();
  out << "graph tangent {\n";
  out << "  node [shape=circle];\n";
  for (const DirectedEdge& u : tg.directed_edges()) {
    out << "  " << dot_name(u) << " [label=\"" << u.base << u.tip << "\"];\n";
  }
  for (const auto& [p, q] : tg.adjacency()) {
    // Reversal pairs drawn bold, as the fibers of the projection to G.
    const bool fiber = tg.reverse_index(p) == q;
    out << "  " << dot_name(tg[p]) << " -- " << dot_name(tg[q]) << (fiber ? " [style=bold]" : "") << ";\n";
  }
  out << "}\n";
}

int cmd_tangent(const Options& o, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  if (o.dot) {
    emit_dot(out, g);
    return kExitSuccess;
  }
  Json j = {{"graph", io::to_json(g)}, {"tangent", io::to_json(g.tangent())}};
  j["vertex_count"] = g.tangent().size();
  j["edge_count"] = g.tangent().adjacency().size();
  emit(out, j);
  return kExitSuccess;
}

int cmd_boundary(const Options& o, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  g.require_connected();
  const SubgraphSpec h = io::subgraph_from_json(io::read_json_file(o.subgraph)).validated(g);
  emit(out, {{"subgraph", io::to_json(h)}, {"boundary", io::to_json(boundary(g, h))}});
  return kExitSuccess;
}

int cmd_decompose(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  const VectorField x = io::field_from_json(g, io::read_json_file(o.field));
  const HodgeDecomposition d = hodge_decompose(x, o.cycle_limit);
  const double tol = o.tolerance.value_or(1e-10);
  Json j = io::to_json(d);
  j["tolerance"] = tol;
  const bool ok = d.reconstruction_residual <= tol && d.orthogonality_residual <= tol &&
                  d.gradient_consistency_residual <= tol;
  j["pass"] = ok;
  emit(out, j);
  if (!ok) {
    err << "decomposition residuals exceed " << tol << '\n';
    return kExitVerification;
  }
  return kExitSuccess;
}

int cmd_cycles(const Options& o, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  const CycleSet cycles = simple_cycles(g, o.cycle_limit);
  const CirculationSystem sys = circulation_system(g, o.cycle_limit);
  Json j = {{"cycle_count", cycles.size()}, {"cycles", io::to_json(cycles)}, {"circulation_system", io::to_json(sys)}};
  j["rank"] = numerics::numerical_rank(sys.matrix);
  j["dimensions"] = io::to_json(dimension_report(g, o.cycle_limit));
  emit(out, j);
  return kExitSuccess;
}

int cmd_greens(const Options& o, std::ostream& out) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  g.require_connected();
  if (o.pole) {
    emit(out, {{"pole", *o.pole}, {"greens_function", io::to_json(greens_function(g, *o.pole))}});
  } else {
    emit(out, {{"vertices", std::vector<Vertex>(g.vertices().begin(), g.vertices().end())},
               {"greens_matrix", io::matrix_to_json(greens_matrix(g).matrix)}});
  }
  return kExitSuccess;
}

int cmd_check(const Options& o, std::ostream& out, std::ostream& err) {
  const Graph g = io::graph_from_json(io::read_json_file(o.graph));
  CheckOptions opts;
  opts.suite = parse_check_suite(o.suite);
  opts.trials = o.trials;
  opts.seed = o.seed;
  opts.tolerance = o.tolerance;
  opts.cycle_limit = o.cycle_limit;
  const CheckResult r = run_checks(g, opts);

  Json entries = Json::array();
  for (const CheckEntry& e : r.entries) {
    entries.push_back({{"identity", e.identity},
                       {"trials", e.trials},
                       {"max_residual", e.max_residual},
                       {"tolerance", e.tolerance},
                       {"pass", e.pass}});
  }
  emit(out, {{"graph", io::to_json(g)},
             {"suite", std::string(to_string(r.suite))},
             {"seed", r.seed},
             {"trials", r.trials},
             {"identities", entries},
             {"pass", r.pass}});
  if (!r.pass) {
    for (const CheckEntry& e : r.entries) {
      if (!e.pass) err << "failed: " << e.identity << " (max residual " << e.max_residual << ")\n";
    }
    return kExitVerification;
  }
  return kExitSuccess;
}

int cmd_maxwell(const Options& o, std::ostream& out) {
  const io::Scenario s = io::scenario_from_json(io::read_json_file(o.scenario));
  const MaxwellRun run = maxwell_integrate(s.initial, s.sources, s.dt, s.steps, s.record_every, o.cycle_limit);
  for (const EMState& st : run.trajectory) {
    Json rec = io::to_json(st);
    rec["energy"] = electromagnetic_energy(st);
    out << rec.dump() << '\n';
  }
  Json rep = io::to_json(run.report);
  out << Json{{"report", rep}}.dump() << '\n';
  return kExitSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Vector calculus, Hodge decomposition and Maxwell dynamics on graphs", "hodgegraph"};
  app.require_subcommand(1);
  Options o;

  auto graph_opt = [&](CLI::App* sub) { sub->add_option("--graph", o.graph, "graph JSON file")->required(); };
  auto limit_opt = [&](CLI::App* sub) {
    sub->add_option("--cycle-limit", o.cycle_limit, "maximum number of simple cycles")->check(CLI::PositiveNumber);
  };

  CLI::App* tangent = app.add_subcommand("tangent", "tangent graph");
  graph_opt(tangent);
  tangent->add_flag("--dot", o.dot, "emit DOT instead of JSON");

  CLI::App* bnd = app.add_subcommand("boundary", "boundary and inward normal of a subgraph");
  graph_opt(bnd);
  bnd->add_option("--subgraph", o.subgraph, "subgraph JSON file")->required();

  CLI::App* dec = app.add_subcommand("decompose", "Helmholtz-Hodge decomposition of a vector field");
  graph_opt(dec);
  dec->add_option("--field", o.field, "vector field JSON file")->required();
  dec->add_option("--tolerance", o.tolerance, "residual tolerance");
  limit_opt(dec);

  CLI::App* cyc = app.add_subcommand("cycles", "simple cycles and circulation system");
  graph_opt(cyc);
  limit_opt(cyc);

  CLI::App* grn = app.add_subcommand("greens", "Green's functions");
  graph_opt(grn);
  grn->add_option("--pole", o.pole, "pole vertex (all poles when omitted)");

  CLI::App* chk = app.add_subcommand("check", "randomized identity checks");
  graph_opt(chk);
  chk->add_option("--suite", o.suite, "theorems, hodge or all")->check(CLI::IsMember({"theorems", "hodge", "all"}));
  chk->add_option("--trials", o.trials, "random trials per identity");
  chk->add_option("--seed", o.seed, "random seed");
  chk->add_option("--tolerance", o.tolerance, "override every identity tolerance");
  limit_opt(chk);

  CLI::App* mx = app.add_subcommand("maxwell", "RK4 integration of Maxwell's equations");
  mx->add_option("--scenario", o.scenario, "scenario JSON file")->required();
  limit_opt(mx);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitValidation;
  }

  try {
    if (tangent->parsed()) return cmd_tangent(o, out);
    if (bnd->parsed()) return cmd_boundary(o, out);
    if (dec->parsed()) return cmd_decompose(o, out, err);
    if (cyc->parsed()) return cmd_cycles(o, out);
    if (grn->parsed()) return cmd_greens(o, out);
    if (chk->parsed()) return cmd_check(o, out, err);
    if (mx->parsed()) return cmd_maxwell(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return e.code() == Errc::CycleLimitExceeded ? kExitResourceLimit : kExitValidation;
  }
  return kExitValidation;
}

}  // namespace hodgegraph
