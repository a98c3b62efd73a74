#include "kdc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <optional>

#include "CLI11.hpp"
#include "kdc/bounds.hpp"
#include "kdc/preprocess.hpp"
#include "kdc/report.hpp"
#include "kdc/solver.hpp"
#include "kdc/verify.hpp"

namespace kdc::cli {

namespace {

struct Options {
  int k = 0;
  int r = 1;
  std::optional<double> time_limit;
  std::string format = "text";
  std::string input;
  bool no_ub1 = false;
  bool no_rr34 = false;
  bool degen_only = false;
  bool compare_eq1 = false;
  bool opt = false;
};

// Thrown for unreadable or malformed input; maps to kExitInputError.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Graph load(const std::string& path) {
  try {
    return load_edge_list_file(path).graph;
  } catch (const ParseError& e) {
    throw InputError(path + ":" + std::to_string(e.line()) + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw InputError(e.what());
  }
}

std::vector<std::string> labels_of(const Graph& g, const VertexSet& s) {
  std::vector<std::string> out;
  out.reserve(s.size());
  for (int v : s) out.push_back(g.label(v));
  return out;
}

SolverConfig make_config(const Options& o) {
  SolverConfig c = o.degen_only ? SolverConfig::degen_only(o.k) : SolverConfig::full(o.k);
  if (o.no_ub1) c.enable_ub1 = false;
  if (o.no_rr34) c.enable_rr3 = c.enable_rr4 = false;
  c.time_limit_seconds = o.time_limit;
  return c;
}

RunReport base_report(const std::string& mode, const Options& o) {
  RunReport r;
  r.mode = mode;
  r.input = o.input;
  r.k = o.k;
  return r;
}

RunReport solve(const Options& o) {
  const Graph g = load(o.input);
  const SolverResult res = kdc(g, make_config(o));
  RunReport r = base_report("solve", o);
  r.size = res.size;
  r.vertices = labels_of(g, res.best);
  r.optimal = res.optimal;
  r.stats = make_report_stats(res.stats);
  if (o.compare_eq1) {
    r.eq1_bound = ub_coloring_basic(0, o.k, greedy_coloring(g, degeneracy_ordering(g)));
  }
  return r;
}

RunReport heuristic(const Options& o) {
  const Graph g = load(o.input);
  const VertexSet s = o.opt ? degen_opt(g, o.k) : degen(g, o.k);
  RunReport r = base_report("heuristic", o);
  r.size = static_cast<int>(s.size());
  r.vertices = labels_of(g, s);
  return r;
}

RunReport oracle(const Options& o) {
  const Graph g = load(o.input);
  VertexSet s;
  try {
    s = brute_force_max(g, o.k);
  } catch (const OracleBudgetExceeded& e) {
    throw InputError(std::string("oracle: ") + e.what());
  }
  RunReport r = base_report("oracle", o);
  r.size = static_cast<int>(s.size());
  r.vertices = labels_of(g, s);
  r.optimal = true;
  return r;
}

RunReport topr(const Options& o) {
  const Graph g = load(o.input);
  const DiversifiedResult found = top_r_diversified_detailed(g, o.r, make_config(o));
  const auto& sets = found.sets;
  RunReport r = base_report("topr", o);
  std::vector<int> seen(g.num_vertices(), 0);
  bool disjoint = true;
  for (const auto& s : sets) {
    r.records.push_back({static_cast<int>(s.size()), labels_of(g, s)});
    r.size += static_cast<int>(s.size());
    for (int v : s) disjoint = disjoint && seen[v]++ == 0;
  }
  // Vertices covered by all records together.
  VertexSet covered;
  for (const auto& s : sets) covered.insert(covered.end(), s.begin(), s.end());
  std::sort(covered.begin(), covered.end());
  r.vertices = labels_of(g, covered);
  r.disjoint = disjoint;
  r.optimal = found.optimal;
  return r;
}

RunReport gamma(const Options& o) {
  RunReport r = base_report("gamma", o);
  r.gamma = gamma_k(o.k);
  r.optimal = true;
  return r;
}

RunReport reduce(const Options& o) {
  const auto start = std::chrono::steady_clock::now();
  const Graph g = load(o.input);
  const VertexSet initial = o.degen_only ? degen(g, o.k) : degen_opt(g, o.k);
  const int lb = static_cast<int>(initial.size());
  const ReducedGraph reduced = global_reduce(g, lb, o.k, !o.degen_only);
  RunReport r = base_report("reduce", o);
  r.size = lb;
  r.vertices = labels_of(g, initial);
  // Nothing survives only if no larger solution exists.
  r.optimal = reduced.graph.num_vertices() == 0;
  ReportStats s;
  s.initial_size = lb;
  s.reduced_n = reduced.graph.num_vertices();
  s.reduced_m = reduced.graph.num_edges();
  s.preprocess_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  s.elapsed_seconds = s.preprocess_seconds;
  r.stats = s;
  return r;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Maximum k-defective clique solver", "kdc"};
  app.require_subcommand(1);
  Options o;

  auto add_k = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Number of missing edges allowed")
        ->required()
        ->check(CLI::NonNegativeNumber);
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Edge-list file")->required();
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };
  auto add_search = [&](CLI::App* sub) {
    sub->add_option("--time-limit", o.time_limit, "Wall-clock limit in seconds")
        ->check(CLI::NonNegativeNumber);
    sub->add_flag("--no-ub1", o.no_ub1, "Disable the coloring bound");
    sub->add_flag("--no-rr34", o.no_rr34, "Disable the degree-sequence and pair rules");
    sub->add_flag("--degen-only", o.degen_only, "Degen start, no truss reduction");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "Exact maximum k-defective clique");
  add_k(solve_cmd);
  add_input(solve_cmd);
  add_format(solve_cmd);
  add_search(solve_cmd);
  solve_cmd->add_flag("--compare-eq1", o.compare_eq1, "Also report the basic coloring bound");

  CLI::App* heuristic_cmd = app.add_subcommand("heuristic", "Degen or Degen-opt only");
  add_k(heuristic_cmd);
  add_input(heuristic_cmd);
  add_format(heuristic_cmd);
  heuristic_cmd->add_flag("--opt", o.opt, "Use Degen-opt");

  CLI::App* oracle_cmd = app.add_subcommand("oracle", "Exhaustive search, at most 30 vertices");
  add_k(oracle_cmd);
  add_input(oracle_cmd);
  add_format(oracle_cmd);

  CLI::App* topr_cmd = app.add_subcommand("topr", "Greedy diversified top-r");
  add_k(topr_cmd);
  add_input(topr_cmd);
  add_format(topr_cmd);
  add_search(topr_cmd);
  topr_cmd->add_option("--r", o.r, "Number of solutions")->required()->check(CLI::PositiveNumber);

  CLI::App* gamma_cmd = app.add_subcommand("gamma", "Search tree base for a given k");
  add_k(gamma_cmd);
  add_format(gamma_cmd);

  CLI::App* reduce_cmd = app.add_subcommand("reduce", "Initial solution and graph reduction");
  add_k(reduce_cmd);
  add_input(reduce_cmd);
  add_format(reduce_cmd);
  reduce_cmd->add_flag("--degen-only", o.degen_only, "Degen start, no truss reduction");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    RunReport report;
    if (solve_cmd->parsed()) report = solve(o);
    if (heuristic_cmd->parsed()) report = heuristic(o);
    if (oracle_cmd->parsed()) report = oracle(o);
    if (topr_cmd->parsed()) report = topr(o);
    if (gamma_cmd->parsed()) report = gamma(o);
    if (reduce_cmd->parsed()) report = reduce(o);
    out << emit_report(report, o.format == "json" ? ReportFormat::kJson : ReportFormat::kText);
  } catch (const InputError& e) {
    err << "kdc: " << e.what() << '\n';
    return kExitInputError;
  }
  return kExitOk;
}

}  // namespace kdc::cli
