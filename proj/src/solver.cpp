#include "kdc/solver.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include "kdc/bounds.hpp"

namespace kdc {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void tally(SearchStats& stats, const ReductionLog& log) {
  const auto counts = log.fire_counts();
  for (int r = 0; r < kNumRules; ++r) stats.rule_fires[r] += counts[r];
}

class TheoryEngine {
 public:
  TheoryEngine(Instance& inst, VertexSet& best, SearchStats& stats)
      : inst_(inst), best_(best), stats_(stats) {}

  void node(int depth, bool left_child, int chain) {
    ++stats_.nodes;
    stats_.max_depth = std::max(stats_.max_depth, depth);
    const size_t mark = inst_.mark();
    log_.clear();
    rr1_rr2_fixpoint(inst_, log_);
    tally(stats_, log_);
    const bool reduced = !log_.empty();

    if (inst_.live_non_edges() <= inst_.k()) {
      if (inst_.live_count() > static_cast<int>(best_.size())) {
        best_ = inst_.live_vertices();
        stats_.incumbent_history.push_back(static_cast<int>(best_.size()));
      }
      inst_.rollback(mark);
      return;
    }

    const int run = (left_child && !reduced) ? chain + 1 : 0;
    stats_.max_left_chain = std::max(stats_.max_left_chain, run);

    const int b = select_branch_vertex(inst_);
    const size_t before_branch = inst_.mark();
    inst_.add_to_solution(b);
    node(depth + 1, true, run);
    inst_.rollback(before_branch);
    inst_.remove(b);
    node(depth + 1, false, 0);
    inst_.rollback(mark);
  }

 private:
  Instance& inst_;
  VertexSet& best_;
  SearchStats& stats_;
  ReductionLog log_;
};

struct SearchContext {
  const SolverConfig& config;
  int lb;
  VertexSet best;  // ids of the graph handed to the top-level engine
  SearchStats& stats;
  std::optional<Clock::time_point> deadline;
  bool timed_out = false;
};

class Engine {
 public:
  // `to_top` maps vertices of `g` to the top-level graph; empty means identity.
  Engine(const Graph& g, SearchContext& ctx, std::vector<int> to_top = {})
      : inst_(g, ctx.config.k),
        ctx_(ctx),
        to_top_(std::move(to_top)),
        options_{ctx.config.enable_rr3, ctx.config.enable_rr4} {
    chain_config_ = ctx.config;
    chain_config_.enable_ub1 = false;
  }

  void run() { node(0); }

  void run_from(int v, int depth) {
    inst_.add_to_solution(v);
    node(depth);
  }

 private:
  int lb() const { return ctx_.lb; }

  void improve(const VertexSet& vertices) {
    ctx_.best.clear();
    for (int v : vertices) ctx_.best.push_back(to_top_.empty() ? v : to_top_[v]);
    ctx_.lb = static_cast<int>(vertices.size());
    ctx_.stats.incumbent_history.push_back(ctx_.lb);
  }

  // Counts the node; false once the time limit has passed.
  bool enter(int depth) {
    SearchStats& stats = ctx_.stats;
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (ctx_.deadline && (stats.nodes - 1) % ctx_.config.node_check_interval == 0 &&
        Clock::now() > *ctx_.deadline) {
      ctx_.timed_out = true;
    }
    return !ctx_.timed_out;
  }

  // Reductions, incumbent update and leaf test. True if the node still needs
  // bounding and branching.
  bool reduce() {
    std::optional<int> last_added;
    if (inst_.solution_size() > 0) last_added = inst_.solution().back();
    log_.clear();
    apply_all(inst_, lb(), last_added, options_, log_);
    tally(ctx_.stats, log_);
    if (log_.pruned) {
      ++ctx_.stats.reduction_prunes;
      return false;
    }
    if (inst_.solution_size() > lb()) {
      improve(VertexSet(inst_.solution().begin(), inst_.solution().end()));
    }
    if (inst_.live_non_edges() <= inst_.k()) {
      if (inst_.live_count() > lb()) improve(inst_.live_vertices());
      return false;
    }
    return true;
  }

  void node(int depth) {
    if (!enter(depth)) return;
    const size_t mark = inst_.mark();
    if (reduce()) expand(depth);
    inst_.rollback(mark);
  }

  void expand(int depth) {
    if (inst_.solution_size() == 0) {
      root_chain(depth);
      return;
    }
    if (combined_upper_bound(inst_, ctx_.config, lb()) <= lb()) {
      ++ctx_.stats.bound_prunes;
      return;
    }
    const int b = select_branch_vertex(inst_);
    const size_t before_branch = inst_.mark();
    inst_.add_to_solution(b);
    node(depth + 1);
    inst_.rollback(before_branch);
    if (ctx_.timed_out) return;
    inst_.remove(b);
    node(depth + 1);
    inst_.rollback(before_branch);
  }

  // With S empty every candidate is adjacent to all of S, so the branching
  // rule keeps picking a minimum-degree vertex and the right children form a
  // chain. It is walked iteratively; the caller rolls the chain back.
  void root_chain(int depth) {
    while (true) {
      if (combined_upper_bound(inst_, chain_config_, lb()) <= lb()) {
        ++ctx_.stats.bound_prunes;
        return;
      }
      const int b = select_branch_vertex(inst_);
      include(b, depth + 1);
      if (ctx_.timed_out) return;
      inst_.remove(b);
      ++depth;
      if (!enter(depth) || !reduce()) return;
      if (inst_.solution_size() > 0) {
        expand(depth);
        return;
      }
    }
  }

  // Left child of a chain node: S = {b}. Any larger solution through b keeps,
  // besides neighbors of b, only vertices sharing at least lb-k neighbors
  // with b, so the child searches a copy of that part of the graph.
  void include(int b, int depth) {
    const int threshold = lb() - inst_.k();
    if (threshold < 1) {
      const size_t mark = inst_.mark();
      inst_.add_to_solution(b);
      node(depth);
      inst_.rollback(mark);
      return;
    }
    const Graph& g = inst_.graph();
    common_.resize(g.num_vertices(), 0);
    std::vector<int> keep{b};
    std::vector<int> touched;
    for (int x : g.neighbors(b)) {
      if (!inst_.is_live(x)) continue;
      keep.push_back(x);
      for (int y : g.neighbors(x)) {
        if (y == b || !inst_.is_live(y) || g.has_edge(b, y)) continue;
        if (common_[y]++ == 0) touched.push_back(y);
      }
    }
    for (int y : touched) {
      if (common_[y] >= threshold) keep.push_back(y);
      common_[y] = 0;
    }
    std::vector<int> to_top;
    to_top.reserve(keep.size());
    for (int v : keep) to_top.push_back(to_top_.empty() ? v : to_top_[v]);
    const Graph sub = induced_subgraph(g, keep);
    Engine child(sub, ctx_, std::move(to_top));
    child.run_from(0, depth);
  }

  Instance inst_;
  SearchContext& ctx_;
  std::vector<int> to_top_;
  SolverConfig chain_config_;
  ReductionOptions options_;
  ReductionLog log_;
  std::vector<int> common_;
};

}  // namespace

int select_branch_vertex(const Instance& inst) {
  if (inst.candidate_count() == 0) throw std::logic_error("no candidate to branch on");
  int best = -1;
  int best_nn = 0;
  for (int v : inst.candidates()) {
    const int nn = inst.non_neighbors_in_solution(v);
    if (nn > best_nn || (nn == best_nn && nn > 0 && v < best)) {
      best = v;
      best_nn = nn;
    }
  }
  if (best >= 0) return best;
  for (int v : inst.candidates()) {
    if (best < 0 || inst.live_degree(v) < inst.live_degree(best) ||
        (inst.live_degree(v) == inst.live_degree(best) && v < best)) {
      best = v;
    }
  }
  return best;
}

void branch_and_bound_t(Instance& inst, VertexSet& best, SearchStats& stats) {
  TheoryEngine engine(inst, best, stats);
  engine.node(0, false, 0);
}

SolverResult kdc_t(const Graph& g, int k) {
  const auto start = Clock::now();
  SolverResult result;
  Instance inst(g, k);
  branch_and_bound_t(inst, result.best, result.stats);
  std::sort(result.best.begin(), result.best.end());
  result.size = static_cast<int>(result.best.size());
  result.optimal = true;
  result.stats.elapsed_seconds = seconds_since(start);
  return result;
}

SolverResult kdc(const Graph& g, const SolverConfig& config) {
  config.validate();
  const auto start = Clock::now();
  std::optional<Clock::time_point> deadline;
  if (config.time_limit_seconds) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           std::chrono::duration<double>(*config.time_limit_seconds));
  }

  SolverResult result;
  SearchStats& stats = result.stats;
  result.best = config.use_degen_opt ? degen_opt(g, config.k) : degen(g, config.k);
  const int lb = static_cast<int>(result.best.size());
  if (lb > 0) stats.incumbent_history.push_back(lb);

  ReducedGraph reduced = global_reduce(g, lb, config.k, config.enable_rr6);
  stats.preprocess.initial_clique = result.best;
  stats.preprocess.initial_size = lb;
  stats.preprocess.reduced_n = reduced.graph.num_vertices();
  stats.preprocess.reduced_m = reduced.graph.num_edges();
  stats.preprocess.elapsed_seconds = seconds_since(start);

  result.optimal = true;
  if (reduced.graph.num_vertices() > 0) {
    SearchContext ctx{config, lb, {}, stats, deadline};
    Engine engine(reduced.graph, ctx);
    engine.run();
    if (!ctx.best.empty()) {
      result.best.clear();
      for (int v : ctx.best) result.best.push_back(reduced.to_original[v]);
    }
    result.optimal = !ctx.timed_out;
  }
  std::sort(result.best.begin(), result.best.end());
  result.size = static_cast<int>(result.best.size());
  stats.elapsed_seconds = seconds_since(start);
  return result;
}

std::vector<VertexSet> top_r_diversified(const Graph& g, int r, const SolverConfig& config) {
  return top_r_diversified_detailed(g, r, config).sets;
}

DiversifiedResult top_r_diversified_detailed(const Graph& g, int r, const SolverConfig& config) {
  if (r < 1) throw std::invalid_argument("r must be at least 1");
  DiversifiedResult out;
  std::vector<VertexSet>& found = out.sets;
  Graph working = g;
  std::vector<int> to_original(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) to_original[v] = v;

  while (static_cast<int>(found.size()) < r && working.num_vertices() > 0) {
    const SolverResult res = kdc(working, config);
    out.optimal = out.optimal && res.optimal;
    if (res.size == 0) break;
    VertexSet clique;
    std::vector<char> taken(working.num_vertices(), 0);
    for (int v : res.best) {
      clique.push_back(to_original[v]);
      taken[v] = 1;
    }
    std::sort(clique.begin(), clique.end());
    found.push_back(std::move(clique));

    std::vector<int> rest;
    std::vector<int> rest_original;
    for (int v = 0; v < working.num_vertices(); ++v) {
      if (!taken[v]) {
        rest.push_back(v);
        rest_original.push_back(to_original[v]);
      }
    }
    working = induced_subgraph(working, rest);
    to_original = std::move(rest_original);
  }
  return out;
}

}  // namespace kdc
