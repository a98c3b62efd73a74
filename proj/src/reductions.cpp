#include "kdc/reductions.hpp"

#include <algorithm>
#include <cassert>

namespace kdc {

namespace {

void record(ReductionLog& log, ActionKind kind, int v, Rule rule) {
  log.actions.push_back({kind, v, rule});
}

void prune(ReductionLog& log, Rule rule) {
  log.pruned = true;
  record(log, ActionKind::kPruned, -1, rule);
}

}  // namespace

const char* rule_name(Rule rule) {
  switch (rule) {
    case Rule::kRR1: return "rr1";
    case Rule::kRR2: return "rr2";
    case Rule::kRR3: return "rr3";
    case Rule::kRR4: return "rr4";
    case Rule::kRR5: return "rr5";
  }
  return "?";
}

std::array<int64_t, kNumRules> ReductionLog::fire_counts() const {
  std::array<int64_t, kNumRules> counts{};
  for (const auto& a : actions) {
    if (a.kind != ActionKind::kPruned) ++counts[static_cast<int>(a.rule)];
  }
  return counts;
}

void rr1(Instance& inst, ReductionLog& log) {
  auto& doomed = inst.workspace().buffer2;
  doomed.clear();
  const int64_t budget = inst.budget();
  for (int v : inst.candidates()) {
    if (inst.non_neighbors_in_solution(v) > budget) doomed.push_back(v);
  }
  for (int v : doomed) {
    inst.remove(v);
    record(log, ActionKind::kRemoved, v, Rule::kRR1);
  }
}

bool rr2(Instance& inst, ReductionLog& log) {
  const int64_t budget = inst.budget();
  int chosen = -1;
  int chosen_nn = -1;
  for (int v : inst.candidates()) {
    if (inst.live_non_neighbors(v) > 1) continue;
    const int nn = inst.non_neighbors_in_solution(v);
    if (nn > budget) continue;
    if (nn > chosen_nn || (nn == chosen_nn && v < chosen)) {
      chosen = v;
      chosen_nn = nn;
    }
  }
  if (chosen < 0) return false;
  inst.add_to_solution(chosen);
  record(log, ActionKind::kAddedToSolution, chosen, Rule::kRR2);
  return true;
}

void rr1_rr2_fixpoint(Instance& inst, ReductionLog& log) {
  do {
    rr1(inst, log);
  } while (rr2(inst, log));
  assert(at_rr1_rr2_fixpoint(inst));
}

void rr3(Instance& inst, int lb, ReductionLog& log) {
  const int protected_count = std::max(0, lb - inst.solution_size());
  const int c = inst.candidate_count();
  if (protected_count >= c) return;
  const int64_t budget = inst.budget();
  if (budget < 0) return;
  // No key exceeds |S|, and keys above budget never enter the prefix.
  const int clamp = static_cast<int>(std::min<int64_t>(budget + 1, inst.solution_size() + 1));

  // Counting sort of candidates by non-neighbors in S, keys clamped.
  std::vector<int> start(clamp + 2, 0);
  auto key = [&](int v) { return std::min(inst.non_neighbors_in_solution(v), clamp); };
  for (int v : inst.candidates()) ++start[key(v) + 1];
  for (int i = 0; i <= clamp; ++i) start[i + 1] += start[i];
  auto& sorted = inst.workspace().buffer2;
  sorted.assign(c, -1);
  for (int v : inst.candidates()) sorted[start[key(v)]++] = v;

  int64_t prefix = 0;
  for (int i = 0; i < protected_count; ++i) prefix += inst.non_neighbors_in_solution(sorted[i]);
  const int64_t threshold = budget - prefix;

  std::vector<int> doomed;
  for (int i = protected_count; i < c; ++i) {
    if (inst.non_neighbors_in_solution(sorted[i]) > threshold) doomed.push_back(sorted[i]);
  }
  for (int v : doomed) {
    inst.remove(v);
    record(log, ActionKind::kRemoved, v, Rule::kRR3);
  }
}

PairCounters pair_counters(const Instance& inst, int u, int v) {
  const Graph& g = inst.graph();
  PairCounters pc;
  for (int w : inst.candidates()) {
    if (w == v || w == u) continue;
    const bool nu = g.has_edge(u, w);
    const bool nv = g.has_edge(v, w);
    if (nu && nv) {
      ++pc.common_neighbors;
    } else if (!nu && !nv) {
      ++pc.common_non_neighbors;
    } else {
      ++pc.exclusive_neighbors;
    }
  }
  return pc;
}

void rr4(Instance& inst, int lb, int u, ReductionLog& log) {
  if (!inst.in_solution(u)) return;
  const Graph& g = inst.graph();
  const int64_t k = inst.k();
  const int c = inst.candidate_count();

  const uint32_t stamp = inst.next_stamp();
  auto& marks = inst.workspace().stamp;
  int u_candidate_neighbors = 0;
  for (int w : g.neighbors(u)) {
    if (inst.is_candidate(w)) {
      marks[w] = stamp;
      ++u_candidate_neighbors;
    }
  }

  std::vector<int> doomed;
  for (int v : inst.candidates()) {
    const int64_t non_edges = inst.solution_non_edges() + inst.non_neighbors_in_solution(v);
    if (non_edges > k) continue;
    const int64_t slack = k - non_edges;

    int64_t common = 0;
    int64_t v_degree = 0;
    for (int w : g.neighbors(v)) {
      if (!inst.is_candidate(w)) continue;
      ++v_degree;
      if (marks[w] == stamp) ++common;
    }
    const int64_t others = c - 1;
    const int64_t u_neighbors = u_candidate_neighbors - (marks[v] == stamp ? 1 : 0);
    const int64_t common_non = (others - u_neighbors) - (v_degree - common);
    const int64_t exclusive = others - common - common_non;

    const int64_t bound = inst.solution_size() + 1 + common + std::min(slack, exclusive) +
                          std::min(common_non, std::max<int64_t>(0, (slack - exclusive) / 2));
    if (bound <= lb) doomed.push_back(v);
  }
  for (int v : doomed) {
    inst.remove(v);
    record(log, ActionKind::kRemoved, v, Rule::kRR4);
  }
}

void rr5(Instance& inst, int lb, ReductionLog& log) {
  const int threshold = lb - inst.k();
  if (threshold <= 0) return;
  for (int u : inst.solution()) {
    if (inst.live_degree(u) < threshold) {
      prune(log, Rule::kRR5);
      return;
    }
  }
  const uint32_t stamp = inst.next_stamp();
  auto& queued = inst.workspace().stamp;
  std::vector<int> queue;
  for (int v : inst.candidates()) {
    if (inst.live_degree(v) < threshold) {
      queued[v] = stamp;
      queue.push_back(v);
    }
  }
  const Graph& g = inst.graph();
  for (size_t head = 0; head < queue.size(); ++head) {
    const int v = queue[head];
    inst.remove(v);
    record(log, ActionKind::kRemoved, v, Rule::kRR5);
    for (int w : g.neighbors(v)) {
      if (!inst.is_live(w) || inst.live_degree(w) >= threshold || queued[w] == stamp) continue;
      if (inst.in_solution(w)) {
        prune(log, Rule::kRR5);
        return;
      }
      queued[w] = stamp;
      queue.push_back(w);
    }
  }
}

void apply_all(Instance& inst, int lb, std::optional<int> last_added,
               const ReductionOptions& options, ReductionLog& log) {
  rr1_rr2_fixpoint(inst, log);
  if (options.rr4 && last_added) rr4(inst, lb, *last_added, log);
  if (options.rr3) rr3(inst, lb, log);
  rr5(inst, lb, log);
  if (log.pruned) return;
  rr1_rr2_fixpoint(inst, log);
}

void replay(Instance& inst, const ReductionLog& log) {
  for (const auto& a : log.actions) {
    if (a.kind == ActionKind::kRemoved) inst.remove(a.vertex);
    if (a.kind == ActionKind::kAddedToSolution) inst.add_to_solution(a.vertex);
  }
}

bool at_rr1_rr2_fixpoint(const Instance& inst) {
  const int64_t budget = inst.budget();
  for (int v : inst.candidates()) {
    if (inst.non_neighbors_in_solution(v) > budget) return false;
    if (inst.live_non_neighbors(v) < 2) return false;
  }
  return true;
}

}  // namespace kdc
