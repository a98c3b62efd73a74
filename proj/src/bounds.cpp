#include "kdc/bounds.hpp"

#include <algorithm>
#include <cassert>

namespace kdc {

namespace {

// Greedy coloring of `order` (already in visiting order). `colored(w)` tells
// whether w belongs to the colored set; colors are written to `color`.
template <typename InSet>
ColoringPartition color_in_order(const Graph& g, std::span<const int> order,
                                 std::vector<int>& color, InSet in_set) {
  std::vector<int> used;  // used[c] == index of the vertex that last saw c
  int num_colors = 0;
  for (size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    for (int w : g.neighbors(v)) {
      if (in_set(w) && color[w] >= 0) used[color[w]] = static_cast<int>(i);
    }
    int c = 0;
    while (c < num_colors && used[c] == static_cast<int>(i)) ++c;
    if (c == num_colors) {
      ++num_colors;
      used.push_back(-1);
    }
    color[v] = c;
  }

  ColoringPartition partition;
  partition.class_begin.assign(num_colors + 1, 0);
  for (int v : order) ++partition.class_begin[color[v] + 1];
  for (int c = 0; c < num_colors; ++c) partition.class_begin[c + 1] += partition.class_begin[c];
  partition.vertices.resize(order.size());
  std::vector<int> fill(partition.class_begin.begin(), partition.class_begin.end() - 1);
  for (int v : order) partition.vertices[fill[color[v]]++] = v;
  return partition;
}

// Length of the longest prefix of the sorted `keys` (already clamped to
// budget + 1) whose sum is at most `budget`.
int longest_affordable_prefix(std::span<const int> keys, int64_t budget) {
  if (budget < 0) return 0;
  if (static_cast<uint64_t>(budget) > 4 * keys.size() + 64) {
    // Key range too wide for counting sort to pay off.
    std::vector<int> sorted(keys.begin(), keys.end());
    std::sort(sorted.begin(), sorted.end());
    int taken = 0;
    for (int key : sorted) {
      if (key > budget) break;
      budget -= key;
      ++taken;
    }
    return taken;
  }
  std::vector<int64_t> count(static_cast<size_t>(budget) + 2, 0);
  for (int key : keys) ++count[key];
  int taken = static_cast<int>(count[0]);
  int64_t remaining = budget;
  for (int64_t w = 1; w <= budget; ++w) {
    if (count[w] == 0) continue;
    const int64_t t = std::min(count[w], remaining / w);
    taken += static_cast<int>(t);
    remaining -= t * w;
    if (t < count[w]) break;
  }
  return taken;
}

}  // namespace

int ColoringPartition::color_of(int v) const {
  for (int c = 0; c < num_classes(); ++c) {
    for (int w : color_class(c)) {
      if (w == v) return c;
    }
  }
  return -1;
}

ColoringPartition greedy_coloring(const Graph& g, const DegeneracyInfo& ordering) {
  std::vector<int> order(ordering.order.rbegin(), ordering.order.rend());
  std::vector<int> color(g.num_vertices(), -1);
  return color_in_order(g, order, color, [](int) { return true; });
}

ColoringPartition greedy_coloring(const Instance& inst) {
  auto& ws = inst.workspace();
  const auto& rank = inst.ordering().rank;
  auto cand = inst.candidates();
  ws.buffer2.assign(cand.begin(), cand.end());
  std::sort(ws.buffer2.begin(), ws.buffer2.end(),
            [&](int a, int b) { return rank[a] > rank[b]; });
  ws.buffer.resize(inst.graph().num_vertices());
  for (int v : cand) ws.buffer[v] = -1;
  return color_in_order(inst.graph(), ws.buffer2, ws.buffer,
                        [&](int w) { return inst.is_candidate(w); });
}

int independent_set_cap(int64_t k) {
  int s = 1;
  while (static_cast<int64_t>(s + 1) * s / 2 <= k) ++s;
  return s;
}

int64_t ub_coloring_basic(int solution_size, int k, const ColoringPartition& partition) {
  const int64_t cap = independent_set_cap(k);
  int64_t bound = solution_size;
  for (int c = 0; c < partition.num_classes(); ++c) {
    bound += std::min<int64_t>(cap, partition.color_class(c).size());
  }
  return bound;
}

int ub1(const Instance& inst, const ColoringPartition& partition) {
  const int64_t budget = inst.budget();
  if (budget < 0) return inst.solution_size();
  const int clamp = static_cast<int>(std::min<int64_t>(budget + 1, INT_MAX));
  std::vector<int> weights;
  weights.reserve(partition.vertices.size());
  std::vector<int> costs;
  for (int c = 0; c < partition.num_classes(); ++c) {
    costs.clear();
    for (int v : partition.color_class(c)) {
      costs.push_back(std::min(inst.non_neighbors_in_solution(v), clamp));
    }
    std::sort(costs.begin(), costs.end());
    for (size_t j = 0; j < costs.size(); ++j) {
      weights.push_back(static_cast<int>(
          std::min<int64_t>(static_cast<int64_t>(costs[j]) + static_cast<int64_t>(j), clamp)));
    }
  }
  return inst.solution_size() + longest_affordable_prefix(weights, budget);
}

int ub2(const Instance& inst) {
  if (inst.solution_size() == 0) return kNoBound;
  int min_degree = INT_MAX;
  for (int u : inst.solution()) min_degree = std::min(min_degree, inst.live_degree(u));
  return min_degree + 1 + inst.k();
}

int ub3(const Instance& inst) {
  const int64_t budget = inst.budget();
  if (budget < 0) return inst.solution_size();
  const int clamp = static_cast<int>(std::min<int64_t>(budget + 1, INT_MAX));
  std::vector<int> costs;
  costs.reserve(inst.candidate_count());
  for (int v : inst.candidates()) {
    costs.push_back(std::min(inst.non_neighbors_in_solution(v), clamp));
  }
  return inst.solution_size() + longest_affordable_prefix(costs, budget);
}

int combined_upper_bound(const Instance& inst, const SolverConfig& config, int lb) {
  int bound = kNoBound;
  if (config.enable_ub2) bound = std::min(bound, ub2(inst));
  if (config.enable_ub3) bound = std::min(bound, ub3(inst));
  if (config.enable_ub1 && bound > lb) {
    bound = std::min(bound, ub1(inst, greedy_coloring(inst)));
  }
  return bound;
}

}  // namespace kdc
