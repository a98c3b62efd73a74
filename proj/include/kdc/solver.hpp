#ifndef KDC_SOLVER_HPP_
#define KDC_SOLVER_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "kdc/config.hpp"
#include "kdc/graph.hpp"
#include "kdc/instance.hpp"
#include "kdc/preprocess.hpp"
#include "kdc/reductions.hpp"

namespace kdc {

struct SearchStats {
  int64_t nodes = 0;
  std::array<int64_t, kNumRules> rule_fires{};
  int64_t reduction_prunes = 0;
  int64_t bound_prunes = 0;
  int max_depth = 0;
  // Longest run of consecutive left children on which the reductions did
  // nothing (kdc_t only). The complexity argument bounds it by k.
  int max_left_chain = 0;
  // Incumbent size after every improvement, in discovery order.
  std::vector<int> incumbent_history;
  double elapsed_seconds = 0;
  PreprocessReport preprocess;
};

struct SolverResult {
  VertexSet best;  // ascending vertex ids of the input graph
  int size = 0;
  bool optimal = false;
  SearchStats stats;
};

// Branching rule: a candidate with the most non-neighbors in S (at least
// one), smallest id on ties; if every candidate is adjacent to all of S, the
// candidate of minimum live degree, smallest id on ties.
int select_branch_vertex(const Instance& inst);

// The minimal engine: RR1/RR2, leaf check, branch. No bounds, no other rules.
// `best` holds vertex ids of the instance's graph and is only updated at
// leaves.
void branch_and_bound_t(Instance& inst, VertexSet& best, SearchStats& stats);
SolverResult kdc_t(const Graph& g, int k);

// Full solver: initial solution, global reduction, then branch and bound
// with RR1-RR5 and UB1-UB3 as enabled by `config`. While S is empty the
// search walks the chain of exclude-branches iteratively without UB1, and
// each include-branch searches a copy of its vertex's two-hop neighborhood.
SolverResult kdc(const Graph& g, const SolverConfig& config);

// Greedy diversified cover: repeatedly solve, record, delete the solution's
// vertices. Returned sets are pairwise disjoint, in discovery order.
std::vector<VertexSet> top_r_diversified(const Graph& g, int r, const SolverConfig& config);

// Same, plus whether every solve finished within the time limit.
struct DiversifiedResult {
  std::vector<VertexSet> sets;
  bool optimal = true;
};
DiversifiedResult top_r_diversified_detailed(const Graph& g, int r, const SolverConfig& config);

}  // namespace kdc

#endif  // KDC_SOLVER_HPP_
