#ifndef KDC_REDUCTIONS_HPP_
#define KDC_REDUCTIONS_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "kdc/instance.hpp"

namespace kdc {

enum class Rule : uint8_t { kRR1, kRR2, kRR3, kRR4, kRR5 };
inline constexpr int kNumRules = 5;
const char* rule_name(Rule rule);

enum class ActionKind : uint8_t { kRemoved, kAddedToSolution, kPruned };

struct ReductionAction {
  ActionKind kind;
  int vertex;  // -1 for kPruned
  Rule rule;

  friend bool operator==(const ReductionAction&, const ReductionAction&) = default;
};

// What the reduction rules did to an instance, in order. A pruned log means
// the instance holds no solution larger than lb; its remaining state is
// whatever the rules had done up to that point.
struct ReductionLog {
  std::vector<ReductionAction> actions;
  bool pruned = false;

  void clear() {
    actions.clear();
    pruned = false;
  }
  bool empty() const { return actions.empty(); }
  std::array<int64_t, kNumRules> fire_counts() const;
};

// Counters of one vertex pair (u in S, v a candidate) over the candidates
// other than v.
struct PairCounters {
  int common_neighbors = 0;
  int common_non_neighbors = 0;
  int exclusive_neighbors = 0;
};

struct ReductionOptions {
  bool rr3 = true;
  bool rr4 = true;
};

// One pass of RR1: removes every candidate whose addition would exceed k
// non-edges.
void rr1(Instance& inst, ReductionLog& log);

// One step of RR2: moves into S the eligible candidate (at most one live
// non-neighbor, affordable) with most non-neighbors in S, smallest id on
// ties. Returns false if no candidate is eligible.
bool rr2(Instance& inst, ReductionLog& log);

// RR1 drops candidates whose addition would exceed k non-edges; RR2 moves
// into S any candidate with at most one non-neighbor in g that S can afford,
// the one with most non-neighbors in S first. Runs until neither applies.
void rr1_rr2_fixpoint(Instance& inst, ReductionLog& log);

// Degree-sequence rule, one pass over candidates sorted by non-neighbors in S.
void rr3(Instance& inst, int lb, ReductionLog& log);

PairCounters pair_counters(const Instance& inst, int u, int v);

// Second-order rule against solution vertex `u`, one evaluation per
// candidate.
void rr4(Instance& inst, int lb, int u, ReductionLog& log);

// Peels the live graph to its (lb - k)-core; prunes the instance if a vertex
// of S would have to go.
void rr5(Instance& inst, int lb, ReductionLog& log);

// RR1/RR2 fixpoint, RR4 against `last_added`, RR3, RR5, RR1/RR2 fixpoint.
// Stops at the first rule that prunes.
void apply_all(Instance& inst, int lb, std::optional<int> last_added,
               const ReductionOptions& options, ReductionLog& log);

// Re-applies the vertex actions of `log` to `inst`.
void replay(Instance& inst, const ReductionLog& log);

// True if no candidate can be added without exceeding k and every candidate
// has at least two non-neighbors in the live graph.
bool at_rr1_rr2_fixpoint(const Instance& inst);

}  // namespace kdc

#endif  // KDC_REDUCTIONS_HPP_
