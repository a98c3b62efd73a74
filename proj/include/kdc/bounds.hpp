#ifndef KDC_BOUNDS_HPP_
#define KDC_BOUNDS_HPP_

#include <climits>
#include <cstdint>
#include <span>
#include <vector>

#include "kdc/config.hpp"
#include "kdc/graph.hpp"
#include "kdc/instance.hpp"

namespace kdc {

// Returned by a bound that imposes no constraint (UB2 with S empty, or no
// bound enabled).
inline constexpr int kNoBound = INT_MAX;

// Partition of a vertex set into independent sets. Class i is
// vertices[class_begin[i] .. class_begin[i+1]).
struct ColoringPartition {
  std::vector<int> vertices;
  std::vector<int> class_begin{0};

  int num_classes() const { return static_cast<int>(class_begin.size()) - 1; }
  std::span<const int> color_class(int i) const {
    return {vertices.data() + class_begin[i],
            static_cast<size_t>(class_begin[i + 1] - class_begin[i])};
  }
  // Class index of v, or -1 if v is not covered. Linear scan.
  int color_of(int v) const;
};

// Greedy coloring visiting vertices in reverse degeneracy order, each taking
// the smallest color unused by its already-colored neighbors.
ColoringPartition greedy_coloring(const Graph& g, const DegeneracyInfo& ordering);

// Same, restricted to the candidate vertices of the instance and using the
// instance's ordering of its base graph.
ColoringPartition greedy_coloring(const Instance& inst);

// Largest s with s(s-1)/2 <= k: the most vertices of one independent set a
// k-defective clique can hold.
int independent_set_cap(int64_t k);

// |S| + sum over classes of min(cap(k), |class|).
int64_t ub_coloring_basic(int solution_size, int k, const ColoringPartition& partition);

// Coloring bound charging each class member its non-neighbors in S plus its
// rank within the class, then packing the cheapest members into the
// remaining non-edge budget.
int ub1(const Instance& inst, const ColoringPartition& partition);

// min over u in S of d_g(u) + 1 + k; kNoBound when S is empty.
int ub2(const Instance& inst);

// |S| plus the number of candidates, cheapest first by non-neighbors in S,
// whose costs fit in the remaining budget.
int ub3(const Instance& inst);

// Minimum of the enabled bounds. UB1 is only computed when UB2 and UB3 do not
// already bring the bound down to `lb`.
int combined_upper_bound(const Instance& inst, const SolverConfig& config, int lb);

}  // namespace kdc

#endif  // KDC_BOUNDS_HPP_
