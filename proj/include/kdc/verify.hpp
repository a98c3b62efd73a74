#ifndef KDC_VERIFY_HPP_
#define KDC_VERIFY_HPP_

#include <cstdint>
#include <span>
#include <stdexcept>

#include "kdc/graph.hpp"

namespace kdc {

// Ground truth used by the tests. Nothing here shares code with the search:
// the oracles enumerate include/exclude decisions under the definition alone.

bool is_k_defective(const Graph& g, std::span<const int> s, int k);

struct OracleBudget {
  int max_n = 30;
  int64_t max_nodes = int64_t{1} << 34;
};

class OracleBudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Maximum k-defective clique by exhaustive enumeration. Among maximum sets
// returns the first found when vertices are decided in id order, include
// before exclude.
VertexSet brute_force_max(const Graph& g, int k, const OracleBudget& budget = {});

// Largest k-defective clique C with required ⊆ C ⊆ required ∪ allowed.
// Returns an empty set with `feasible == false` when `required` itself is
// not k-defective.
struct ExtendResult {
  VertexSet best;
  bool feasible = false;
};
ExtendResult brute_force_extend(const Graph& g, int k, std::span<const int> required,
                                std::span<const int> allowed, const OracleBudget& budget = {});

// Maximum clique by exhaustive enumeration over neighborhoods.
VertexSet brute_force_max_clique(const Graph& g, const OracleBudget& budget = {});

// Largest real root of x^{k+3} - 2x^{k+2} + 1, the base of the search tree
// bound; found by bisection on x^{k+2} - (x^{k+1} + ... + x + 1) over (1, 2).
double gamma_k(int k);

}  // namespace kdc

#endif  // KDC_VERIFY_HPP_
