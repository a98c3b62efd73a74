#ifndef KDC_PREPROCESS_HPP_
#define KDC_PREPROCESS_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "kdc/graph.hpp"

namespace kdc {

struct PreprocessReport {
  VertexSet initial_clique;
  int initial_size = 0;
  int reduced_n = 0;
  int64_t reduced_m = 0;
  double elapsed_seconds = 0;
};

// Longest suffix of `order` whose induced subgraph misses at most k edges.
VertexSet degen_suffix(const Graph& g, int k, std::span<const int> order);

// Degen: degen_suffix over the degeneracy ordering of g.
VertexSet degen(const Graph& g, int k);

// Degen-opt: the best of degen(g) and, for every vertex u in degeneracy
// order, u plus degen() of the subgraph induced by u's higher-ranked
// neighbors. Earlier u wins ties.
VertexSet degen_opt(const Graph& g, int k);

// Graph left after peeling with the incumbent size lb: (lb-k)-core, then the
// (lb-k+1)-truss when `use_truss`, then the core again.
// Vertex i of `graph` is vertex to_original[i] of the input.
struct ReducedGraph {
  Graph graph;
  std::vector<int> to_original;
};
ReducedGraph global_reduce(const Graph& g, int lb, int k, bool use_truss = true);

}  // namespace kdc

#endif  // KDC_PREPROCESS_HPP_
