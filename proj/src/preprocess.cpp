#include "kdc/preprocess.hpp"

#include <algorithm>
#include <stdexcept>

namespace kdc {

VertexSet degen_suffix(const Graph& g, int k, std::span<const int> order) {
  std::vector<char> in_suffix(g.num_vertices(), 0);
  int64_t size = 0;
  int64_t edges = 0;
  size_t first = order.size();
  while (first > 0) {
    const int v = order[first - 1];
    int64_t gained = 0;
    for (int w : g.neighbors(v)) gained += in_suffix[w];
    const int64_t non_edges = (size + 1) * size / 2 - (edges + gained);
    if (non_edges > k) break;
    in_suffix[v] = 1;
    edges += gained;
    ++size;
    --first;
  }
  VertexSet suffix(order.begin() + first, order.end());
  std::sort(suffix.begin(), suffix.end());
  return suffix;
}

VertexSet degen(const Graph& g, int k) {
  return degen_suffix(g, k, degeneracy_ordering(g).order);
}

VertexSet degen_opt(const Graph& g, int k) {
  const int n = g.num_vertices();
  const DegeneracyInfo info = degeneracy_ordering(g);
  VertexSet best = degen_suffix(g, k, info.order);

  // Higher-ranked neighbors of every vertex, CSR.
  std::vector<int64_t> begin(n + 1, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) begin[v + 1] += info.rank[w] > info.rank[v];
  }
  for (int v = 0; v < n; ++v) begin[v + 1] += begin[v];
  std::vector<int> higher(begin[n]);
  for (int v = 0; v < n; ++v) {
    int64_t at = begin[v];
    for (int w : g.neighbors(v)) {
      if (info.rank[w] > info.rank[v]) higher[at++] = w;
    }
  }
  auto higher_of = [&](int v) {
    return std::span<const int>(higher.data() + begin[v], higher.data() + begin[v + 1]);
  };

  std::vector<int> local(n, -1);
  std::vector<Edge> edges;
  for (int u : info.order) {
    auto members = higher_of(u);
    if (members.size() + 1 <= best.size()) continue;
    for (size_t i = 0; i < members.size(); ++i) local[members[i]] = static_cast<int>(i);
    edges.clear();
    for (size_t i = 0; i < members.size(); ++i) {
      for (int x : higher_of(members[i])) {
        if (local[x] >= 0) edges.emplace_back(static_cast<int>(i), local[x]);
      }
    }
    const Graph sub(static_cast<int>(members.size()), edges);
    for (int w : members) local[w] = -1;

    const VertexSet inner = degen(sub, k);
    if (inner.size() + 1 > best.size()) {
      best.clear();
      best.push_back(u);
      for (int i : inner) best.push_back(members[i]);
      std::sort(best.begin(), best.end());
      // u is adjacent to all of its higher-ranked neighbors, so adding it
      // introduces no non-edge.
      if (count_non_edges(g, best) > k) {
        throw std::logic_error("degen_opt produced an invalid solution");
      }
    }
  }
  return best;
}

ReducedGraph global_reduce(const Graph& g, int lb, int k, bool use_truss) {
  const int core_threshold = lb - k;
  const int truss_threshold = lb - k + 1;

  std::vector<int> keep;
  if (core_threshold > 0) {
    keep = k_core(g, core_threshold);
  } else {
    keep.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) keep[v] = v;
  }
  Graph current = induced_subgraph(g, keep);
  std::vector<int> to_original = keep;

  if (use_truss && truss_threshold > 2) {
    const std::vector<Edge> truss = k_truss(current, truss_threshold);
    const Graph thinned(current.num_vertices(), truss, current.labels());
    const VertexSet survivors = k_core(thinned, core_threshold);
    current = induced_subgraph(thinned, survivors);
    std::vector<int> composed;
    composed.reserve(survivors.size());
    for (int v : survivors) composed.push_back(to_original[v]);
    to_original = std::move(composed);
  }
  return {std::move(current), std::move(to_original)};
}

}  // namespace kdc
