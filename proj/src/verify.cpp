#include "kdc/verify.hpp"

#include <bit>
#include <vector>

namespace kdc {

namespace {

using Mask = uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g, const OracleBudget& budget) {
  const int n = g.num_vertices();
  if (n > budget.max_n || n > 63) {
    throw OracleBudgetExceeded("graph has " + std::to_string(n) + " vertices, oracle cap is " +
                               std::to_string(std::min(budget.max_n, 63)));
  }
  std::vector<Mask> adj(n, 0);
  for (int v = 0; v < n; ++v) {
    for (int w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  }
  return adj;
}

class Enumerator {
 public:
  Enumerator(std::vector<Mask> adj, std::vector<int> order, int k, int64_t max_nodes)
      : adj_(std::move(adj)), order_(std::move(order)), k_(k), max_nodes_(max_nodes) {}

  Mask run(Mask start, int64_t start_non_edges) {
    best_ = start;
    recurse(0, start, start_non_edges);
    return best_;
  }

 private:
  void recurse(size_t i, Mask chosen, int64_t non_edges) {
    if (++nodes_ > max_nodes_) throw OracleBudgetExceeded("oracle node budget exhausted");
    if (i == order_.size()) {
      if (std::popcount(chosen) > std::popcount(best_)) best_ = chosen;
      return;
    }
    const int v = order_[i];
    const int64_t added = std::popcount(chosen & ~adj_[v]);
    if (non_edges + added <= k_) recurse(i + 1, chosen | (Mask{1} << v), non_edges + added);
    recurse(i + 1, chosen, non_edges);
  }

  std::vector<Mask> adj_;
  std::vector<int> order_;
  int64_t k_;
  int64_t max_nodes_;
  int64_t nodes_ = 0;
  Mask best_ = 0;
};

VertexSet to_set(Mask mask) {
  VertexSet s;
  for (int v = 0; mask; ++v, mask >>= 1) {
    if (mask & 1) s.push_back(v);
  }
  return s;
}

}  // namespace

bool is_k_defective(const Graph& g, std::span<const int> s, int k) {
  return count_non_edges(g, s) <= k;
}

VertexSet brute_force_max(const Graph& g, int k, const OracleBudget& budget) {
  std::vector<int> order(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) order[v] = v;
  Enumerator e(adjacency_masks(g, budget), std::move(order), k, budget.max_nodes);
  return to_set(e.run(0, 0));
}

ExtendResult brute_force_extend(const Graph& g, int k, std::span<const int> required,
                                std::span<const int> allowed, const OracleBudget& budget) {
  auto adj = adjacency_masks(g, budget);
  Mask start = 0;
  for (int v : required) start |= Mask{1} << v;
  int64_t non_edges = 0;
  for (int v : required) non_edges += std::popcount(start & ~adj[v] & ~(Mask{1} << v));
  non_edges /= 2;
  if (non_edges > k) return {};
  std::vector<int> order;
  for (int v : allowed) {
    if (!((start >> v) & 1)) order.push_back(v);
  }
  Enumerator e(std::move(adj), std::move(order), k, budget.max_nodes);
  return {to_set(e.run(start, non_edges)), true};
}

VertexSet brute_force_max_clique(const Graph& g, const OracleBudget& budget) {
  const auto adj = adjacency_masks(g, budget);
  const int n = g.num_vertices();
  Mask best = 0;
  int64_t nodes = 0;
  // Every clique is reached by adding vertices in increasing id order while
  // keeping `extendable` = common neighbors above the last added vertex.
  auto grow = [&](auto&& self, Mask clique, Mask extendable) -> void {
    if (++nodes > budget.max_nodes) throw OracleBudgetExceeded("oracle node budget exhausted");
    if (std::popcount(clique) > std::popcount(best)) best = clique;
    while (extendable) {
      const int v = std::countr_zero(extendable);
      extendable &= extendable - 1;
      self(self, clique | (Mask{1} << v), extendable & adj[v]);
    }
  };
  grow(grow, 0, n == 64 ? ~Mask{0} : (Mask{1} << n) - 1);
  return to_set(best);
}

double gamma_k(int k) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  // p(x) = x^{k+2} - sum_{i=0}^{k+1} x^i; p(1) = -(k+1) < 0, p(2) = 1 > 0.
  auto p = [k](double x) {
    double value = 1.0;
    for (int i = 0; i < k + 2; ++i) value = value * x - 1.0;
    return value;
  };
  double lo = 1.0;
  double hi = 2.0;
  while (hi - lo > 1e-13) {
    const double mid = 0.5 * (lo + hi);
    (p(mid) < 0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace kdc
