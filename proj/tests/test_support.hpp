#ifndef KDC_TESTS_TEST_SUPPORT_HPP_
#define KDC_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kdc/graph.hpp"
#include "kdc/instance.hpp"
#include "kdc/verify.hpp"

namespace kdc::testing {

// Edge order chosen so that first appearance gives v1 = 0, v2 = 1, ...
inline const char* kTwelveVertexEdgeList =
    "# 12 vertices, 26 edges\n"
    "v1 v2\nv1 v3\nv1 v4\nv2 v5\nv1 v6\nv1 v7\n"
    "v8 v9\nv8 v10\nv8 v11\nv8 v12\n"
    "v2 v3\nv2 v6\nv3 v4\nv3 v5\nv3 v6\nv4 v5\nv4 v6\nv5 v6\nv5 v7\nv6 v7\n"
    "v9 v10\nv9 v11\nv9 v12\nv10 v11\nv10 v12\nv11 v12\n";

inline const char* kSevenVertexEdgeList =
    "v1 v2\nv1 v3\nv1 v4\nv2 v5\nv3 v6\nv4 v7\n"
    "v2 v3\nv3 v4\nv5 v6\nv5 v7\nv6 v7\n";

inline Graph parse(const std::string& text) {
  std::istringstream in(text);
  return load_edge_list(in).graph;
}

inline Graph twelve_vertex() { return parse(kTwelveVertexEdgeList); }
inline Graph seven_vertex() { return parse(kSevenVertexEdgeList); }

// Internal id of the vertex labelled `label`.
inline int vid(const Graph& g, const std::string& label) {
  const auto& labels = g.labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw std::invalid_argument("no vertex " + label);
  return static_cast<int>(it - labels.begin());
}

inline VertexSet vids(const Graph& g, std::initializer_list<const char*> labels) {
  VertexSet s;
  for (const char* l : labels) s.push_back(vid(g, l));
  std::sort(s.begin(), s.end());
  return s;
}

inline Graph complete_graph(int n) {
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

inline Graph empty_graph(int n) { return Graph(n, std::span<const Edge>{}); }

// s1, s2 isolated, then the complete 3-partite graph on
// {a1,a2,a3} x {b1,b2,b3} x {c1,c2,c3}.
inline Graph coloring_graph() {
  std::vector<std::string> labels = {"s1", "s2", "a1", "a2", "a3", "b1",
                                     "b2", "b3", "c1", "c2", "c3"};
  std::vector<Edge> edges;
  for (int u = 2; u < 11; ++u) {
    for (int v = u + 1; v < 11; ++v) {
      if ((u - 2) / 3 != (v - 2) / 3) edges.emplace_back(u, v);
    }
  }
  return Graph(11, edges, labels);
}

// Nine vertices: v1 universal; g1 = {v2..v5} a 4-cycle v2-v3-v4-v5;
// g2 = {v6..v9} with edges v6-v7 and v8-v9; every g1 vertex adjacent to
// every g2 vertex.
inline Graph absorb_gadget() {
  std::vector<std::string> labels;
  for (int i = 1; i <= 9; ++i) labels.push_back("v" + std::to_string(i));
  std::vector<Edge> edges;
  for (int v = 1; v < 9; ++v) edges.emplace_back(0, v);
  edges.insert(edges.end(), {{1, 2}, {2, 3}, {3, 4}, {4, 1}, {5, 6}, {7, 8}});
  for (int a = 1; a <= 4; ++a) {
    for (int b = 5; b <= 8; ++b) edges.emplace_back(a, b);
  }
  return Graph(9, edges, labels);
}

inline Graph random_graph(int n, double density, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(density);
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Checks the defining property of a degeneracy ordering directly.
inline bool is_degeneracy_ordering(const Graph& g, const std::vector<int>& order) {
  const int n = g.num_vertices();
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> remaining(n, 1);
  for (int i = 0; i < n; ++i) {
    auto degree_in_rest = [&](int v) {
      int d = 0;
      for (int w : g.neighbors(v)) d += remaining[w];
      return d;
    };
    int min_degree = n;
    for (int v = 0; v < n; ++v) {
      if (remaining[v]) min_degree = std::min(min_degree, degree_in_rest(v));
    }
    if (!remaining[order[i]] || degree_in_rest(order[i]) != min_degree) return false;
    remaining[order[i]] = 0;
  }
  return true;
}

// Builds an instance with a random valid S (at most k non-edges) and a few
// random removals, without running any reduction.
inline void randomize_instance(Instance& inst, std::mt19937_64& rng, int max_s,
                               double remove_probability) {
  const int n = inst.graph().num_vertices();
  std::vector<int> order(n);
  for (int v = 0; v < n; ++v) order[v] = v;
  std::shuffle(order.begin(), order.end(), rng);
  std::uniform_int_distribution<int> pick_s(0, max_s);
  std::bernoulli_distribution drop(remove_probability);
  int target = pick_s(rng);
  for (int v : order) {
    if (inst.solution_size() >= target) break;
    if (inst.non_neighbors_in_solution(v) <= inst.budget()) inst.add_to_solution(v);
  }
  for (int v : order) {
    if (inst.is_candidate(v) && drop(rng)) inst.remove(v);
  }
}

// Oracle optimum of an instance: largest k-defective C, S ⊆ C ⊆ V(g).
inline int instance_optimum(const Instance& inst) {
  std::vector<int> s(inst.solution().begin(), inst.solution().end());
  std::vector<int> live = inst.live_vertices();
  auto r = brute_force_extend(inst.graph(), inst.k(), s, live);
  return r.feasible ? static_cast<int>(r.best.size()) : -1;
}

}  // namespace kdc::testing

#endif  // KDC_TESTS_TEST_SUPPORT_HPP_
