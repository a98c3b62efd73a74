#include "kdc/graph.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <functional>
#include <istream>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace kdc {

namespace {

uint64_t pack(int u, int v) {
  return (static_cast<uint64_t>(static_cast<uint32_t>(u)) << 32) |
         static_cast<uint32_t>(v);
}

// Position of `v` in the sorted list `list`, or -1.
int64_t find_sorted(std::span<const int> list, int v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return -1;
  return it - list.begin();
}

}  // namespace

Graph::Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count does not match vertex count");
  }

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::out_of_range("edge endpoint out of range");
    }
    if (u == v) continue;
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());

  std::vector<int64_t> degree(n + 1, 0);
  for (auto [u, v] : normalized) {
    ++degree[u];
    ++degree[v];
  }
  offsets_.assign(n + 1, 0);
  for (int v = 0; v < n; ++v) offsets_[v + 1] = offsets_[v] + degree[v];
  adj_.resize(offsets_[n]);
  std::vector<int64_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Visiting (u, v) in lexicographic order appends to both lists in sorted
  // order: u's list receives its larger neighbors ascending, and v receives
  // its smaller neighbors before any larger ones.
  for (auto [u, v] : normalized) adj_[cursor[v]++] = u;
  for (auto [u, v] : normalized) adj_[cursor[u]++] = v;
  for (int v = 0; v < n; ++v) {
    std::sort(adj_.begin() + offsets_[v], adj_.begin() + offsets_[v + 1]);
  }

  if (n > 0 && n <= kDenseThreshold) {
    words_per_row_ = (n + 63) / 64;
    dense_.assign(static_cast<size_t>(n) * words_per_row_, 0);
    for (auto [u, v] : normalized) {
      dense_[static_cast<size_t>(u) * words_per_row_ + v / 64] |= uint64_t{1} << (v % 64);
      dense_[static_cast<size_t>(v) * words_per_row_ + u / 64] |= uint64_t{1} << (u % 64);
    }
  }
}

bool Graph::has_edge(int u, int v) const {
  assert(u >= 0 && u < n_ && v >= 0 && v < n_);
  if (u == v) return false;
  if (!dense_.empty()) {
    return (dense_[static_cast<size_t>(u) * words_per_row_ + v / 64] >> (v % 64)) & 1;
  }
  if (degree(u) > degree(v)) std::swap(u, v);
  return find_sorted(neighbors(u), v) >= 0;
}

std::vector<Edge> Graph::edge_list() const {
  std::vector<Edge> edges;
  edges.reserve(num_edges());
  for (int u = 0; u < n_; ++u) {
    for (int v : neighbors(u)) {
      if (u < v) edges.emplace_back(u, v);
    }
  }
  return edges;
}

LoadedGraph load_edge_list(std::istream& in) {
  LoadedGraph result;
  std::unordered_map<std::string, int> ids;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::unordered_set<uint64_t> seen;

  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<int>(labels.size()));
    if (inserted) labels.push_back(token);
    return it->second;
  };

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;

    std::istringstream tokens(line);
    std::string a, b, extra;
    if (!(tokens >> a >> b) || (tokens >> extra)) {
      throw ParseError(line_no, "expected exactly two vertex tokens");
    }
    ++result.report.data_lines;
    int u = intern(a);
    int v = intern(b);
    if (u == v) {
      ++result.report.self_loops;
      continue;
    }
    if (!seen.insert(pack(std::min(u, v), std::max(u, v))).second) {
      ++result.report.duplicate_edges;
      continue;
    }
    edges.emplace_back(u, v);
  }
  int n = static_cast<int>(labels.size());
  result.graph = Graph(n, edges, std::move(labels));
  return result;
}

LoadedGraph load_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_edge_list(in);
}

Graph induced_subgraph(const Graph& g, std::span<const int> vertices) {
  const int n = g.num_vertices();
  std::vector<int> local(n, -1);
  std::vector<std::string> labels;
  labels.reserve(vertices.size());
  for (size_t i = 0; i < vertices.size(); ++i) {
    int v = vertices[i];
    if (v < 0 || v >= n) throw std::out_of_range("vertex out of range");
    if (local[v] != -1) throw std::invalid_argument("duplicate vertex");
    local[v] = static_cast<int>(i);
    labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (size_t i = 0; i < vertices.size(); ++i) {
    for (int w : g.neighbors(vertices[i])) {
      if (local[w] > static_cast<int>(i)) edges.emplace_back(static_cast<int>(i), local[w]);
    }
  }
  return Graph(static_cast<int>(vertices.size()), edges, std::move(labels));
}

DegeneracyInfo degeneracy_ordering(const Graph& g) {
  const int n = g.num_vertices();
  DegeneracyInfo info;
  info.order.reserve(n);
  info.rank.assign(n, -1);

  std::vector<int> degree(n);
  using Entry = std::pair<int, int>;  // (degree, vertex)
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> heap;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    heap.emplace(degree[v], v);
  }
  while (!heap.empty()) {
    auto [d, v] = heap.top();
    heap.pop();
    if (info.rank[v] != -1 || d != degree[v]) continue;  // stale
    info.rank[v] = static_cast<int>(info.order.size());
    info.order.push_back(v);
    info.delta = std::max(info.delta, d);
    for (int w : g.neighbors(v)) {
      if (info.rank[w] == -1) heap.emplace(--degree[w], w);
    }
  }
  return info;
}

VertexSet k_core(const Graph& g, int c) {
  const int n = g.num_vertices();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<int> queue;
  for (int v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < c) {
      removed[v] = 1;
      queue.push_back(v);
    }
  }
  for (size_t head = 0; head < queue.size(); ++head) {
    for (int w : g.neighbors(queue[head])) {
      if (!removed[w] && --degree[w] < c) {
        removed[w] = 1;
        queue.push_back(w);
      }
    }
  }
  VertexSet core;
  for (int v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

std::vector<Edge> k_truss(const Graph& g, int t) {
  const int n = g.num_vertices();
  if (t <= 2) return g.edge_list();
  const int need = t - 2;

  // Edge id for every adjacency slot.
  std::vector<int64_t> base(n + 1, 0);
  for (int v = 0; v < n; ++v) base[v + 1] = base[v] + g.degree(v);
  std::vector<int64_t> slot_edge(base[n], -1);
  std::vector<Edge> endpoints;
  endpoints.reserve(g.num_edges());
  for (int u = 0; u < n; ++u) {
    auto nbrs = g.neighbors(u);
    for (size_t i = 0; i < nbrs.size(); ++i) {
      int v = nbrs[i];
      if (v > u) {
        slot_edge[base[u] + i] = static_cast<int64_t>(endpoints.size());
        endpoints.emplace_back(u, v);
      } else {
        slot_edge[base[u] + i] = slot_edge[base[v] + find_sorted(g.neighbors(v), u)];
      }
    }
  }
  const int64_t m = static_cast<int64_t>(endpoints.size());
  auto edge_id = [&](int u, int v) -> int64_t {
    int64_t pos = find_sorted(g.neighbors(u), v);
    return pos < 0 ? -1 : slot_edge[base[u] + pos];
  };

  // Triangle support via degree-oriented listing.
  auto before = [&](int a, int b) {
    return g.degree(a) < g.degree(b) || (g.degree(a) == g.degree(b) && a < b);
  };
  std::vector<int> support(m, 0);
  std::vector<int64_t> mark(n, -1);
  for (int u = 0; u < n; ++u) {
    auto nu = g.neighbors(u);
    for (size_t i = 0; i < nu.size(); ++i) {
      if (before(u, nu[i])) mark[nu[i]] = slot_edge[base[u] + i];
    }
    for (size_t i = 0; i < nu.size(); ++i) {
      int v = nu[i];
      if (!before(u, v)) continue;
      int64_t uv = slot_edge[base[u] + i];
      auto nv = g.neighbors(v);
      for (size_t j = 0; j < nv.size(); ++j) {
        int w = nv[j];
        if (!before(v, w) || mark[w] < 0) continue;
        ++support[uv];
        ++support[slot_edge[base[v] + j]];
        ++support[mark[w]];
      }
    }
    for (int v : nu) mark[v] = -1;
  }

  std::vector<char> alive(m, 1), queued(m, 0);
  std::vector<int64_t> queue;
  for (int64_t e = 0; e < m; ++e) {
    if (support[e] < need) {
      queued[e] = 1;
      queue.push_back(e);
    }
  }
  auto weaken = [&](int64_t e) {
    if (--support[e] < need && !queued[e]) {
      queued[e] = 1;
      queue.push_back(e);
    }
  };
  for (size_t head = 0; head < queue.size(); ++head) {
    int64_t e = queue[head];
    alive[e] = 0;
    auto [x, y] = endpoints[e];
    if (g.degree(x) > g.degree(y)) std::swap(x, y);
    auto nx = g.neighbors(x);
    for (size_t i = 0; i < nx.size(); ++i) {
      int w = nx[i];
      if (w == y) continue;
      int64_t xw = slot_edge[base[x] + i];
      if (!alive[xw]) continue;
      int64_t yw = edge_id(y, w);
      if (yw < 0 || !alive[yw]) continue;
      weaken(xw);
      weaken(yw);
    }
  }

  std::vector<Edge> truss;
  for (int64_t e = 0; e < m; ++e) {
    if (alive[e]) truss.push_back(endpoints[e]);
  }
  std::sort(truss.begin(), truss.end());
  return truss;
}

int64_t count_non_edges(const Graph& g, std::span<const int> s) {
  std::vector<char> in_s(g.num_vertices(), 0);
  for (int v : s) in_s[v] = 1;
  int64_t edges = 0;
  for (int v : s) {
    for (int w : g.neighbors(v)) {
      if (w > v && in_s[w]) ++edges;
    }
  }
  const int64_t size = static_cast<int64_t>(s.size());
  return size * (size - 1) / 2 - edges;
}

}  // namespace kdc
