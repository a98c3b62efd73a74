#include "kdc/instance.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace kdc {

Instance::Instance(const Graph& g, int k)
    : graph_(&g),
      k_(k),
      ordering_(degeneracy_ordering(g)),
      status_(g.num_vertices(), VertexStatus::kCandidate),
      cand_(g.num_vertices()),
      pos_(g.num_vertices()),
      cand_count_(g.num_vertices()),
      adj_in_s_(g.num_vertices(), 0),
      degree_(g.num_vertices()),
      live_edges_(g.num_edges()) {
  if (k < 0) throw std::invalid_argument("k must be non-negative");
  for (int v = 0; v < g.num_vertices(); ++v) {
    cand_[v] = v;
    pos_[v] = v;
    degree_[v] = g.degree(v);
  }
  workspace_.stamp.assign(g.num_vertices(), 0);
}

std::vector<int> Instance::live_vertices() const {
  std::vector<int> live(s_.begin(), s_.end());
  live.insert(live.end(), cand_.begin(), cand_.begin() + cand_count_);
  std::sort(live.begin(), live.end());
  return live;
}

int Instance::take_out(int v) {
  const int p = pos_[v];
  const int last = cand_count_ - 1;
  const int w = cand_[last];
  cand_[p] = w;
  pos_[w] = p;
  cand_[last] = v;
  pos_[v] = last;
  --cand_count_;
  return p;
}

void Instance::put_back(int v, int old_pos) {
  assert(cand_[cand_count_] == v);
  ++cand_count_;
  const int w = cand_[old_pos];
  cand_[old_pos] = v;
  pos_[v] = old_pos;
  cand_[cand_count_ - 1] = w;
  pos_[w] = cand_count_ - 1;
}

void Instance::add_to_solution(int v) {
  assert(is_candidate(v));
  s_non_edges_ += non_neighbors_in_solution(v);
  assert(s_non_edges_ <= k_);
  for (int w : graph_->neighbors(v)) ++adj_in_s_[w];
  const int p = take_out(v);
  status_[v] = VertexStatus::kInSolution;
  s_.push_back(v);
  trail_.push_back({v, p, Op::kAdd});
}

void Instance::remove(int v) {
  assert(is_candidate(v));
  for (int w : graph_->neighbors(v)) {
    if (is_live(w)) --degree_[w];
  }
  live_edges_ -= degree_[v];
  const int p = take_out(v);
  status_[v] = VertexStatus::kRemoved;
  trail_.push_back({v, p, Op::kRemove});
}

void Instance::rollback(size_t mark) {
  while (trail_.size() > mark) {
    const TrailEntry entry = trail_.back();
    trail_.pop_back();
    const int v = entry.vertex;
    if (entry.op == Op::kAdd) {
      s_.pop_back();
      status_[v] = VertexStatus::kCandidate;
      for (int w : graph_->neighbors(v)) --adj_in_s_[w];
      s_non_edges_ -= non_neighbors_in_solution(v);
    } else {
      status_[v] = VertexStatus::kCandidate;
      for (int w : graph_->neighbors(v)) {
        if (is_live(w) && w != v) ++degree_[w];
      }
      live_edges_ += degree_[v];
    }
    put_back(v, entry.old_pos);
  }
}

uint32_t Instance::next_stamp() const {
  if (++workspace_.current == 0) {
    std::fill(workspace_.stamp.begin(), workspace_.stamp.end(), 0);
    workspace_.current = 1;
  }
  return workspace_.current;
}

bool Instance::check_consistency() const {
  const int n = graph_->num_vertices();
  int cand = 0;
  int in_s = 0;
  for (int v = 0; v < n; ++v) {
    if (status_[v] == VertexStatus::kCandidate) ++cand;
    if (status_[v] == VertexStatus::kInSolution) ++in_s;
  }
  if (cand != cand_count_ || in_s != solution_size()) return false;
  for (int i = 0; i < n; ++i) {
    if (pos_[cand_[i]] != i) return false;
    if ((i < cand_count_) != is_candidate(cand_[i])) return false;
  }
  for (int v : s_) {
    if (!in_solution(v)) return false;
  }

  int64_t edges = 0;
  for (int v = 0; v < n; ++v) {
    int adj_s = 0;
    int deg = 0;
    for (int w : graph_->neighbors(v)) {
      if (in_solution(w)) ++adj_s;
      if (is_live(w)) ++deg;
    }
    if (adj_s != adj_in_s_[v]) return false;
    if (is_live(v)) {
      if (deg != degree_[v]) return false;
      edges += deg;
    }
  }
  if (edges / 2 != live_edges_) return false;
  return count_non_edges(*graph_, s_) == s_non_edges_ && s_non_edges_ <= k_;
}

bool Instance::same_state(const Instance& other) const {
  if (graph_ != other.graph_ || k_ != other.k_) return false;
  if (status_ != other.status_ || cand_ != other.cand_ || pos_ != other.pos_ ||
      cand_count_ != other.cand_count_ || s_ != other.s_ ||
      s_non_edges_ != other.s_non_edges_ || adj_in_s_ != other.adj_in_s_ ||
      live_edges_ != other.live_edges_) {
    return false;
  }
  for (size_t v = 0; v < status_.size(); ++v) {
    if (is_live(static_cast<int>(v)) && degree_[v] != other.degree_[v]) return false;
  }
  return true;
}

}  // namespace kdc
