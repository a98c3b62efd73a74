#ifndef KDC_INSTANCE_HPP_
#define KDC_INSTANCE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "kdc/graph.hpp"

namespace kdc {

enum class VertexStatus : uint8_t { kCandidate, kInSolution, kRemoved };

// Branch-and-bound state (g, S) over an immutable base graph. The live graph
// g is the base graph minus removed vertices; S is a stack of vertices in
// insertion order. Every mutation is recorded on an undo trail so a subtree
// can be unwound with rollback(mark()).
//
// Maintained incrementally, each in O(deg) per mutation:
//   - |E-bar(S)|, the number of non-edges inside S;
//   - for every vertex, its number of neighbors in S;
//   - for every vertex, its degree inside the live graph;
//   - the number of live edges.
class Instance {
 public:
  Instance(const Graph& g, int k);

  const Graph& graph() const { return *graph_; }
  int k() const { return k_; }
  const DegeneracyInfo& ordering() const { return ordering_; }

  VertexStatus status(int v) const { return status_[v]; }
  bool is_candidate(int v) const { return status_[v] == VertexStatus::kCandidate; }
  bool in_solution(int v) const { return status_[v] == VertexStatus::kInSolution; }
  bool is_live(int v) const { return status_[v] != VertexStatus::kRemoved; }

  // Unordered; invalidated by any mutation.
  std::span<const int> candidates() const { return {cand_.data(), static_cast<size_t>(cand_count_)}; }
  std::span<const int> solution() const { return s_; }

  int candidate_count() const { return cand_count_; }
  int solution_size() const { return static_cast<int>(s_.size()); }
  int live_count() const { return cand_count_ + solution_size(); }

  int64_t solution_non_edges() const { return s_non_edges_; }
  int64_t budget() const { return k_ - s_non_edges_; }
  int non_neighbors_in_solution(int v) const {
    return solution_size() - adj_in_s_[v] - (in_solution(v) ? 1 : 0);
  }
  int live_degree(int v) const { return degree_[v]; }
  int live_non_neighbors(int v) const { return live_count() - 1 - degree_[v]; }
  int64_t live_edges() const { return live_edges_; }
  int64_t live_non_edges() const {
    const int64_t live = live_count();
    return live * (live - 1) / 2 - live_edges_;
  }

  std::vector<int> live_vertices() const;

  void add_to_solution(int v);
  void remove(int v);

  size_t mark() const { return trail_.size(); }
  void rollback(size_t mark);

  // Recounts every maintained quantity from the status flags.
  bool check_consistency() const;

  // Compares status, S, candidate layout and counters; ignores the trail.
  bool same_state(const Instance& other) const;

  // Scratch stamps indexed by vertex, shared by the reduction and bound
  // routines. next_stamp() returns a value not present in `stamp`.
  struct Workspace {
    std::vector<uint32_t> stamp;
    uint32_t current = 0;
    std::vector<int> buffer;
    std::vector<int> buffer2;
  };
  Workspace& workspace() const { return workspace_; }
  uint32_t next_stamp() const;

 private:
  enum class Op : uint8_t { kAdd, kRemove };
  struct TrailEntry {
    int vertex;
    int old_pos;
    Op op;
  };

  int take_out(int v);
  void put_back(int v, int old_pos);

  const Graph* graph_;
  int k_;
  DegeneracyInfo ordering_;
  std::vector<VertexStatus> status_;
  std::vector<int> cand_;
  std::vector<int> pos_;
  int cand_count_ = 0;
  std::vector<int> s_;
  int64_t s_non_edges_ = 0;
  std::vector<int> adj_in_s_;
  std::vector<int> degree_;
  int64_t live_edges_ = 0;
  std::vector<TrailEntry> trail_;
  mutable Workspace workspace_;
};

}  // namespace kdc

#endif  // KDC_INSTANCE_HPP_
