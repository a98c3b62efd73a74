#ifndef KDC_GRAPH_HPP_
#define KDC_GRAPH_HPP_

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kdc {

using VertexSet = std::vector<int>;
using Edge = std::pair<int, int>;

// Graphs with at most this many vertices carry a dense adjacency bit matrix.
inline constexpr int kDenseThreshold = 4096;

// Immutable simple undirected graph in CSR form. Neighbor lists are strictly
// increasing; `labels` maps internal ids back to the identifiers of the input.
class Graph {
 public:
  Graph() = default;

  // Builds a graph on `n` vertices. Self-loops and repeated edges (in either
  // orientation) are silently dropped. When `labels` is empty, vertex i is
  // labelled with the decimal string of i.
  Graph(int n, std::span<const Edge> edges, std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  int64_t num_edges() const { return static_cast<int64_t>(adj_.size()) / 2; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + offsets_[v], adj_.data() + offsets_[v + 1]};
  }
  int degree(int v) const {
    return static_cast<int>(offsets_[v + 1] - offsets_[v]);
  }
  bool has_edge(int u, int v) const;
  bool has_dense_matrix() const { return !dense_.empty(); }

  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Every edge once, as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edge_list() const;

 private:
  int n_ = 0;
  int words_per_row_ = 0;
  std::vector<int64_t> offsets_{0};
  std::vector<int> adj_;
  std::vector<uint64_t> dense_;
  std::vector<std::string> labels_;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct ParseReport {
  int64_t data_lines = 0;
  int64_t duplicate_edges = 0;
  int64_t self_loops = 0;
};

struct LoadedGraph {
  Graph graph;
  ParseReport report;
};

// Reads a whitespace-separated edge list. Lines starting with '#' or '%' and
// blank lines are ignored; any other line must hold exactly two tokens.
// Vertices are numbered in order of first appearance. Throws ParseError.
LoadedGraph load_edge_list(std::istream& in);
LoadedGraph load_edge_list_file(const std::string& path);

// Subgraph induced by `vertices`; vertex i of the result is vertices[i] of
// `g` and inherits its label. Vertices must be distinct and in range.
Graph induced_subgraph(const Graph& g, std::span<const int> vertices);

struct DegeneracyInfo {
  std::vector<int> order;
  std::vector<int> rank;
  int delta = 0;
};

// Peeling order: repeatedly removes a minimum-degree vertex, smallest id
// first among ties.
DegeneracyInfo degeneracy_ordering(const Graph& g);

// Vertex set of the c-core, ascending.
VertexSet k_core(const Graph& g, int c);

// Edge set of the t-truss (each edge reported once as (u, v), u < v),
// in lexicographic order.
std::vector<Edge> k_truss(const Graph& g, int t);

// |S|(|S|-1)/2 minus the number of edges of g[S].
int64_t count_non_edges(const Graph& g, std::span<const int> s);

}  // namespace kdc

#endif  // KDC_GRAPH_HPP_
