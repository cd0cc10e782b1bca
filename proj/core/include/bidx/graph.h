#ifndef BIDX_GRAPH_H_
#define BIDX_GRAPH_H_

#include <compare>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bidx {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  auto operator<=>(const Edge&) const = default;
};

// Raised for any structurally invalid graph input (bad endpoint, self-loop,
// disconnected input where connectivity is required, ...).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on vertices 0..n-1.
//
// The edge set is kept sorted and deduplicated; neighbor lists are sorted.
// Instances are only created through BuildGraph() (or the helpers built on
// it), so every Graph satisfies the simple-graph invariants.
class Graph {
 public:
  // The single-vertex graph.
  Graph();

  int order() const { return static_cast<int>(adjacency_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[v]; }
  int degree(Vertex v) const {
    return static_cast<int>(adjacency_[v].size());
  }

  bool HasEdge(Vertex a, Vertex b) const;
  int MaxDegree() const;
  bool IsConnected() const;

  // Returns the graph with vertex v renamed to perm[v].
  Graph Relabel(std::span<const Vertex> perm) const;

  // Label-sensitive equality (same n, same edge set).
  bool operator==(const Graph& other) const {
    return order() == other.order() && edges_ == other.edges_;
  }

 private:
  friend Graph BuildGraph(int n, std::span<const std::pair<int, int>> edges);
  Graph(int n, std::vector<Edge> edges);

  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Validates and builds a graph. Duplicate pairs (in either orientation) are
// collapsed. Throws GraphError naming the offending pair on an out-of-range
// endpoint or a self-loop, and on n < 1.
Graph BuildGraph(int n, std::span<const std::pair<int, int>> edges);
Graph BuildGraph(int n, std::initializer_list<std::pair<int, int>> edges);

// Degrees sorted in non-increasing order.
std::vector<int> DegreeSequence(const Graph& g);

// One vertex per edge of g, in the order of g.edges(); two vertices are
// adjacent iff the corresponding edges share an endpoint. An edgeless input
// yields the single-vertex graph, since Graph has no empty value.
Graph LineGraph(const Graph& g);

// Same graph with vertex 0 joined to a copy of `remainder` shifted to 1..n-1.
// `remainder` must have at most n-1 vertices; the rest become leaves.
Graph JoinDominatingVertex(int n, const Graph& remainder);

// Named small graphs used across the library and its tests.
Graph PathGraph(int n);
Graph CycleGraph(int n);
Graph StarGraph(int n);
Graph CompleteGraph(int n);

// Edge-list text format: a leading "n=<int>" line followed by one "u v" pair
// per line. Blank lines and lines starting with '#' are ignored.
Graph ParseEdgeList(const std::string& text);
std::string FormatEdgeList(const Graph& g);

}  // namespace bidx

#endif  // BIDX_GRAPH_H_
