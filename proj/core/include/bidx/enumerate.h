#ifndef BIDX_ENUMERATE_H_
#define BIDX_ENUMERATE_H_

#include <cstdint>
#include <map>
#include <mutex>
#include <utility>
#include <vector>

#include "bidx/canonical.h"
#include "bidx/graph.h"
#include "bidx/indices.h"

namespace bidx {

// Default largest n for full (n, m) sweeps.
inline constexpr int kDefaultSweepBound = 9;

// One isomorphism class: its canonical form and canonically labeled graph.
struct GraphClass {
  CanonicalForm form;
  DenseGraph graph;
};

// Memoized isomorph-free enumeration.
//
// Connected (n, m) classes are grown from trees on n vertices (themselves
// grown leaf by leaf from trees on n - 1 vertices) by adding one edge at a
// time; every candidate is canonically labeled and deduplicated by form.
// All-graphs levels (isolated vertices allowed) grow from the empty graph
// the same way. Each level is sorted by canonical form, so output order does
// not depend on the worker count. Expansions of one level run in parallel
// on private sets that are merged afterwards.
//
// Safe to share between threads; levels are built under a lock.
class GraphCatalog {
 public:
  // workers <= 0 selects the hardware concurrency.
  explicit GraphCatalog(int workers = 1);

  // Connected classes with n vertices and m edges; empty when infeasible.
  // Throws GraphError when n exceeds kMaxCanonicalOrder.
  const std::vector<GraphClass>& Connected(int n, int m);

  // All classes (connected or not) with n vertices and m edges.
  const std::vector<GraphClass>& AllGraphs(int n, int m);

  int workers() const { return workers_; }

 private:
  const std::vector<GraphClass>& ConnectedLocked(int n, int m);
  const std::vector<GraphClass>& TreesLocked(int n);
  const std::vector<GraphClass>& AllGraphsLocked(int n, int m);

  int workers_;
  std::mutex mu_;
  std::map<std::pair<int, int>, std::vector<GraphClass>> connected_;
  std::map<std::pair<int, int>, std::vector<GraphClass>> all_;
};

// One representative per class of connected graphs with n vertices and m
// edges, in ascending canonical-form order. Empty when n - 1 <= m <=
// n(n-1)/2 fails.
std::vector<Graph> EnumerateConnected(int n, int m, int workers = 1);

// k-edge graphs on min(n - 1, 2k) vertices, one per class, in canonical
// order. These are exactly the possible remainders of a dominating-vertex
// graph on n vertices.
std::vector<Graph> DominatingRemainders(int n, int k,
                                        GraphCatalog* catalog = nullptr);

// Vertex 0 joined to each remainder above (extra vertices become leaves).
// Isomorphism classes of the joins correspond one to one with those of the
// remainders.
std::vector<Graph> EnumerateDominating(int n, int k,
                                       GraphCatalog* catalog = nullptr);

struct ExtremalResult {
  int n = 0;
  int m = 0;
  IndexSpec spec = IndexSpec::M1();
  Direction direction = Direction::kMax;
  IndexValue optimum;
  // Sorted; every optimizer ties the optimum under CompareValues.
  std::vector<CanonicalForm> optimizers;
  std::int64_t total_enumerated = 0;
};

// Brute force over every connected (n, m) class. Throws GraphError for an
// infeasible (n, m) or n above kMaxCanonicalOrder. A null catalog uses a
// private one.
ExtremalResult ExtremalSearch(int n, int m, const IndexSpec& spec,
                              Direction direction,
                              GraphCatalog* catalog = nullptr);

// The same search restricted to graphs with a vertex of degree n - 1.
ExtremalResult ExtremalSearchDominating(int n, int m, const IndexSpec& spec,
                                        Direction direction,
                                        GraphCatalog* catalog = nullptr);

}  // namespace bidx

#endif  // BIDX_ENUMERATE_H_
