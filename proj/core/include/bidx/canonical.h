#ifndef BIDX_CANONICAL_H_
#define BIDX_CANONICAL_H_

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "bidx/graph.h"

namespace bidx {

// Largest vertex count accepted by the canonical labeler.
inline constexpr int kMaxCanonicalOrder = 12;

// Adjacency-bitmask graph for the enumeration hot path (n <= 16).
struct DenseGraph {
  int n = 0;
  std::array<std::uint16_t, 16> adj{};

  bool HasEdge(int a, int b) const { return (adj[a] >> b) & 1U; }
  void AddEdge(int a, int b) {
    adj[a] |= static_cast<std::uint16_t>(1U << b);
    adj[b] |= static_cast<std::uint16_t>(1U << a);
  }
  void RemoveEdge(int a, int b) {
    adj[a] &= static_cast<std::uint16_t>(~(1U << b));
    adj[b] &= static_cast<std::uint16_t>(~(1U << a));
  }
  int Degree(int v) const;
  int EdgeCount() const;
};

DenseGraph ToDense(const Graph& g);
Graph ToGraph(const DenseGraph& g);

// graph6 text of the canonically relabeled graph. Equal iff isomorphic.
struct CanonicalForm {
  std::string graph6;

  auto operator<=>(const CanonicalForm&) const = default;
};

struct CanonicalLabeling {
  CanonicalForm form;
  // labeling[i] is the original vertex placed at canonical position i.
  std::vector<int> labeling;
};

// Individualization-refinement canonical labeling: equitable partition
// refinement (seeded by degree), then a search over individualized vertices
// that keeps the lexicographically smallest upper-triangle adjacency string.
// Automorphisms discovered along the way prune equivalent branches.
// Throws GraphError when n exceeds kMaxCanonicalOrder.
CanonicalLabeling CanonicalLabel(const DenseGraph& g);
CanonicalForm Canonicalize(const DenseGraph& g);
CanonicalForm Canonicalize(const Graph& g);

// The canonical representative itself (vertex i = labeling[i]).
Graph CanonicalGraph(const Graph& g);

bool AreIsomorphic(const Graph& a, const Graph& b);

}  // namespace bidx

#endif  // BIDX_CANONICAL_H_
