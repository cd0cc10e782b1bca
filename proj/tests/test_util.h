#ifndef BIDX_TESTS_TEST_UTIL_H_
#define BIDX_TESTS_TEST_UTIL_H_

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bidx/graph.h"

namespace bidx::testing {

// Random spanning tree (random Pruefer-free attachment) plus extra random
// edges; always connected.
inline Graph RandomConnectedGraph(std::mt19937_64& rng, int n, int extra) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> pick(0, i - 1);
    edges.emplace_back(order[pick(rng)], order[i]);
  }
  const int max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<int> vertex(0, n - 1);
  for (int added = 0; added < extra && static_cast<int>(edges.size()) < max_edges;) {
    const int a = vertex(rng);
    const int b = vertex(rng);
    if (a == b) continue;
    edges.emplace_back(a, b);
    ++added;
  }
  return BuildGraph(n, edges);
}

inline std::vector<Vertex> RandomPermutation(std::mt19937_64& rng, int n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// Isomorphism-class key by trying every permutation: the smallest
// upper-triangle bitmask. Only for tiny n.
inline std::uint64_t BruteKey(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~0ULL;
  do {
    std::uint64_t key = 0;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if (!((mask >> b) & 1)) continue;
      int x = perm[pairs[b].first];
      int y = perm[pairs[b].second];
      if (x > y) std::swap(x, y);
      key |= 1ULL << (y * (y - 1) / 2 + x);
    }
    best = std::min(best, key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline bool MaskConnected(int n, std::uint64_t mask) {
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int b = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++b) {
      if ((mask >> b) & 1) parent[find(i)] = find(j);
    }
  }
  for (int v = 1; v < n; ++v) {
    if (find(v) != find(0)) return false;
  }
  return true;
}

// Isomorphism classes of connected graphs on n labeled vertices, counted by
// exhaustive labeled enumeration; independent of the library's labeler.
inline int BruteConnectedClasses(int n) {
  const int bits = n * (n - 1) / 2;
  std::set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    if (MaskConnected(n, mask)) keys.insert(BruteKey(n, mask));
  }
  return static_cast<int>(keys.size());
}

// Classes of k-edge graphs, isolated vertices ignored (k <= 3).
inline int BruteEdgeGraphClasses(int k) {
  const int n = 2 * k;
  const int bits = n * (n - 1) / 2;
  std::set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (1ULL << bits); ++mask) {
    if (__builtin_popcountll(mask) != k) continue;
    keys.insert(BruteKey(n, mask));
  }
  return static_cast<int>(keys.size());
}

}  // namespace bidx::testing

#endif  // BIDX_TESTS_TEST_UTIL_H_
