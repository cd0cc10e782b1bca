#include "bidx/canonical.h"

#include <algorithm>
#include <bit>
#include <numeric>
#include <utility>

namespace bidx {

int DenseGraph::Degree(int v) const { return std::popcount(adj[v]); }

int DenseGraph::EdgeCount() const {
  int total = 0;
  for (int v = 0; v < n; ++v) total += std::popcount(adj[v]);
  return total / 2;
}

DenseGraph ToDense(const Graph& g) {
  if (g.order() > 16) {
    throw GraphError("dense representation supports at most 16 vertices, got " +
                     std::to_string(g.order()));
  }
  DenseGraph d;
  d.n = g.order();
  for (const Edge& e : g.edges()) d.AddEdge(e.u, e.v);
  return d;
}

Graph ToGraph(const DenseGraph& g) {
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      if (g.HasEdge(i, j)) edges.emplace_back(i, j);
    }
  }
  return BuildGraph(g.n, edges);
}

namespace {

using Cells = std::vector<std::vector<int>>;
using Perm = std::array<int, 16>;

// Splits cells until every cell is equitable with respect to every other
// cell. Splitting depends only on cell positions and neighbor counts, so the
// result commutes with relabeling.
void Refine(const DenseGraph& g, Cells& cells) {
restart:
  for (std::size_t w = 0; w < cells.size(); ++w) {
    std::uint16_t mask = 0;
    for (int v : cells[w]) mask |= static_cast<std::uint16_t>(1U << v);
    for (std::size_t x = 0; x < cells.size(); ++x) {
      auto& cell = cells[x];
      if (cell.size() < 2) continue;
      std::vector<std::pair<int, int>> keyed;
      keyed.reserve(cell.size());
      for (int v : cell) keyed.emplace_back(std::popcount(static_cast<unsigned>(g.adj[v] & mask)), v);
      const bool uniform =
          std::all_of(keyed.begin(), keyed.end(),
                      [&](const auto& k) { return k.first == keyed[0].first; });
      if (uniform) continue;
      std::sort(keyed.begin(), keyed.end());
      Cells pieces;
      for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[i].second);
      }
      cells.erase(cells.begin() + static_cast<std::ptrdiff_t>(x));
      cells.insert(cells.begin() + static_cast<std::ptrdiff_t>(x),
                   pieces.begin(), pieces.end());
      goto restart;
    }
  }
}

std::string LeafCode(const DenseGraph& g, const std::vector<int>& lab) {
  std::string code;
  code.push_back(static_cast<char>(63 + g.n));
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < g.n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(lab[i], lab[j]) ? 1 : 0);
      if (++filled == 6) {
        code.push_back(static_cast<char>(63 + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) code.push_back(static_cast<char>(63 + (acc << (6 - filled))));
  return code;
}

class Searcher {
 public:
  explicit Searcher(const DenseGraph& g) : g_(g) {}

  CanonicalLabeling Run() {
    Cells cells(1);
    cells[0].resize(g_.n);
    std::iota(cells[0].begin(), cells[0].end(), 0);
    std::vector<int> prefix;
    Search(std::move(cells), prefix);
    return {CanonicalForm{best_}, best_lab_};
  }

 private:
  void Search(Cells cells, std::vector<int>& prefix) {
    Refine(g_, cells);
    if (static_cast<int>(cells.size()) == g_.n) {
      Leaf(cells);
      return;
    }
    std::size_t target = 0;
    while (cells[target].size() == 1) ++target;
    std::vector<int> candidates = cells[target];
    std::sort(candidates.begin(), candidates.end());

    std::vector<int> explored;
    for (int w : candidates) {
      if (!explored.empty() && SameOrbitAsExplored(prefix, explored, w)) {
        continue;
      }
      Cells child = cells;
      std::vector<int> rest;
      for (int v : cells[target]) {
        if (v != w) rest.push_back(v);
      }
      child[target] = {w};
      child.insert(child.begin() + static_cast<std::ptrdiff_t>(target) + 1,
                   std::move(rest));
      prefix.push_back(w);
      Search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(w);
    }
  }

  void Leaf(const Cells& cells) {
    std::vector<int> lab(g_.n);
    for (int i = 0; i < g_.n; ++i) lab[i] = cells[i][0];
    std::string code = LeafCode(g_, lab);
    if (first_lab_.empty()) {
      first_ = code;
      first_lab_ = lab;
      best_ = std::move(code);
      best_lab_ = std::move(lab);
      return;
    }
    if (code == first_) {
      RecordAutomorphism(first_lab_, lab);
    } else if (code == best_) {
      RecordAutomorphism(best_lab_, lab);
    } else if (code < best_) {
      best_ = std::move(code);
      best_lab_ = std::move(lab);
    }
  }

  void RecordAutomorphism(const std::vector<int>& from,
                          const std::vector<int>& to) {
    Perm gamma{};
    for (int i = 0; i < g_.n; ++i) gamma[from[i]] = to[i];
    automorphisms_.push_back(gamma);
  }

  // Orbits of the group generated by the known automorphisms that fix the
  // prefix pointwise. That group sits inside the prefix stabilizer, so two
  // candidates in one orbit root isomorphic subtrees.
  bool SameOrbitAsExplored(const std::vector<int>& prefix,
                           const std::vector<int>& explored, int w) const {
    std::array<int, 16> parent{};
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (const Perm& gamma : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(),
                                     [&](int p) { return gamma[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < g_.n; ++v) {
        const int a = find(v);
        const int b = find(gamma[v]);
        if (a != b) parent[a] = b;
      }
    }
    const int root = find(w);
    return std::any_of(explored.begin(), explored.end(),
                       [&](int e) { return find(e) == root; });
  }

  const DenseGraph& g_;
  std::string first_;
  std::vector<int> first_lab_;
  std::string best_;
  std::vector<int> best_lab_;
  std::vector<Perm> automorphisms_;
};

}  // namespace

CanonicalLabeling CanonicalLabel(const DenseGraph& g) {
  if (g.n < 1 || g.n > kMaxCanonicalOrder) {
    throw GraphError("canonical labeling supports 1.." +
                     std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(g.n));
  }
  return Searcher(g).Run();
}

CanonicalForm Canonicalize(const DenseGraph& g) {
  return CanonicalLabel(g).form;
}

namespace {

DenseGraph CheckedDense(const Graph& g) {
  if (g.order() > kMaxCanonicalOrder) {
    throw GraphError("canonical labeling supports at most " +
                     std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(g.order()));
  }
  return ToDense(g);
}

}  // namespace

CanonicalForm Canonicalize(const Graph& g) {
  return Canonicalize(CheckedDense(g));
}

Graph CanonicalGraph(const Graph& g) {
  const CanonicalLabeling result = CanonicalLabel(CheckedDense(g));
  std::vector<Vertex> perm(g.order());
  for (int i = 0; i < g.order(); ++i) perm[result.labeling[i]] = i;
  return g.Relabel(perm);
}

bool AreIsomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  return Canonicalize(a) == Canonicalize(b);
}

}  // namespace bidx
