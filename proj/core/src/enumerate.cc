#include "bidx/enumerate.h"

#include <algorithm>
#include <functional>
#include <string>
#include <thread>

namespace bidx {
namespace {

DenseGraph Relabeled(const DenseGraph& g, const std::vector<int>& labeling) {
  std::array<int, 16> position{};
  for (int i = 0; i < g.n; ++i) position[labeling[i]] = i;
  DenseGraph out;
  out.n = g.n;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      if (g.HasEdge(a, b)) out.AddEdge(position[a], position[b]);
    }
  }
  return out;
}

using ClassMap = std::map<std::string, DenseGraph>;
using ChildFn = std::function<void(const DenseGraph&,
                                   const std::function<void(DenseGraph)>&)>;

void Insert(ClassMap& classes, const DenseGraph& candidate) {
  CanonicalLabeling label = CanonicalLabel(candidate);
  if (classes.contains(label.form.graph6)) return;
  classes.emplace(std::move(label.form.graph6),
                  Relabeled(candidate, label.labeling));
}

// Canonical, deduplicated children of all parents. Parents are dealt to
// workers round-robin; each worker keeps a private map and the maps are
// merged at the end, so the result is independent of scheduling.
std::vector<GraphClass> Expand(const std::vector<GraphClass>& parents,
                               int workers, const ChildFn& children) {
  workers = std::max(1, std::min<int>(workers, static_cast<int>(parents.size())));
  std::vector<ClassMap> partial(workers);
  auto run = [&](int worker) {
    ClassMap& local = partial[worker];
    for (std::size_t i = worker; i < parents.size(); i += workers) {
      children(parents[i].graph,
               [&](DenseGraph child) { Insert(local, child); });
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  ClassMap merged = std::move(partial[0]);
  for (int w = 1; w < workers; ++w) merged.merge(partial[w]);

  std::vector<GraphClass> out;
  out.reserve(merged.size());
  for (auto& [form, graph] : merged) out.push_back({CanonicalForm{form}, graph});
  return out;
}

void AddEachNonEdge(const DenseGraph& parent,
                    const std::function<void(DenseGraph)>& emit) {
  for (int b = 1; b < parent.n; ++b) {
    for (int a = 0; a < b; ++a) {
      if (parent.HasEdge(a, b)) continue;
      DenseGraph child = parent;
      child.AddEdge(a, b);
      emit(child);
    }
  }
}

void CheckOrder(int n) {
  if (n < 1 || n > kMaxCanonicalOrder) {
    throw GraphError("enumeration supports 1.." +
                     std::to_string(kMaxCanonicalOrder) + " vertices, got " +
                     std::to_string(n));
  }
}

bool Feasible(int n, int m) {
  return n >= 1 && m >= n - 1 && m <= n * (n - 1) / 2;
}

const std::vector<GraphClass> kNoClasses;

}  // namespace

GraphCatalog::GraphCatalog(int workers)
    : workers_(workers > 0
                   ? workers
                   : static_cast<int>(
                         std::max(1u, std::thread::hardware_concurrency()))) {}

const std::vector<GraphClass>& GraphCatalog::Connected(int n, int m) {
  CheckOrder(n);
  std::lock_guard<std::mutex> lock(mu_);
  return ConnectedLocked(n, m);
}

const std::vector<GraphClass>& GraphCatalog::AllGraphs(int n, int m) {
  CheckOrder(n);
  std::lock_guard<std::mutex> lock(mu_);
  return AllGraphsLocked(n, m);
}

const std::vector<GraphClass>& GraphCatalog::TreesLocked(int n) {
  const auto key = std::make_pair(n, n - 1);
  if (auto it = connected_.find(key); it != connected_.end()) return it->second;
  std::vector<GraphClass> level;
  if (n == 1) {
    DenseGraph k1;
    k1.n = 1;
    level.push_back({Canonicalize(k1), k1});
  } else {
    level = Expand(TreesLocked(n - 1), workers_,
                   [](const DenseGraph& parent,
                      const std::function<void(DenseGraph)>& emit) {
                     for (int v = 0; v < parent.n; ++v) {
                       DenseGraph child = parent;
                       child.n = parent.n + 1;
                       child.AddEdge(v, parent.n);
                       emit(child);
                     }
                   });
  }
  return connected_.emplace(key, std::move(level)).first->second;
}

const std::vector<GraphClass>& GraphCatalog::ConnectedLocked(int n, int m) {
  if (!Feasible(n, m)) return kNoClasses;
  if (m == n - 1) return TreesLocked(n);
  const auto key = std::make_pair(n, m);
  if (auto it = connected_.find(key); it != connected_.end()) return it->second;
  std::vector<GraphClass> level =
      Expand(ConnectedLocked(n, m - 1), workers_, AddEachNonEdge);
  return connected_.emplace(key, std::move(level)).first->second;
}

const std::vector<GraphClass>& GraphCatalog::AllGraphsLocked(int n, int m) {
  if (m < 0 || m > n * (n - 1) / 2) return kNoClasses;
  const auto key = std::make_pair(n, m);
  if (auto it = all_.find(key); it != all_.end()) return it->second;
  std::vector<GraphClass> level;
  if (m == 0) {
    DenseGraph empty;
    empty.n = n;
    level.push_back({Canonicalize(empty), empty});
  } else {
    level = Expand(AllGraphsLocked(n, m - 1), workers_, AddEachNonEdge);
  }
  return all_.emplace(key, std::move(level)).first->second;
}

std::vector<Graph> EnumerateConnected(int n, int m, int workers) {
  GraphCatalog catalog(workers);
  std::vector<Graph> out;
  for (const GraphClass& c : catalog.Connected(n, m)) out.push_back(ToGraph(c.graph));
  return out;
}

std::vector<Graph> DominatingRemainders(int n, int k, GraphCatalog* catalog) {
  if (n < 2) throw GraphError("dominating enumeration needs n >= 2");
  if (k < 0) return {};
  const int r = std::min(n - 1, 2 * k);
  if (k == 0) return {BuildGraph(std::max(1, r), {})};
  GraphCatalog local;
  GraphCatalog& source = catalog ? *catalog : local;
  std::vector<Graph> out;
  for (const GraphClass& c : source.AllGraphs(r, k)) out.push_back(ToGraph(c.graph));
  return out;
}

std::vector<Graph> EnumerateDominating(int n, int k, GraphCatalog* catalog) {
  std::vector<Graph> out;
  for (const Graph& remainder : DominatingRemainders(n, k, catalog)) {
    out.push_back(JoinDominatingVertex(n, remainder));
  }
  return out;
}

namespace {

ExtremalResult Optimize(int n, int m, const IndexSpec& spec,
                        Direction direction,
                        const std::vector<std::pair<CanonicalForm, Graph>>& pool) {
  ExtremalResult result;
  result.n = n;
  result.m = m;
  result.spec = spec;
  result.direction = direction;
  result.total_enumerated = static_cast<std::int64_t>(pool.size());

  std::vector<IndexValue> values;
  values.reserve(pool.size());
  for (const auto& entry : pool) values.push_back(EvaluateBid(spec, entry.second));
  const int want = direction == Direction::kMax ? 1 : -1;
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i) {
    if (CompareValues(values[i], values[best]) == want) best = i;
  }
  if (values.empty()) return result;
  result.optimum = values[best];
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (CompareValues(values[i], values[best]) == 0) {
      result.optimizers.push_back(pool[i].first);
    }
  }
  std::sort(result.optimizers.begin(), result.optimizers.end());
  return result;
}

void RequireFeasible(int n, int m) {
  CheckOrder(n);
  if (!Feasible(n, m)) {
    throw GraphError("no connected graph has n = " + std::to_string(n) +
                     " and m = " + std::to_string(m));
  }
}

}  // namespace

ExtremalResult ExtremalSearch(int n, int m, const IndexSpec& spec,
                              Direction direction, GraphCatalog* catalog) {
  RequireFeasible(n, m);
  GraphCatalog local;
  GraphCatalog& source = catalog ? *catalog : local;
  std::vector<std::pair<CanonicalForm, Graph>> pool;
  for (const GraphClass& c : source.Connected(n, m)) {
    pool.emplace_back(c.form, ToGraph(c.graph));
  }
  return Optimize(n, m, spec, direction, pool);
}

ExtremalResult ExtremalSearchDominating(int n, int m, const IndexSpec& spec,
                                        Direction direction,
                                        GraphCatalog* catalog) {
  RequireFeasible(n, m);
  std::vector<std::pair<CanonicalForm, Graph>> pool;
  for (Graph& g : EnumerateDominating(n, m - (n - 1), catalog)) {
    CanonicalForm form = Canonicalize(g);
    pool.emplace_back(std::move(form), std::move(g));
  }
  return Optimize(n, m, spec, direction, pool);
}

}  // namespace bidx
