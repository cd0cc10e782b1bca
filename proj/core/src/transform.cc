#include "bidx/transform.h"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <map>
#include <utility>

namespace bidx {
namespace {

// Float and integer partial sums of psi differences.
class DeltaSum {
 public:
  explicit DeltaSum(const IndexSpec& spec)
      : spec_(spec), exact_ok_(spec.HasExactPath()) {}

  void Add(int du, int dv, std::int64_t weight) {
    if (weight == 0) return;
    sum_ += static_cast<long double>(weight) * spec_.PsiLong(du, dv);
    if (!exact_ok_) return;
    const auto psi = spec_.ExactPsi(du, dv);
    std::int64_t term = 0;
    if (!psi || __builtin_mul_overflow(*psi, weight, &term) ||
        __builtin_add_overflow(exact_, term, &exact_)) {
      exact_ok_ = false;
    }
  }

  // psi(a) - psi(b)
  void AddDifference(int a1, int a2, int b1, int b2) {
    Add(a1, a2, 1);
    Add(b1, b2, -1);
  }

  IndexValue Result() const {
    if (exact_ok_) return {static_cast<double>(exact_), exact_};
    return {static_cast<double>(sum_), std::nullopt};
  }

 private:
  const IndexSpec& spec_;
  bool exact_ok_;
  long double sum_ = 0.0L;
  std::int64_t exact_ = 0;
};

bool IsNegative(const IndexValue& v) {
  if (v.exact) return *v.exact < 0;
  return v.value < 0.0;
}

void RequireShiftable(const Graph& g, Vertex u, Vertex v,
                      const std::vector<Vertex>& shifted) {
  if (!g.HasEdge(u, v)) {
    throw GraphError("edge shift needs uv to be an edge, but (" +
                     std::to_string(u) + "," + std::to_string(v) +
                     ") is not");
  }
  if (shifted.empty()) {
    throw GraphError("vertex " + std::to_string(v) +
                     " has no neighbor outside N(" + std::to_string(u) + ")");
  }
}

}  // namespace

std::vector<Vertex> PrivateNeighbors(const Graph& g, Vertex u, Vertex v) {
  std::vector<Vertex> out;
  for (Vertex w : g.neighbors(v)) {
    if (w != u && !g.HasEdge(u, w)) out.push_back(w);
  }
  return out;
}

Graph ApplyShift(const Graph& g, Vertex u, Vertex v) {
  const std::vector<Vertex> shifted = PrivateNeighbors(g, u, v);
  RequireShiftable(g, u, v, shifted);
  std::vector<std::pair<int, int>> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    const Vertex other = e.u == v ? e.v : (e.v == v ? e.u : -1);
    if (other >= 0 && std::binary_search(shifted.begin(), shifted.end(), other)) {
      edges.emplace_back(u, other);
    } else {
      edges.emplace_back(e.u, e.v);
    }
  }
  return BuildGraph(g.order(), edges);
}

IndexValue DirectDelta(const IndexSpec& spec, const Graph& before,
                       const Graph& after) {
  std::map<std::pair<int, int>, std::int64_t> balance;
  auto tally = [&](const Graph& g, int weight) {
    for (const Edge& e : g.edges()) {
      const int a = g.degree(e.u);
      const int b = g.degree(e.v);
      balance[{std::min(a, b), std::max(a, b)}] += weight;
    }
  };
  tally(after, 1);
  tally(before, -1);
  DeltaSum sum(spec);
  for (const auto& [pair, weight] : balance) sum.Add(pair.first, pair.second, weight);
  return sum.Result();
}

IndexValue FiveSumDelta(const IndexSpec& spec, const Graph& g, Vertex u,
                        Vertex v) {
  const std::vector<Vertex> shifted = PrivateNeighbors(g, u, v);
  RequireShiftable(g, u, v, shifted);
  const int s = static_cast<int>(shifted.size());
  const int du = g.degree(u);
  const int dv = g.degree(v);

  DeltaSum sum(spec);
  for (Vertex w : g.neighbors(u)) {
    if (w == v) continue;
    const int dw = g.degree(w);
    if (!g.HasEdge(v, w)) {
      // w in N(u) \ N(v), w != v
      sum.AddDifference(du + s, dw, du, dw);
    } else {
      // z in N(u) and N(v): u's side and v's side
      sum.AddDifference(du + s, dw, du, dw);
      sum.AddDifference(dv - s, dw, dv, dw);
    }
  }
  for (Vertex w : shifted) {
    const int dw = g.degree(w);
    sum.AddDifference(du + s, dw, dv, dw);
  }
  sum.AddDifference(du + s, dv - s, du, dv);
  return sum.Result();
}

ShiftResult EdgeShift(const Graph& g, Vertex u, Vertex v,
                      const IndexSpec& spec) {
  Graph after = ApplyShift(g, u, v);
  ShiftMove move;
  move.u = u;
  move.v = v;
  move.shifted = PrivateNeighbors(g, u, v);
  move.delta = DirectDelta(spec, g, after);
  move.decreased = IsNegative(move.delta);
  IndexValue five_sum = FiveSumDelta(spec, g, u, v);
  return {std::move(after), std::move(move), five_sum};
}

DominationResult Dominate(const Graph& g, const IndexSpec& spec) {
  if (!g.IsConnected()) {
    throw GraphError("domination needs a connected graph");
  }
  DominationResult result{g, {}, true};
  const int n = g.order();
  for (;;) {
    const Graph& current = result.graph;
    Vertex u = 0;
    for (Vertex w = 1; w < n; ++w) {
      if (current.degree(w) > current.degree(u)) u = w;
    }
    if (current.degree(u) >= n - 1) break;

    Vertex best = -1;
    int best_s = 0;
    for (Vertex v : current.neighbors(u)) {
      const int s = static_cast<int>(PrivateNeighbors(current, u, v).size());
      if (s > best_s) {
        best = v;
        best_s = s;
      }
    }
    // Connected with deg(u) < n - 1 guarantees some neighbor reaches out.
    if (best < 0) throw GraphError("no shiftable neighbor; graph disconnected");

    ShiftResult step = EdgeShift(current, u, best, spec);
    if (step.move.decreased) result.monotone = false;
    result.trace.push_back(std::move(step.move));
    result.graph = std::move(step.graph);
  }
  return result;
}

Graph ReplayTrace(const Graph& g, std::span<const ShiftMove> trace) {
  Graph current = g;
  for (const ShiftMove& move : trace) current = ApplyShift(current, move.u, move.v);
  return current;
}

}  // namespace bidx
