#ifndef BIDX_TRANSFORM_H_
#define BIDX_TRANSFORM_H_

#include <span>
#include <vector>

#include "bidx/graph.h"
#include "bidx/indices.h"

namespace bidx {

// Moving v's private neighbors over to u across the edge uv. `shifted` is
// N(v) \ (N(u) + {u}) in the source graph, in increasing order.
struct ShiftMove {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> shifted;
  // BID(after) - BID(before) under the index the move was made for.
  IndexValue delta;
  // Set when delta < 0. Never happens for indices that pass CheckConditions.
  bool decreased = false;

  int s() const { return static_cast<int>(shifted.size()); }
};

// N(v) \ (N(u) + {u}).
std::vector<Vertex> PrivateNeighbors(const Graph& g, Vertex u, Vertex v);

// The shifted graph alone. Throws GraphError when uv is not an edge or v has
// no private neighbor.
Graph ApplyShift(const Graph& g, Vertex u, Vertex v);

struct ShiftResult {
  Graph graph;
  ShiftMove move;
  // The same delta assembled term by term from the source degrees: edges at
  // u outside N(v), the two sums over common neighbors, the moved edges and
  // the uv edge itself.
  IndexValue five_sum_delta;
};

ShiftResult EdgeShift(const Graph& g, Vertex u, Vertex v,
                      const IndexSpec& spec);

// BID(after) - BID(before) from the two edge-degree multisets, so edges that
// keep their degree pair cancel exactly.
IndexValue DirectDelta(const IndexSpec& spec, const Graph& before,
                       const Graph& after);

// The decomposed delta for shifting across uv in g.
IndexValue FiveSumDelta(const IndexSpec& spec, const Graph& g, Vertex u,
                        Vertex v);

struct DominationResult {
  Graph graph;
  std::vector<ShiftMove> trace;
  // False when some move decreased the index.
  bool monotone = true;
};

// Repeats the shift until some vertex has degree n - 1. Each round u is a
// maximum-degree vertex (smallest label on ties) and v is the neighbor of u
// with the most private neighbors (smallest label on ties). Throws
// GraphError for a disconnected g.
DominationResult Dominate(const Graph& g, const IndexSpec& spec);

// Applies the (u, v) pairs of a trace in order.
Graph ReplayTrace(const Graph& g, std::span<const ShiftMove> trace);

}  // namespace bidx

#endif  // BIDX_TRANSFORM_H_
