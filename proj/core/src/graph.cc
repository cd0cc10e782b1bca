#include "bidx/graph.h"

#include <algorithm>
#include <charconv>
#include <functional>
#include <sstream>

namespace bidx {

Graph::Graph() : adjacency_(1) {}

Graph::Graph(int n, std::vector<Edge> edges)
    : edges_(std::move(edges)), adjacency_(n) {
  for (const Edge& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nbrs : adjacency_) std::sort(nbrs.begin(), nbrs.end());
}

bool Graph::HasEdge(Vertex a, Vertex b) const {
  if (a < 0 || b < 0 || a >= order() || b >= order()) return false;
  const auto& nbrs = adjacency_[a];
  return std::binary_search(nbrs.begin(), nbrs.end(), b);
}

int Graph::MaxDegree() const {
  int best = 0;
  for (const auto& nbrs : adjacency_) {
    best = std::max(best, static_cast<int>(nbrs.size()));
  }
  return best;
}

bool Graph::IsConnected() const {
  const int n = order();
  std::vector<char> seen(n, 0);
  std::vector<Vertex> stack = {0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

Graph Graph::Relabel(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != order()) {
    throw GraphError("relabel: permutation size does not match vertex count");
  }
  std::vector<std::pair<int, int>> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) mapped.emplace_back(perm[e.u], perm[e.v]);
  return BuildGraph(order(), mapped);
}

Graph BuildGraph(int n, std::span<const std::pair<int, int>> edges) {
  if (n < 1) throw GraphError("graph needs at least one vertex");
  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a < 0 || b < 0 || a >= n || b >= n) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside [0," + std::to_string(n) +
                       ")");
    }
    if (a == b) {
      throw GraphError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") is a self-loop");
    }
    normalized.push_back({std::min(a, b), std::max(a, b)});
  }
  std::sort(normalized.begin(), normalized.end());
  normalized.erase(std::unique(normalized.begin(), normalized.end()),
                   normalized.end());
  return Graph(n, std::move(normalized));
}

Graph BuildGraph(int n, std::initializer_list<std::pair<int, int>> edges) {
  return BuildGraph(n, std::span<const std::pair<int, int>>(edges.begin(),
                                                            edges.size()));
}

std::vector<int> DegreeSequence(const Graph& g) {
  std::vector<int> degrees(g.order());
  for (Vertex v = 0; v < g.order(); ++v) degrees[v] = g.degree(v);
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

Graph LineGraph(const Graph& g) {
  // Edges incident to a common vertex form a clique in L(G).
  std::vector<std::vector<int>> incident(g.order());
  const auto& edges = g.edges();
  for (int i = 0; i < static_cast<int>(edges.size()); ++i) {
    incident[edges[i].u].push_back(i);
    incident[edges[i].v].push_back(i);
  }
  std::vector<std::pair<int, int>> line_edges;
  for (const auto& bucket : incident) {
    for (size_t a = 0; a < bucket.size(); ++a) {
      for (size_t b = a + 1; b < bucket.size(); ++b) {
        line_edges.emplace_back(bucket[a], bucket[b]);
      }
    }
  }
  // A simple graph has no two edges sharing both endpoints, so no pair
  // appears twice; BuildGraph dedups regardless.
  return BuildGraph(std::max(1, g.size()), line_edges);
}

Graph JoinDominatingVertex(int n, const Graph& remainder) {
  if (remainder.order() > n - 1) {
    throw GraphError("remainder has " + std::to_string(remainder.order()) +
                     " vertices but only " + std::to_string(n - 1) +
                     " are available");
  }
  std::vector<std::pair<int, int>> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
  for (const Edge& e : remainder.edges()) edges.emplace_back(e.u + 1, e.v + 1);
  return BuildGraph(n, edges);
}

Graph PathGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return BuildGraph(n, edges);
}

Graph CycleGraph(int n) {
  if (n < 3) throw GraphError("a cycle needs at least 3 vertices");
  std::vector<std::pair<int, int>> edges;
  for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return BuildGraph(n, edges);
}

Graph StarGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
  return BuildGraph(n, edges);
}

Graph CompleteGraph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) edges.emplace_back(a, b);
  }
  return BuildGraph(n, edges);
}

namespace {

std::string Trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

int ParseInt(const std::string& token, int line_no) {
  int value = 0;
  const auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw GraphError("edge list line " + std::to_string(line_no) +
                     ": expected an integer, got '" + token + "'");
  }
  return value;
}

}  // namespace

Graph ParseEdgeList(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int n = -1;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string line = Trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (n < 0) {
      if (line.rfind("n=", 0) != 0) {
        throw GraphError("edge list line " + std::to_string(line_no) +
                         ": expected header 'n=<int>'");
      }
      n = ParseInt(Trim(line.substr(2)), line_no);
      continue;
    }
    std::istringstream fields(line);
    std::string a, b, extra;
    if (!(fields >> a >> b) || (fields >> extra)) {
      throw GraphError("edge list line " + std::to_string(line_no) +
                       ": expected 'u v'");
    }
    edges.emplace_back(ParseInt(a, line_no), ParseInt(b, line_no));
  }
  if (n < 0) throw GraphError("edge list is missing the 'n=<int>' header");
  return BuildGraph(n, edges);
}

std::string FormatEdgeList(const Graph& g) {
  std::string out = "n=" + std::to_string(g.order()) + "\n";
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out;
}

}  // namespace bidx
