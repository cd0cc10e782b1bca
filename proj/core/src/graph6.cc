#include "bidx/graph6.h"

#include <sstream>
#include <utility>

namespace bidx {
namespace {

constexpr int kBias = 63;
constexpr int kLongForm = 126;
constexpr long long kMaxDecodeOrder = 100000;

void AppendOrder(std::string& out, long long n) {
  auto push6 = [&](long long bits) {
    out.push_back(static_cast<char>(kBias + (bits & 0x3f)));
  };
  if (n <= 62) {
    push6(n);
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kLongForm));
    for (int shift = 12; shift >= 0; shift -= 6) push6(n >> shift);
  } else {
    out.push_back(static_cast<char>(kLongForm));
    out.push_back(static_cast<char>(kLongForm));
    for (int shift = 30; shift >= 0; shift -= 6) push6(n >> shift);
  }
}

int SixBits(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) throw Graph6Error("truncated graph6 input", pos);
  const int c = static_cast<unsigned char>(text[pos]);
  if (c < kBias || c > kBias + 63) {
    throw Graph6Error("byte outside the graph6 range 63..126", pos);
  }
  return c - kBias;
}

}  // namespace

std::string EncodeGraph6(const Graph& g) {
  const long long n = g.order();
  std::string out;
  AppendOrder(out, n);
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.HasEdge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  }
  return out;
}

Graph DecodeGraph6(std::string_view text) {
  if (text.empty()) throw Graph6Error("empty graph6 input", 0);
  std::size_t pos = 0;
  long long n = 0;
  if (static_cast<unsigned char>(text[0]) == kLongForm) {
    if (text.size() > 1 && static_cast<unsigned char>(text[1]) == kLongForm) {
      pos = 2;
      for (int k = 0; k < 6; ++k) n = (n << 6) | SixBits(text, pos++);
    } else {
      pos = 1;
      for (int k = 0; k < 3; ++k) n = (n << 6) | SixBits(text, pos++);
    }
  } else {
    n = SixBits(text, pos++);
  }
  if (n < 1 || n > kMaxDecodeOrder) {
    throw Graph6Error("unsupported vertex count " + std::to_string(n), 0);
  }
  const long long bits = n * (n - 1) / 2;
  const std::size_t expected = pos + static_cast<std::size_t>((bits + 5) / 6);
  if (text.size() < expected) {
    throw Graph6Error("truncated graph6 bit stream", text.size());
  }
  if (text.size() > expected) {
    throw Graph6Error("trailing bytes after graph6 bit stream", expected);
  }

  std::vector<std::pair<int, int>> edges;
  long long index = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++index) {
      const std::size_t at = pos + static_cast<std::size_t>(index / 6);
      const int bit = 5 - static_cast<int>(index % 6);
      if ((SixBits(text, at) >> bit) & 1) edges.emplace_back(i, j);
    }
  }
  // Padding bits in the final byte are ignored, as nauty does.
  return BuildGraph(static_cast<int>(n), edges);
}

std::vector<Graph> ReadGraph6Lines(const std::string& text) {
  std::vector<Graph> graphs;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      graphs.push_back(DecodeGraph6(line));
    } catch (const Graph6Error& e) {
      throw Graph6Error("line " + std::to_string(line_no) + ": " + e.what(),
                        e.offset());
    }
  }
  return graphs;
}

std::string WriteGraph6Lines(const std::vector<Graph>& graphs) {
  std::string out;
  for (const Graph& g : graphs) {
    out += EncodeGraph6(g);
    out.push_back('\n');
  }
  return out;
}

}  // namespace bidx
