#ifndef BIDX_GRAPH6_H_
#define BIDX_GRAPH6_H_

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bidx/graph.h"

namespace bidx {

// graph6 decoding failure; offset() is the 0-based byte position at which
// the input stopped making sense.
class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}

  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// graph6 as published with nauty: N(n) followed by the upper triangle of the
// adjacency matrix in column-major order (x(0,1), x(0,2), x(1,2), ...),
// packed six bits per byte with 63 added. No ">>graph6<<" header.
std::string EncodeGraph6(const Graph& g);
Graph DecodeGraph6(std::string_view text);

// One graph per line; blank lines are skipped. Errors carry the line number.
std::vector<Graph> ReadGraph6Lines(const std::string& text);
std::string WriteGraph6Lines(const std::vector<Graph>& graphs);

}  // namespace bidx

#endif  // BIDX_GRAPH6_H_
