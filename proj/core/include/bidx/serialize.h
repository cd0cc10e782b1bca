#ifndef BIDX_SERIALIZE_H_
#define BIDX_SERIALIZE_H_

#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "bidx/conditions.h"
#include "bidx/enumerate.h"
#include "bidx/graph.h"
#include "bidx/indices.h"
#include "bidx/theorems.h"
#include "bidx/transform.h"

namespace bidx {

class SerializeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal that round-trips, or the exact integer when present.
std::string FormatValue(const IndexValue& v);
std::string FormatDouble(double x);

// All JSON output has a fixed key order and ends with a newline.
std::string ToJson(const IndexSpec& spec, const ConditionReport& report);
std::string ToJson(const ExtremalResult& result);
std::string ToJson(std::span<const ExtremalResult> results);
std::string ToJson(const TheoremReport& report);
std::string ToJson(const Graph& start, const DominationResult& result);

// Header n,m,index,param,direction,optimum,optimizer_graph6_list; the list
// is ';'-separated.
std::string ToCsv(std::span<const ExtremalResult> results);
// One row per cell: theorem,n,param,m,check,verdict,lhs,relation,rhs,detail.
std::string ToCsv(const TheoremReport& report);

// The (u, v) moves of a trace written by ToJson(start, result). Throws
// SerializeError on malformed input.
std::vector<ShiftMove> ParseTraceJson(const std::string& text);

}  // namespace bidx

#endif  // BIDX_SERIALIZE_H_
