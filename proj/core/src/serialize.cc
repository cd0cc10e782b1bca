#include "bidx/serialize.h"

#include <charconv>
#include <cmath>

#include "bidx/graph6.h"
#include "json.hpp"

namespace bidx {
namespace {

using Json = nlohmann::ordered_json;

Json ValueJson(const IndexValue& v) {
  if (v.exact) return *v.exact;
  return v.value;
}

Json SpecJson(const IndexSpec& spec) {
  Json out;
  out["index"] = spec.Name();
  switch (spec.kind()) {
    case IndexKind::kChi:
    case IndexKind::kPl:
    case IndexKind::kSei:
      out["param"] = spec.param();
      break;
    default:
      out["param"] = nullptr;
  }
  return out;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

Json ExtremalJson(const ExtremalResult& r) {
  Json out;
  out["n"] = r.n;
  out["m"] = r.m;
  const Json spec = SpecJson(r.spec);
  for (const auto& [k, v] : spec.items()) out[k] = v;
  out["direction"] = DirectionName(r.direction);
  out["optimum"] = ValueJson(r.optimum);
  Json forms = Json::array();
  for (const CanonicalForm& f : r.optimizers) forms.push_back(f.graph6);
  out["optimizers"] = forms;
  out["total_enumerated"] = r.total_enumerated;
  return out;
}

std::string CsvField(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string ParamField(const IndexSpec& spec) {
  switch (spec.kind()) {
    case IndexKind::kChi:
    case IndexKind::kPl:
    case IndexKind::kSei:
      return FormatDouble(spec.param());
    default:
      return "";
  }
}

}  // namespace

std::string FormatDouble(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string FormatValue(const IndexValue& v) {
  if (v.exact) return std::to_string(*v.exact);
  return FormatDouble(v.value);
}

std::string ToJson(const IndexSpec& spec, const ConditionReport& report) {
  Json out = SpecJson(spec);
  out["mode"] = DirectionName(report.mode);
  out["grid_bound"] = report.grid_bound;
  out["monotone_ok"] = report.monotone_ok;
  out["delta1_ok"] = report.delta1_ok;
  out["delta2_ok"] = report.delta2_ok;
  out["strictness"] = StrictnessName(report.strictness);
  out["passed"] = report.passed();
  if (report.counterexample) {
    const Counterexample& c = *report.counterexample;
    Json cex;
    cex["kind"] = ViolationName(c.kind);
    cex["x"] = c.tuple.x;
    cex["c"] = c.tuple.c;
    cex["t"] = c.tuple.t;
    cex["y"] = c.tuple.y;
    cex["delta1"] = c.delta1;
    cex["delta2"] = c.delta2;
    cex["step"] = c.step;
    out["counterexample"] = cex;
  } else {
    out["counterexample"] = nullptr;
  }
  return Dump(out);
}

std::string ToJson(const ExtremalResult& result) {
  return Dump(ExtremalJson(result));
}

std::string ToJson(std::span<const ExtremalResult> results) {
  Json out = Json::array();
  for (const ExtremalResult& r : results) out.push_back(ExtremalJson(r));
  return Dump(out);
}

std::string ToJson(const TheoremReport& report) {
  Json out;
  out["theorem"] = TheoremName(report.id);
  out["overall"] = report.overall;
  Json grid = Json::array();
  for (const auto& [param, n] : report.parameter_grid) {
    grid.push_back({{"param", param}, {"n", n}});
  }
  out["parameter_grid"] = grid;
  out["notes"] = report.notes;
  Json cells = Json::array();
  for (const TheoremCell& c : report.cells) {
    Json cell;
    cell["n"] = c.n;
    cell["param"] = c.param;
    cell["m"] = c.m >= 0 ? Json(c.m) : Json(nullptr);
    cell["check"] = c.check;
    cell["verdict"] = VerdictName(c.verdict);
    cell["lhs"] = c.lhs;
    cell["relation"] = c.relation;
    cell["rhs"] = c.rhs;
    cell["detail"] = c.detail;
    cells.push_back(cell);
  }
  out["cells"] = cells;
  return Dump(out);
}

std::string ToJson(const Graph& start, const DominationResult& result) {
  Json out;
  out["start"] = EncodeGraph6(start);
  out["result"] = EncodeGraph6(result.graph);
  out["monotone"] = result.monotone;
  Json moves = Json::array();
  for (const ShiftMove& m : result.trace) {
    Json move;
    move["u"] = m.u;
    move["v"] = m.v;
    move["shifted"] = m.shifted;
    move["delta"] = ValueJson(m.delta);
    move["decreased"] = m.decreased;
    moves.push_back(move);
  }
  out["trace"] = moves;
  return Dump(out);
}

std::string ToCsv(std::span<const ExtremalResult> results) {
  std::string out =
      "n,m,index,param,direction,optimum,optimizer_graph6_list\n";
  for (const ExtremalResult& r : results) {
    std::string forms;
    for (const CanonicalForm& f : r.optimizers) {
      if (!forms.empty()) forms += ';';
      forms += f.graph6;
    }
    out += std::to_string(r.n) + "," + std::to_string(r.m) + "," +
           r.spec.Name() + "," + ParamField(r.spec) + "," +
           std::string(DirectionName(r.direction)) + "," +
           FormatValue(r.optimum) + "," + CsvField(forms) + "\n";
  }
  return out;
}

std::string ToCsv(const TheoremReport& report) {
  std::string out = "theorem,n,param,m,check,verdict,lhs,relation,rhs,detail\n";
  for (const TheoremCell& c : report.cells) {
    out += std::string(TheoremName(report.id)) + "," + std::to_string(c.n) +
           "," + FormatDouble(c.param) + "," +
           (c.m >= 0 ? std::to_string(c.m) : "") + "," + CsvField(c.check) +
           "," + std::string(VerdictName(c.verdict)) + "," +
           FormatDouble(c.lhs) + "," + CsvField(c.relation) + "," +
           FormatDouble(c.rhs) + "," + CsvField(c.detail) + "\n";
  }
  return out;
}

std::vector<ShiftMove> ParseTraceJson(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    std::vector<ShiftMove> out;
    for (const Json& m : doc.at("trace")) {
      ShiftMove move;
      move.u = m.at("u").get<int>();
      move.v = m.at("v").get<int>();
      if (m.contains("shifted")) {
        move.shifted = m.at("shifted").get<std::vector<Vertex>>();
      }
      out.push_back(std::move(move));
    }
    return out;
  } catch (const Json::exception& e) {
    throw SerializeError(std::string("bad trace json: ") + e.what());
  }
}

}  // namespace bidx
