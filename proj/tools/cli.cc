#include "cli.h"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>
#include <vector>

#include "CLI11.hpp"
#include "bidx/canonical.h"
#include "bidx/conditions.h"
#include "bidx/enumerate.h"
#include "bidx/families.h"
#include "bidx/graph.h"
#include "bidx/graph6.h"
#include "bidx/indices.h"
#include "bidx/serialize.h"
#include "bidx/theorems.h"

namespace bidx::cli {
namespace {

const std::vector<std::string> kIndexNames = {"chi", "pl", "sei", "m1",
                                              "platt"};

struct IndexFlags {
  std::string index;
  std::optional<double> alpha;
  std::optional<double> a;
};

struct Config {
  IndexFlags idx;
  std::optional<int> n;
  std::optional<int> m;
  std::optional<int> k;
  std::optional<int> n_min;
  std::optional<int> n_max;
  std::string direction = "max";
  std::string theorem;
  std::vector<double> params;
  std::string graph6;
  std::string in;
  std::string out;
  std::string format;
  std::vector<std::string> family_names;
  int workers = 0;
  int oracle_max_n = kDefaultSweepBound;
  bool conditions = false;
  int grid = 50;
};

class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

void AddIndexFlags(CLI::App* cmd, IndexFlags& f, bool required) {
  auto* opt = cmd->add_option("--index", f.index, "chi, pl, sei, m1 or platt")
                  ->check(CLI::IsMember(kIndexNames));
  if (required) opt->required();
  cmd->add_option("--alpha", f.alpha, "exponent for chi and pl");
  cmd->add_option("--a", f.a, "base for sei");
}

void AddOutputFlags(CLI::App* cmd, Config& c,
                    const std::vector<std::string>& formats) {
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember(formats))
      ->default_str(formats.front());
  cmd->add_option("--out", c.out, "write results to this file");
}

void AddWorkers(CLI::App* cmd, Config& c) {
  cmd->add_option("--workers", c.workers, "worker threads, 0 for all cores")
      ->envname("BIDX_WORKERS")
      ->check(CLI::NonNegativeNumber);
}

IndexSpec MakeSpec(const IndexFlags& f) {
  if (f.index == "chi" || f.index == "pl") {
    if (!f.alpha) throw UsageError("--index " + f.index + " needs --alpha");
    return IndexSpec::FromName(f.index, *f.alpha);
  }
  if (f.index == "sei") {
    if (!f.a) throw UsageError("--index sei needs --a");
    return IndexSpec::FromName(f.index, *f.a);
  }
  return IndexSpec::FromName(f.index, 0.0);
}

Direction ParseDirection(const std::string& s) {
  return s == "min" ? Direction::kMin : Direction::kMax;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Edge-list files start with an "n=" line (after comments); anything else is
// read as graph6 lines.
std::vector<Graph> ReadGraphs(const std::string& text) {
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    const auto start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    if (line.compare(start, 2, "n=") == 0) return {ParseEdgeList(text)};
    break;
  }
  return ReadGraph6Lines(text);
}

std::string ParamText(const IndexSpec& spec) {
  switch (spec.kind()) {
    case IndexKind::kChi:
    case IndexKind::kPl:
    case IndexKind::kSei:
      return FormatDouble(spec.param());
    default:
      return "";
  }
}

// Family name of a canonical form at order n, if it is one.
std::string FamilyOf(const CanonicalForm& form, int n) {
  for (FamilyTag tag : kAllFamilyTags) {
    if (n >= MinimumOrder(tag) && Canonicalize(MakeFamily({tag, n})) == form) {
      return std::string(FamilyName(tag));
    }
  }
  return "";
}

int RunCompute(const Config& c, std::string& body) {
  const IndexSpec spec = MakeSpec(c.idx);
  std::vector<Graph> graphs;
  if (!c.graph6.empty()) {
    graphs.push_back(DecodeGraph6(c.graph6));
  } else {
    graphs = ReadGraphs(ReadFile(c.in));
  }
  if (graphs.empty()) throw UsageError("no graph in input");

  std::ostringstream out;
  if (c.format == "json") {
    out << "[\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      const IndexValue v = EvaluateBid(spec, graphs[i]);
      out << "  {\"graph6\": \"" << EncodeGraph6(graphs[i]) << "\", \"index\": \""
          << spec.Name() << "\", \"param\": "
          << (ParamText(spec).empty() ? "null" : ParamText(spec))
          << ", \"value\": " << FormatValue(v) << "}"
          << (i + 1 < graphs.size() ? "," : "") << "\n";
    }
    out << "]\n";
  } else if (c.format == "csv") {
    out << "graph6,index,param,value\n";
    for (const Graph& g : graphs) {
      out << EncodeGraph6(g) << "," << spec.Name() << "," << ParamText(spec)
          << "," << FormatValue(EvaluateBid(spec, g)) << "\n";
    }
  } else {
    for (const Graph& g : graphs) {
      out << FormatValue(EvaluateBid(spec, g)) << "\n";
    }
  }
  body = out.str();
  return kExitOk;
}

std::vector<std::pair<int, int>> SearchCells(const Config& c) {
  std::vector<std::pair<int, int>> cells;
  if (c.n) {
    if (!c.m) throw UsageError("search with --n needs --m");
    cells.emplace_back(*c.n, *c.m);
    return cells;
  }
  if (!c.n_min || !c.n_max) {
    throw UsageError("search needs --n and --m, or --n-min and --n-max");
  }
  for (int n = *c.n_min; n <= *c.n_max; ++n) {
    for (int m = n - 1; m <= std::min(n + 3, n * (n - 1) / 2); ++m) {
      if (!c.m || *c.m == m) cells.emplace_back(n, m);
    }
  }
  if (cells.empty()) throw UsageError("empty search range");
  return cells;
}

int RunSearch(const Config& c, std::string& body) {
  const IndexSpec spec = MakeSpec(c.idx);
  const Direction dir = ParseDirection(c.direction);
  GraphCatalog catalog(c.workers);
  std::vector<ExtremalResult> results;
  for (const auto& [n, m] : SearchCells(c)) {
    results.push_back(ExtremalSearch(n, m, spec, dir, &catalog));
  }
  if (c.format == "json") {
    body = results.size() == 1 ? ToJson(results.front()) : ToJson(results);
  } else if (c.format == "csv") {
    body = ToCsv(results);
  } else if (c.format == "graph6") {
    for (const ExtremalResult& r : results) {
      for (const CanonicalForm& f : r.optimizers) body += f.graph6 + "\n";
    }
  } else {
    std::ostringstream out;
    for (const ExtremalResult& r : results) {
      out << "n=" << r.n << " m=" << r.m << " " << r.spec.Label() << " "
          << DirectionName(r.direction) << " optimum " << FormatValue(r.optimum)
          << " over " << r.total_enumerated << " classes\n";
      for (const CanonicalForm& f : r.optimizers) {
        const std::string name = FamilyOf(f, r.n);
        out << "  " << f.graph6 << (name.empty() ? "" : "  " + name) << "\n";
      }
    }
    body = out.str();
  }
  return kExitOk;
}

std::string ConditionsText(const IndexSpec& spec, const ConditionReport& r) {
  std::ostringstream out;
  out << spec.Label() << " " << DirectionName(r.mode) << " grid " << r.grid_bound
      << ": " << StrictnessName(r.strictness) << "\n"
      << "  monotone " << (r.monotone_ok ? "ok" : "violated") << ", delta1 "
      << (r.delta1_ok ? "ok" : "violated") << ", delta2 "
      << (r.delta2_ok ? "ok" : "violated") << "\n";
  if (r.counterexample) {
    const Counterexample& x = *r.counterexample;
    out << "  counterexample " << ViolationName(x.kind) << " at (x,c,t,y) = ("
        << x.tuple.x << "," << x.tuple.c << "," << x.tuple.t << ","
        << x.tuple.y << ") delta1 " << FormatDouble(x.delta1) << " delta2 "
        << FormatDouble(x.delta2) << "\n";
  }
  return out.str();
}

std::string TheoremText(const TheoremReport& r) {
  std::ostringstream out;
  out << TheoremName(r.id) << ": " << (r.overall ? "pass" : "FAIL") << " ("
      << r.cells.size() << " cells)\n";
  for (const std::string& note : r.notes) out << "  note: " << note << "\n";
  for (const TheoremCell& cell : r.cells) {
    out << "  " << std::left << std::setw(7) << VerdictName(cell.verdict)
        << " n=" << cell.n << " p=" << FormatDouble(cell.param);
    if (cell.m >= 0) out << " m=" << cell.m;
    out << "  " << cell.check;
    if (cell.verdict != Verdict::kSkipped) {
      out << "  [" << FormatDouble(cell.lhs) << " " << cell.relation << " "
          << FormatDouble(cell.rhs) << "]";
    }
    if (!cell.detail.empty()) out << "  " << cell.detail;
    out << "\n";
  }
  return out.str();
}

int RunVerify(const Config& c, std::string& body) {
  if (c.conditions) {
    const IndexSpec spec = MakeSpec(c.idx);
    const ConditionReport report =
        CheckConditions(spec, ParseDirection(c.direction), c.grid, c.workers);
    body = c.format == "json" ? ToJson(spec, report) : ConditionsText(spec, report);
    return report.passed() ? kExitOk : kExitVerificationFailed;
  }
  if (c.theorem.empty()) throw UsageError("verify needs --theorem or --conditions");
  const TheoremId id = *ParseTheoremId(c.theorem);

  std::vector<double> params = c.params;
  if (params.empty() && c.idx.alpha) params.push_back(*c.idx.alpha);
  if (params.empty() && c.idx.a) params.push_back(*c.idx.a);
  VerifyOptions options;
  options.workers = c.workers;
  options.oracle_max_n = c.oracle_max_n;
  if (id == TheoremId::kLemma2) {
    const std::string kind = c.idx.index.empty() ? "chi" : c.idx.index;
    static const std::map<std::string, IndexKind> kinds = {
        {"chi", IndexKind::kChi}, {"pl", IndexKind::kPl},
        {"sei", IndexKind::kSei}, {"m1", IndexKind::kM1},
        {"platt", IndexKind::kPlatt}};
    options.lemma2_kind = kinds.at(kind);
    if (params.empty() && (kind == "m1" || kind == "platt")) params.push_back(1.0);
  }
  if (params.empty()) throw UsageError("verify needs --alphas/--params, --alpha or --a");

  const int n_min = c.n_min.value_or(c.n.value_or(-1));
  const int n_max = c.n_max.value_or(c.n.value_or(n_min));
  if (n_min < 0) throw UsageError("verify needs --n-min and --n-max (or --n)");
  const TheoremReport report = VerifyTheorem(id, n_min, n_max, params, options);
  if (c.format == "json") {
    body = ToJson(report);
  } else if (c.format == "csv") {
    body = ToCsv(report);
  } else {
    body = TheoremText(report);
  }
  return report.overall ? kExitOk : kExitVerificationFailed;
}

int RunFamilies(const Config& c, std::string& body) {
  if (!c.n) throw UsageError("families needs --n");
  std::vector<FamilyTag> tags;
  if (c.family_names.empty()) {
    for (FamilyTag tag : kAllFamilyTags) {
      if (*c.n >= MinimumOrder(tag)) tags.push_back(tag);
    }
  } else {
    for (const std::string& name : c.family_names) {
      const auto tag = ParseFamilyTag(name);
      if (!tag) throw UsageError("unknown family '" + name + "'");
      tags.push_back(*tag);
    }
  }
  std::ostringstream out;
  if (c.format == "json") out << "[\n";
  for (std::size_t i = 0; i < tags.size(); ++i) {
    const Graph g = MakeFamily({tags[i], *c.n});
    const std::string code = EncodeGraph6(g);
    if (c.format == "graph6") {
      out << code << "\n";
    } else if (c.format == "json") {
      out << "  {\"family\": \"" << FamilyName(tags[i]) << "\", \"n\": " << *c.n
          << ", \"m\": " << g.size() << ", \"graph6\": \"" << code << "\"}"
          << (i + 1 < tags.size() ? "," : "") << "\n";
    } else {
      out << FamilyName(tags[i]) << " " << code << "\n";
    }
  }
  if (c.format == "json") out << "]\n";
  body = out.str();
  return kExitOk;
}

int RunEnumerate(const Config& c, std::string& body) {
  if (!c.n) throw UsageError("enumerate needs --n");
  if (c.m.has_value() == c.k.has_value()) {
    throw UsageError("enumerate needs exactly one of --m (connected) or --k "
                     "(dominating)");
  }
  GraphCatalog catalog(c.workers);
  std::vector<Graph> graphs;
  if (c.m) {
    if (*c.n > kMaxCanonicalOrder) {
      throw UsageError("enumerate supports n <= " +
                       std::to_string(kMaxCanonicalOrder));
    }
    for (const GraphClass& cls : catalog.Connected(*c.n, *c.m)) {
      graphs.push_back(ToGraph(cls.graph));
    }
  } else {
    if (*c.k > (*c.n - 1) * (*c.n - 2) / 2 || *c.k < 0) {
      throw UsageError("--k must lie in [0, (n-1)(n-2)/2]");
    }
    graphs = EnumerateDominating(*c.n, *c.k, &catalog);
  }
  if (c.format == "json") {
    std::ostringstream out;
    out << "[\n";
    for (std::size_t i = 0; i < graphs.size(); ++i) {
      out << "  \"" << EncodeGraph6(graphs[i]) << "\""
          << (i + 1 < graphs.size() ? "," : "") << "\n";
    }
    out << "]\n";
    body = out.str();
  } else {
    body = WriteGraph6Lines(graphs);
  }
  return kExitOk;
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Bond-incident-degree indices: evaluation, extremal search "
               "and verification"};
  app.name("bidx");
  app.require_subcommand(1);
  Config c;

  auto* compute = app.add_subcommand("compute", "index value of a graph");
  AddIndexFlags(compute, c.idx, true);
  auto* source = compute->add_option_group("source");
  source->add_option("--graph6", c.graph6, "inline graph6 string");
  source->add_option("--in", c.in, "graph6 lines or an edge-list file");
  source->require_option(1);
  AddOutputFlags(compute, c, {"text", "json", "csv"});

  auto* search = app.add_subcommand("search", "brute-force extremal search");
  AddIndexFlags(search, c.idx, true);
  search->add_option("--n", c.n, "vertices");
  search->add_option("--m", c.m, "edges");
  search->add_option("--n-min", c.n_min, "sweep from this n (m = n-1..n+3)");
  search->add_option("--n-max", c.n_max, "sweep up to this n");
  search->add_option("--direction", c.direction, "max or min")
      ->check(CLI::IsMember({"max", "min"}));
  AddOutputFlags(search, c, {"text", "json", "csv", "graph6"});
  AddWorkers(search, c);

  auto* verify = app.add_subcommand("verify", "theorem or condition checks");
  verify->add_option("--theorem", c.theorem, "thm2, thm4, thm6 or lemma2")
      ->check(CLI::IsMember({"thm2", "thm4", "thm6", "lemma2"}));
  AddIndexFlags(verify, c.idx, false);
  verify->add_option("--alphas,--params", c.params,
                     "comma-separated parameter list")
      ->delimiter(',');
  verify->add_option("--n", c.n, "single n");
  verify->add_option("--n-min", c.n_min, "smallest n");
  verify->add_option("--n-max", c.n_max, "largest n");
  verify->add_option("--oracle-max-n", c.oracle_max_n,
                     "largest n for brute-force cells")
      ->check(CLI::Range(1, kMaxCanonicalOrder));
  verify->add_flag("--conditions", c.conditions,
                   "check the dominating-vertex conditions instead");
  verify->add_option("--grid", c.grid, "condition grid bound")
      ->check(CLI::Range(3, 100000));
  verify->add_option("--direction", c.direction, "max or min")
      ->check(CLI::IsMember({"max", "min"}));
  AddOutputFlags(verify, c, {"text", "json", "csv"});
  AddWorkers(verify, c);

  auto* families = app.add_subcommand("families", "named family graphs");
  families->add_option("--n", c.n, "vertices")->required();
  families->add_option("--family", c.family_names, "family names (default all)")
      ->delimiter(',');
  AddOutputFlags(families, c, {"text", "graph6", "json"});

  auto* enumerate = app.add_subcommand("enumerate", "isomorph-free enumeration");
  enumerate->add_option("--n", c.n, "vertices")->required();
  enumerate->add_option("--m", c.m, "edges (connected graphs)");
  enumerate->add_option("--k", c.k, "remainder edges (dominating graphs)");
  AddOutputFlags(enumerate, c, {"graph6", "json"});
  AddWorkers(enumerate, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (c.format.empty()) c.format = compute->parsed() || search->parsed() ||
                                           verify->parsed() || families->parsed()
                                       ? "text"
                                       : "graph6";

  std::string body;
  int status = kExitOk;
  try {
    if (compute->parsed()) {
      status = RunCompute(c, body);
    } else if (search->parsed()) {
      status = RunSearch(c, body);
    } else if (verify->parsed()) {
      status = RunVerify(c, body);
    } else if (families->parsed()) {
      status = RunFamilies(c, body);
    } else {
      status = RunEnumerate(c, body);
    }
  } catch (const Graph6Error& e) {
    err << "bidx: invalid graph6: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "bidx: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "bidx: " << e.what() << "\n";
    return kExitUsage;
  }

  if (c.out.empty()) {
    out << body;
  } else {
    std::ofstream file(c.out, std::ios::binary);
    file << body;
    if (!file) {
      err << "bidx: cannot write " << c.out << "\n";
      return kExitUsage;
    }
  }
  return status;
}

}  // namespace bidx::cli
