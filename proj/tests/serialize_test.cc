#include "bidx/serialize.h"

#include <gtest/gtest.h>

#include <sstream>

#include "bidx/families.h"
#include "json.hpp"

namespace bidx {
namespace {

using Json = nlohmann::json;

TEST(SerializeTest, ExtremalJsonAndCsv) {
  const ExtremalResult r = ExtremalSearch(6, 5, IndexSpec::Chi(2), Direction::kMax);
  const Json doc = Json::parse(ToJson(r));
  EXPECT_EQ(doc.at("n"), 6);
  EXPECT_EQ(doc.at("m"), 5);
  const std::vector<ExtremalResult> many{r, r};
  const std::string csv = ToCsv(many);
  std::istringstream lines(csv);
  std::string header, row;
  std::getline(lines, header);
  EXPECT_EQ(header, "n,m,index,param,direction,optimum,optimizer_graph6_list");
  std::getline(lines, row);
  EXPECT_EQ(row.rfind("6,5,chi,2,max,180,", 0), 0u) << row;
  EXPECT_EQ(Json::parse(ToJson(std::span<const ExtremalResult>(many))).size(), 2u);
}

TEST(SerializeTest, TheoremJsonAndCsv) {
  const double alphas[] = {2};
  VerifyOptions options;
  options.oracle_max_n = 6;
  const TheoremReport report = VerifyTheorem(TheoremId::kThm2, 5, 6, alphas, options);
  const Json doc = Json::parse(ToJson(report));
  EXPECT_EQ(doc.at("theorem"), "thm2");
  EXPECT_EQ(doc.at("cells").size(), report.cells.size());
  const std::string csv = ToCsv(report);
  EXPECT_EQ(csv.substr(0, csv.find('\n')),
            "theorem,n,param,m,check,verdict,lhs,relation,rhs,detail");
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'),
            static_cast<long>(report.cells.size()) + 1);
}

TEST(SerializeTest, ConditionJson) {
  const ConditionReport report =
      CheckConditions(IndexSpec::Chi(0.5), Direction::kMax, 10, 1);
  const Json doc = Json::parse(ToJson(IndexSpec::Chi(0.5), report));
  EXPECT_FALSE(doc.at("passed").get<bool>());
}

TEST(SerializeTest, TraceRoundTrip) {
  const Graph start = CycleGraph(7);
  const DominationResult result = Dominate(start, IndexSpec::Chi(2));
  const std::vector<ShiftMove> moves = ParseTraceJson(ToJson(start, result));
  ASSERT_EQ(moves.size(), result.trace.size());
  EXPECT_EQ(ReplayTrace(start, moves), result.graph);
  EXPECT_THROW(ParseTraceJson("{"), SerializeError);
  EXPECT_THROW(ParseTraceJson("{\"trace\": [{\"u\": 1}]}"), SerializeError);
}

TEST(SerializeTest, Numbers) {
  EXPECT_EQ(FormatValue({180.0, 180}), "180");
  EXPECT_EQ(FormatDouble(0.5), "0.5");
}

}  // namespace
}  // namespace bidx
