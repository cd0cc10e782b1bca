#include "bidx/indices.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bidx/enumerate.h"
#include "test_util.h"

namespace bidx {
namespace {

// Sum of psi over an explicit degree-pair list.
double PairSum(const IndexSpec& spec,
               std::initializer_list<std::pair<int, int>> pairs) {
  double total = 0.0;
  for (auto [a, b] : pairs) total += spec.Psi(a, b);
  return total;
}

TEST(IndicesTest, Examples) {
  EXPECT_EQ(EvaluateBid(IndexSpec::Sei(2), BuildGraph(2, {{0, 1}})).exact, 4);
  EXPECT_EQ(EvaluateBid(IndexSpec::Chi(1), StarGraph(4)).exact, 12);
  EXPECT_EQ(EvaluateBid(IndexSpec::Platt(), StarGraph(4)).exact, 6);
  EXPECT_EQ(EvaluateBid(IndexSpec::M1(), StarGraph(4)).exact, 12);
  EXPECT_EQ(EvaluateBid(IndexSpec::Chi(2), CompleteGraph(3)).exact, 48);
}

TEST(IndicesTest, ParameterValidation) {
  EXPECT_THROW(IndexSpec::Chi(0), IndexError);
  EXPECT_THROW(IndexSpec::Sei(1), IndexError);
  EXPECT_THROW(IndexSpec::Sei(-2), IndexError);
  EXPECT_THROW(IndexSpec::FromName("zagreb", 1), IndexError);
  EXPECT_THROW(IndexSpec::Custom("none", nullptr), IndexError);
}

TEST(IndicesTest, PlattZeroPower) {
  const Graph k2 = BuildGraph(2, {{0, 1}});
  EXPECT_EQ(EvaluateBid(IndexSpec::Pl(2), k2).value, 0.0);
  EXPECT_EQ(EvaluateBid(IndexSpec::Pl(0.5), k2).value, 0.0);
  EXPECT_THROW(EvaluateBid(IndexSpec::Pl(-1), k2), IndexError);
  EXPECT_NEAR(EvaluateBid(IndexSpec::Pl(-1), PathGraph(3)).value, 2.0, 1e-15);
}

TEST(IndicesTest, ExactPath) {
  EXPECT_TRUE(IndexSpec::Chi(3).HasExactPath());
  EXPECT_FALSE(IndexSpec::Chi(1.5).HasExactPath());
  EXPECT_FALSE(IndexSpec::Chi(-2).HasExactPath());
  EXPECT_TRUE(IndexSpec::Sei(3).HasExactPath());
  EXPECT_FALSE(IndexSpec::Sei(0.5).HasExactPath());
  const IndexValue v = EvaluateBid(IndexSpec::Chi(1.5), StarGraph(5));
  EXPECT_FALSE(v.exact.has_value());
  EXPECT_NEAR(v.value, 4 * std::pow(5.0, 1.5), 1e-12);
  // Overflow falls back to the float path.
  const IndexValue big = EvaluateBid(IndexSpec::Chi(40), CompleteGraph(12));
  EXPECT_FALSE(big.exact.has_value());
  EXPECT_NEAR(big.value / (66 * std::pow(22.0, 40)), 1.0, 1e-12);
}

TEST(IndicesTest, CustomIndex) {
  const IndexSpec inverse =
      IndexSpec::Custom("inverse", [](int a, int b) { return 1.0 / (a * b); });
  EXPECT_EQ(inverse.Name(), "inverse");
  EXPECT_NEAR(EvaluateBid(inverse, StarGraph(5)).value, 1.0, 1e-15);
}

TEST(IndicesTest, CompareValues) {
  EXPECT_EQ(CompareValues({2.0, 2}, {2.0, 2}), 0);
  EXPECT_EQ(CompareValues({2.0, 2}, {3.0, 3}), -1);
  EXPECT_EQ(CompareValues({1.0, std::nullopt}, {1.0 + 1e-12, std::nullopt}), 0);
  EXPECT_EQ(CompareValues({1.0, std::nullopt}, {1.0 + 1e-6, std::nullopt}), -1);
}

TEST(ClosedFormTest, Examples) {
  EXPECT_EQ(ClosedForm(IndexSpec::Chi(1), {FamilyTag::kB1, 6}).exact, 44);
  EXPECT_EQ(ClosedForm(IndexSpec::Chi(2), {FamilyTag::kB2, 5}).exact, 176);
  // Independent tallies from the degree sequences.
  EXPECT_DOUBLE_EQ(44.0, PairSum(IndexSpec::Chi(1), {{5, 3}, {5, 2}, {5, 2}, {5, 1},
                                                     {5, 1}, {3, 2}, {3, 2}}));
  EXPECT_DOUBLE_EQ(176.0, PairSum(IndexSpec::Chi(2), {{4, 2}, {4, 2}, {4, 2},
                                                      {4, 2}, {2, 2}, {2, 2}}));
  for (int n = 3; n <= 20; ++n) {
    for (double alpha : {1.0, 1.5, 2.0, 3.0}) {
      const double expected = (n - 1) * std::pow(n, alpha);
      EXPECT_NEAR(ClosedForm(IndexSpec::Chi(alpha), {FamilyTag::kS, n}).value,
                  expected, 1e-12 * expected);
    }
  }
}

TEST(ClosedFormTest, MatchesEvaluation) {
  const IndexSpec specs[] = {IndexSpec::Chi(1),   IndexSpec::Chi(2.5),
                             IndexSpec::Pl(3),    IndexSpec::Pl(1.5),
                             IndexSpec::Sei(2),   IndexSpec::Sei(1.5),
                             IndexSpec::M1(),     IndexSpec::Platt()};
  for (const IndexSpec& spec : specs) {
    for (FamilyTag tag : kAllFamilyTags) {
      if (!HasClosedForm(tag)) continue;
      for (int n = MinimumOrder(tag); n <= 30; ++n) {
        const IndexValue a = ClosedForm(spec, {tag, n});
        const IndexValue b = EvaluateBid(spec, MakeFamily({tag, n}));
        EXPECT_EQ(CompareValues(a, b), 0) << spec.Label() << " " << FamilyName(tag);
      }
    }
  }
}

TEST(ClosedFormTest, Rejections) {
  EXPECT_THROW(ClosedForm(IndexSpec::Chi(1), {FamilyTag::kH1, 6}), IndexError);
  EXPECT_THROW(ClosedForm(IndexSpec::Chi(1), {FamilyTag::kG1, 5}), IndexError);
  EXPECT_THROW(
      ClosedForm(IndexSpec::Custom("c", [](int, int) { return 1.0; }),
                 {FamilyTag::kS, 5}),
      IndexError);
}

TEST(LineGraphSizeTest, Examples) {
  EXPECT_TRUE(LineGraphSizeCheck(StarGraph(4)));
  EXPECT_TRUE(LineGraphSizeCheck(CycleGraph(5)));
  EXPECT_TRUE(LineGraphSizeCheck(CompleteGraph(4)));
  EXPECT_EQ(LineGraph(CompleteGraph(4)).size(), 12);
  EXPECT_THROW(LineGraphSizeCheck(BuildGraph(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST(IndicesPropertyTest, StructuralIdentitiesOnCorpus) {
  GraphCatalog catalog(2);
  for (int n = 2; n <= 7; ++n) {
    for (int m = n - 1; m <= n * (n - 1) / 2; ++m) {
      for (const GraphClass& c : catalog.Connected(n, m)) {
        const Graph g = ToGraph(c.graph);
        const std::int64_t m1 = *EvaluateBid(IndexSpec::M1(), g).exact;
        EXPECT_EQ(LineGraph(g).size(), m1 / 2 - m);
        EXPECT_EQ(*EvaluateBid(IndexSpec::Platt(), g).exact, m1 - 2 * m);
        EXPECT_EQ(*EvaluateBid(IndexSpec::Pl(1), g).exact, m1 - 2 * m);
        EXPECT_EQ(*EvaluateBid(IndexSpec::Chi(1), g).exact, m1);
      }
    }
  }
}

TEST(IndicesPropertyTest, SeiVertexForm) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = testing::RandomConnectedGraph(rng, 3 + trial % 10, trial % 8);
    for (double a : {0.5, 1.5, 3.0}) {
      double vertex_sum = 0.0;
      for (Vertex v = 0; v < g.order(); ++v) {
        vertex_sum += g.degree(v) * std::pow(a, g.degree(v));
      }
      EXPECT_NEAR(EvaluateBid(IndexSpec::Sei(a), g).value, vertex_sum,
                  1e-12 * vertex_sum);
    }
  }
}

}  // namespace
}  // namespace bidx
