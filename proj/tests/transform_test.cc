#include "bidx/transform.h"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bidx/canonical.h"
#include "bidx/families.h"
#include "test_util.h"

namespace bidx {
namespace {

TEST(EdgeShiftTest, PathToStar) {
  // P4 as a-b-c-d with b = 1, c = 2.
  const Graph p4 = PathGraph(4);
  const ShiftResult r = EdgeShift(p4, 1, 2, IndexSpec::M1());
  EXPECT_TRUE(AreIsomorphic(r.graph, StarGraph(4)));
  EXPECT_EQ(r.move.delta.exact, 2);
  EXPECT_EQ(r.five_sum_delta.exact, 2);
  EXPECT_EQ(r.move.shifted, (std::vector<Vertex>{3}));
}

TEST(EdgeShiftTest, CycleGainsDegreeThree) {
  const ShiftResult r = EdgeShift(CycleGraph(5), 0, 1, IndexSpec::Chi(2));
  EXPECT_EQ(r.graph.order(), 5);
  EXPECT_EQ(r.graph.size(), 5);
  EXPECT_EQ(r.graph.MaxDegree(), 3);
  EXPECT_GT(*r.move.delta.exact, 0);
  EXPECT_EQ(r.move.delta.exact, r.five_sum_delta.exact);
}

TEST(EdgeShiftTest, Rejections) {
  EXPECT_THROW(EdgeShift(PathGraph(4), 0, 2, IndexSpec::M1()), GraphError);
  // Star: the leaf has no private neighbor.
  EXPECT_THROW(EdgeShift(StarGraph(4), 0, 1, IndexSpec::M1()), GraphError);
}

TEST(EdgeShiftTest, DegreeLawAndConservation) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = 3 + trial % 10;
    const Graph g = testing::RandomConnectedGraph(rng, n, trial % 7);
    for (const Edge& e : g.edges()) {
      for (auto [u, v] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
        const auto priv = PrivateNeighbors(g, u, v);
        if (priv.empty()) continue;
        const Graph h = ApplyShift(g, u, v);
        const int s = static_cast<int>(priv.size());
        EXPECT_EQ(h.order(), g.order());
        EXPECT_EQ(h.size(), g.size());
        EXPECT_TRUE(h.IsConnected());
        for (Vertex w = 0; w < n; ++w) {
          const int expected = w == u   ? g.degree(u) + s
                               : w == v ? g.degree(v) - s
                                        : g.degree(w);
          EXPECT_EQ(h.degree(w), expected);
        }
      }
    }
  }
}

TEST(EdgeShiftTest, FiveSumMatchesDirect) {
  std::mt19937_64 rng(23);
  const IndexSpec specs[] = {IndexSpec::M1(), IndexSpec::Chi(1.5),
                             IndexSpec::Pl(2.5), IndexSpec::Sei(1.3),
                             IndexSpec::Chi(-0.5)};
  for (int trial = 0; trial < 500; ++trial) {
    const Graph g = testing::RandomConnectedGraph(rng, 4 + trial % 9, trial % 10);
    for (const Edge& e : g.edges()) {
      if (PrivateNeighbors(g, e.u, e.v).empty()) continue;
      for (const IndexSpec& spec : specs) {
        const ShiftResult r = EdgeShift(g, e.u, e.v, spec);
        const double direct =
            EvaluateBid(spec, r.graph).value - EvaluateBid(spec, g).value;
        const double scale = std::max(1.0, EvaluateBid(spec, g).value);
        EXPECT_NEAR(r.five_sum_delta.value, r.move.delta.value,
                    1e-12 * std::max(1.0, std::fabs(r.move.delta.value)));
        EXPECT_NEAR(r.move.delta.value, direct, 1e-11 * scale);
      }
    }
  }
}

TEST(DominateTest, Examples) {
  const DominationResult star = Dominate(StarGraph(6), IndexSpec::Chi(2));
  EXPECT_TRUE(star.trace.empty());
  EXPECT_EQ(star.graph, StarGraph(6));

  const DominationResult path = Dominate(PathGraph(4), IndexSpec::M1());
  EXPECT_EQ(path.trace.size(), 1u);
  EXPECT_TRUE(AreIsomorphic(path.graph, StarGraph(4)));

  const IndexSpec chi2 = IndexSpec::Chi(2);
  const DominationResult cycle = Dominate(CycleGraph(5), chi2);
  EXPECT_TRUE(AreIsomorphic(cycle.graph, MakeFamily({FamilyTag::kSPlus, 5})));
  EXPECT_TRUE(cycle.monotone);
  Graph current = CycleGraph(5);
  for (const ShiftMove& move : cycle.trace) {
    const Graph next = ApplyShift(current, move.u, move.v);
    EXPECT_GE(EvaluateBid(chi2, next).value, EvaluateBid(chi2, current).value);
    current = next;
  }
  EXPECT_EQ(ReplayTrace(CycleGraph(5), cycle.trace), cycle.graph);
}

TEST(DominateTest, RandomGraphs) {
  std::mt19937_64 rng(29);
  const IndexSpec specs[] = {IndexSpec::Chi(1), IndexSpec::Chi(2.5),
                             IndexSpec::Pl(1.5), IndexSpec::Sei(2)};
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + trial % 11;
    const Graph g = testing::RandomConnectedGraph(rng, n, trial % 6);
    for (const IndexSpec& spec : specs) {
      const DominationResult r = Dominate(g, spec);
      EXPECT_EQ(r.graph.MaxDegree(), n - 1);
      EXPECT_EQ(r.graph.size(), g.size());
      EXPECT_TRUE(r.monotone) << spec.Label();
      EXPECT_LE(static_cast<int>(r.trace.size()), n * n);
      EXPECT_EQ(ReplayTrace(g, r.trace), r.graph);
    }
  }
}

TEST(DominateTest, FlagsNonMonotoneIndex) {
  // chi with alpha < 0 rewards low degrees, so shifting can lose value.
  const DominationResult r = Dominate(PathGraph(6), IndexSpec::Chi(-1));
  EXPECT_EQ(r.graph.MaxDegree(), 5);
  EXPECT_FALSE(r.monotone);
}

TEST(DominateTest, RejectsDisconnected) {
  EXPECT_THROW(Dominate(BuildGraph(4, {{0, 1}, {2, 3}}), IndexSpec::M1()),
               GraphError);
}

}  // namespace
}  // namespace bidx
