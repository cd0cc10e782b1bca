#include "bidx/graph6.h"

#include <gtest/gtest.h>

#include <random>

#include "bidx/enumerate.h"
#include "test_util.h"

namespace bidx {
namespace {

TEST(Graph6Test, DecodeExamples) {
  EXPECT_EQ(DecodeGraph6("A_"), BuildGraph(2, {{0, 1}}));
  EXPECT_EQ(DecodeGraph6("Bw"), CompleteGraph(3));
  EXPECT_EQ(DecodeGraph6("C~"), CompleteGraph(4));
  EXPECT_EQ(DecodeGraph6("@"), Graph());
}

TEST(Graph6Test, EncodeExamples) {
  EXPECT_EQ(EncodeGraph6(BuildGraph(2, {{0, 1}})), "A_");
  EXPECT_EQ(EncodeGraph6(CompleteGraph(3)), "Bw");
  EXPECT_EQ(EncodeGraph6(CompleteGraph(4)), "C~");
  // x(0,1) x(0,2) x(1,2) x(0,3) x(1,3) x(2,3) = 1 0 1 0 0 1 -> 101001 = 41
  EXPECT_EQ(EncodeGraph6(PathGraph(4)), "C" + std::string(1, 63 + 41));
}

TEST(Graph6Test, LongForm) {
  const Graph g = CycleGraph(70);
  const std::string text = EncodeGraph6(g);
  EXPECT_EQ(static_cast<unsigned char>(text[0]), 126);
  EXPECT_EQ(DecodeGraph6(text), g);
}

TEST(Graph6Test, RandomRoundTrip) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = testing::RandomConnectedGraph(rng, 1 + trial % 40, trial % 17);
    EXPECT_EQ(DecodeGraph6(EncodeGraph6(g)), g);
  }
}

TEST(Graph6Test, Errors) {
  EXPECT_THROW(DecodeGraph6(""), Graph6Error);
  EXPECT_THROW(DecodeGraph6("C"), Graph6Error);
  EXPECT_THROW(DecodeGraph6("B~~"), Graph6Error);
  EXPECT_THROW(DecodeGraph6(">>graph6<<Bw"), Graph6Error);
  try {
    DecodeGraph6("C\x01");
    FAIL();
  } catch (const Graph6Error& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
}

TEST(Graph6Test, Lines) {
  const std::vector<Graph> graphs = {PathGraph(3), CompleteGraph(4)};
  const std::string text = WriteGraph6Lines(graphs);
  EXPECT_EQ(text, EncodeGraph6(graphs[0]) + "\n" + EncodeGraph6(graphs[1]) + "\n");
  EXPECT_EQ(ReadGraph6Lines(text + "\n"), graphs);
  EXPECT_THROW(ReadGraph6Lines("Bw\nC\n"), Graph6Error);
}

TEST(Graph6Test, CorpusRoundTrip) {
  GraphCatalog catalog(2);
  for (int n = 1; n <= 7; ++n) {
    for (int m = n - 1; m <= n * (n - 1) / 2; ++m) {
      for (const GraphClass& c : catalog.Connected(n, m)) {
        const Graph g = ToGraph(c.graph);
        ASSERT_EQ(DecodeGraph6(EncodeGraph6(g)), g);
      }
    }
  }
}

}  // namespace
}  // namespace bidx
