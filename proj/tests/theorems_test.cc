#include "bidx/theorems.h"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

namespace bidx {
namespace {

using T = FamilyTag;

TEST(CompareFamiliesTest, Examples) {
  EXPECT_EQ(CompareFamilies(IndexSpec::Chi(1), {T::kG4, 6}, {T::kG5, 6}).exact, 0);
  EXPECT_EQ(CompareFamilies(IndexSpec::Chi(3), {T::kG4, 6}, {T::kG5, 6}).exact, 6);
  EXPECT_EQ(CompareFamilies(IndexSpec::Sei(2), {T::kB1, 6}, {T::kB2, 6}).exact, 10);
  EXPECT_THROW(CompareFamilies(IndexSpec::M1(), {T::kG4, 6}, {T::kG5, 7}),
               GraphError);
}

TEST(CompareFamiliesTest, MatchesFullEvaluation) {
  for (double alpha : {1.2, 2.0, 2.9}) {
    const IndexSpec spec = IndexSpec::Chi(alpha);
    for (int n = 7; n <= 20; ++n) {
      for (T a : kAllFamilyTags) {
        if (n < MinimumOrder(a)) continue;
        const double full = EvaluateBid(spec, MakeFamily({a, n})).value -
                            EvaluateBid(spec, MakeFamily({T::kS, n})).value;
        const double diff = CompareFamilies(spec, {a, n}, {T::kS, n}).value;
        EXPECT_NEAR(diff, full, 1e-9 * std::max(1.0, std::fabs(full)));
      }
    }
  }
}

TEST(DisplayedDifferenceTest, AgreesWithEvaluation) {
  const IndexSpec specs[] = {IndexSpec::Chi(1.5), IndexSpec::Pl(2.5),
                             IndexSpec::Sei(1.5), IndexSpec::Chi(3)};
  const std::pair<T, T> pairs[] = {{T::kB1, T::kB2}, {T::kG4, T::kG5},
                                   {T::kH4, T::kH5}};
  for (const IndexSpec& spec : specs) {
    for (auto [a, b] : pairs) {
      for (int n = 6; n <= 40; ++n) {
        const auto shown = DisplayedDifference(spec, a, b, n);
        if (spec.kind() == IndexKind::kSei && a == T::kH4) {
          EXPECT_FALSE(shown.has_value());
          continue;
        }
        ASSERT_TRUE(shown.has_value());
        const double direct = CompareFamilies(spec, {a, n}, {b, n}).value;
        EXPECT_NEAR(static_cast<double>(*shown), direct,
                    1e-9 * std::max(1.0, std::fabs(direct)))
            << spec.Label() << " " << FamilyName(a) << " n=" << n;
      }
    }
  }
}

TEST(ExpectedMaximizersTest, Table) {
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 7, 6), std::vector<T>{T::kS});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 7, 7), std::vector<T>{T::kSPlus});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 7, 8), std::vector<T>{T::kB1});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(1.5), 7, 9), std::vector<T>{T::kG5});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(3), 7, 9), std::vector<T>{T::kG4});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 7, 9),
            (std::vector<T>{T::kG4, T::kG5}));
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Sei(1.5), 7, 9), std::vector<T>{T::kG4});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 4, 6), std::vector<T>{T::kG5});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 5, 8), std::vector<T>{T::kH5});
  EXPECT_EQ(ExpectedMaximizers(IndexSpec::Chi(2), 6, 9), std::vector<T>{T::kH4});
  EXPECT_TRUE(ExpectedMaximizers(IndexSpec::Chi(0.5), 7, 9).empty());
  EXPECT_TRUE(ExpectedMaximizers(IndexSpec::Chi(2), 7, 11).empty());
}

TEST(SeiPolynomialTest, G4BeatsG3) {
  for (double a : {1.1, 1.5, 2.0, 3.0}) {
    for (int n = 5; n <= 10; ++n) {
      EXPECT_GT(CompareFamilies(IndexSpec::Sei(a), {T::kG4, n}, {T::kG3, n}).value,
                0.0);
    }
  }
}

TEST(VerifyTheoremTest, AllTheoremsPass) {
  GraphCatalog catalog(2);
  VerifyOptions options;
  options.catalog = &catalog;
  options.oracle_max_n = 8;
  options.workers = 2;
  const double alphas[] = {1, 1.5, 2, 3};
  const double bases[] = {1.5, 2};
  const double chi2[] = {2};
  const TheoremReport thm2 = VerifyTheorem(TheoremId::kThm2, 5, 7, alphas, options);
  const TheoremReport thm4 = VerifyTheorem(TheoremId::kThm4, 5, 7, alphas, options);
  const TheoremReport thm6 = VerifyTheorem(TheoremId::kThm6, 5, 8, bases, options);
  const TheoremReport lemma2 = VerifyTheorem(TheoremId::kLemma2, 4, 8, chi2, options);
  for (const TheoremReport* r : {&thm2, &thm4, &thm6, &lemma2}) {
    EXPECT_TRUE(r->overall) << TheoremName(r->id);
    EXPECT_FALSE(r->cells.empty());
    for (const TheoremCell& c : r->cells) {
      EXPECT_NE(c.verdict, Verdict::kFail)
          << TheoremName(r->id) << " " << c.check << " n=" << c.n << " " << c.detail;
    }
  }
  EXPECT_EQ(thm2.parameter_grid.size(), 12u);
}

TEST(VerifyTheoremTest, DeterministicAcrossWorkers) {
  const double alphas[] = {1.5, 2.5};
  VerifyOptions one;
  one.oracle_max_n = 7;
  VerifyOptions many = one;
  many.workers = 4;
  const TheoremReport a = VerifyTheorem(TheoremId::kThm2, 5, 8, alphas, one);
  const TheoremReport b = VerifyTheorem(TheoremId::kThm2, 5, 8, alphas, many);
  ASSERT_EQ(a.cells.size(), b.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    EXPECT_EQ(a.cells[i].check, b.cells[i].check);
    EXPECT_EQ(a.cells[i].lhs, b.cells[i].lhs);
  }
}

TEST(VerifyTheoremTest, Rejections) {
  const double low[] = {0.5};
  const double one[] = {1.0};
  const double ok[] = {2.0};
  EXPECT_THROW(VerifyTheorem(TheoremId::kThm2, 5, 6, low), std::invalid_argument);
  EXPECT_THROW(VerifyTheorem(TheoremId::kThm6, 5, 6, one), std::invalid_argument);
  EXPECT_THROW(VerifyTheorem(TheoremId::kThm2, 3, 6, ok), std::invalid_argument);
  EXPECT_THROW(VerifyTheorem(TheoremId::kThm2, 5, 6, {}), std::invalid_argument);
}

TEST(TheoremIdTest, Names) {
  for (TheoremId id : {TheoremId::kThm2, TheoremId::kThm4, TheoremId::kThm6,
                       TheoremId::kLemma2}) {
    EXPECT_EQ(ParseTheoremId(TheoremName(id)), id);
  }
  EXPECT_FALSE(ParseTheoremId("thm3").has_value());
}

}  // namespace
}  // namespace bidx
