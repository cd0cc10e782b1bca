#ifndef BIDX_THEOREMS_H_
#define BIDX_THEOREMS_H_

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bidx/enumerate.h"
#include "bidx/families.h"
#include "bidx/graph.h"
#include "bidx/indices.h"

namespace bidx {

// BID(a) - BID(b). Both families must have the same n (GraphError
// otherwise). Edges with equal degree pairs cancel before any rounding.
IndexValue CompareFamilies(const IndexSpec& spec, FamilyId a, FamilyId b);

// The same difference for arbitrary graphs.
IndexValue CompareGraphs(const IndexSpec& spec, const Graph& a, const Graph& b);

// Closed-form BID(a) - BID(b) at order n, where one is known:
//   chi, pl: B1-B2, G4-G5, H4-H5, and H5-H8 at n = 5; chi also G4-G1
//   sei:     B1-B2, G4-G1, G4-G2, G4-G3, G4-G5, and H5-H8 at n = 5
// nullopt for any other pair, kind, or an n too small for either family.
std::optional<long double> DisplayedDifference(const IndexSpec& spec,
                                               FamilyTag a, FamilyTag b, int n);

// The claimed maximizer set among connected (n, m) graphs for m up to
// n + 3. Empty when no claim applies (alpha < 1, a <= 1, m > n + 3, ...).
std::vector<FamilyTag> ExpectedMaximizers(const IndexSpec& spec, int n, int m);

enum class TheoremId { kThm2, kThm4, kThm6, kLemma2 };

std::string_view TheoremName(TheoremId id);
std::optional<TheoremId> ParseTheoremId(std::string_view name);

enum class Verdict { kPass, kFail, kSkipped };

std::string_view VerdictName(Verdict v);

struct TheoremCell {
  int n = 0;
  double param = 0.0;
  // Edge count for oracle cells, -1 otherwise.
  int m = -1;
  std::string check;
  Verdict verdict = Verdict::kSkipped;
  double lhs = 0.0;
  double rhs = 0.0;
  // How lhs must relate to rhs: "<", ">", "=", ">=", "~" (agree within
  // tolerance) or "set" (optimizer sets, listed in detail).
  std::string relation;
  std::string detail;
};

struct TheoremReport {
  TheoremId id = TheoremId::kThm2;
  // (param, n) pairs in evaluation order.
  std::vector<std::pair<double, int>> parameter_grid;
  std::vector<TheoremCell> cells;
  // No cell failed.
  bool overall = true;
  std::vector<std::string> notes;
};

struct VerifyOptions {
  // Oracle cells above this n are skipped.
  int oracle_max_n = kDefaultSweepBound;
  int workers = 1;
  // Index family for kLemma2.
  IndexKind lemma2_kind = IndexKind::kChi;
  // Shared enumeration cache; a private one is used when null.
  GraphCatalog* catalog = nullptr;
};

// Runs every check of the theorem over n in [n_min, n_max] and each
// parameter. thm2 and thm4 take alpha >= 1, thm6 takes a > 1; out of range
// parameters or n_min < 4 throw std::invalid_argument.
TheoremReport VerifyTheorem(TheoremId id, int n_min, int n_max,
                            std::span<const double> params,
                            const VerifyOptions& options = {});

}  // namespace bidx

#endif  // BIDX_THEOREMS_H_
