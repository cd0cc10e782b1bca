#ifndef BIDX_CONDITIONS_H_
#define BIDX_CONDITIONS_H_

#include <compare>
#include <optional>
#include <string_view>

#include "bidx/indices.h"

namespace bidx {

// A point of the condition grid: x >= c > t >= 1, c >= 2, y >= 1.
struct ConditionTuple {
  int x = 0;
  int c = 0;
  int t = 0;
  int y = 0;

  auto operator<=>(const ConditionTuple&) const = default;
};

// For f the integer extension of psi:
//   delta1 = f(x+t, y) - f(x, y) + f(c-t, y) - f(c, y)
//   delta2 = f(x+t, c-t) - f(x, c)
struct ConditionDeltas {
  double delta1 = 0.0;
  double delta2 = 0.0;
  // Largest |f| among the terms; sets the zero tolerance.
  double magnitude = 0.0;
};

ConditionDeltas EvaluateDeltas(const IndexSpec& spec, ConditionTuple tuple);

enum class Strictness {
  kStrictMonotone,         // f strictly monotone in each variable
  kWeakWithPositiveDelta,  // weakly monotone, one delta strict everywhere
  kFailed,
};

std::string_view StrictnessName(Strictness s);

enum class ViolationKind {
  kDelta1Sign,
  kDelta2Sign,
  kMonotonicity,   // f(x+1, y) - f(x, y) has the wrong sign; c = t = 0
  kNoStrictDelta,  // weakly monotone but both deltas vanish here
};

std::string_view ViolationName(ViolationKind kind);

struct Counterexample {
  ViolationKind kind = ViolationKind::kDelta1Sign;
  ConditionTuple tuple;
  double delta1 = 0.0;
  double delta2 = 0.0;
  // For kMonotonicity: f(x+1, y) - f(x, y).
  double step = 0.0;
};

struct ConditionReport {
  Direction mode = Direction::kMax;
  int grid_bound = 0;
  bool monotone_ok = false;
  bool delta1_ok = false;
  bool delta2_ok = false;
  Strictness strictness = Strictness::kFailed;
  std::optional<Counterexample> counterexample;

  bool passed() const { return strictness != Strictness::kFailed; }
};

// Float-path values within 1e-12 of zero (relative to the largest term once
// that exceeds 1) count as zero. Indices with an integer form are checked
// in exact arithmetic, and SEI deltas are taken from the per-vertex terms
// a^d since the shared a^y terms cancel.
inline constexpr double kConditionZeroTolerance = 1e-12;

// Checks the dominating-vertex conditions on every integer tuple
// with 1 <= y <= N, 2 <= c <= x <= N, 1 <= t < c. kMax needs both deltas
// non-negative plus strict monotonic increase, or weak increase with one
// delta positive at each tuple; kMin mirrors the signs. The reported
// counterexample is the lexicographically smallest (x, c, t, y) violation,
// whatever the worker count. Throws IndexError when grid_bound < 3.
ConditionReport CheckConditions(const IndexSpec& spec, Direction mode,
                                int grid_bound, int workers = 1);

// Re-evaluates the counterexample and reports whether the same violation
// (same kind and sign) occurs.
bool ReplayCounterexample(const IndexSpec& spec, Direction mode,
                          const Counterexample& cex);

}  // namespace bidx

#endif  // BIDX_CONDITIONS_H_
