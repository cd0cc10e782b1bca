#include "bidx/conditions.h"

#include <algorithm>
#include <cmath>
#include <exception>
#include <optional>
#include <utility>
#include <thread>
#include <vector>

namespace bidx {

std::string_view StrictnessName(Strictness s) {
  switch (s) {
    case Strictness::kStrictMonotone:
      return "STRICT_MONOTONE";
    case Strictness::kWeakWithPositiveDelta:
      return "WEAK_WITH_POSITIVE_DELTA";
    case Strictness::kFailed:
      return "FAILED";
  }
  return "FAILED";
}

std::string_view ViolationName(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::kDelta1Sign:
      return "delta1_sign";
    case ViolationKind::kDelta2Sign:
      return "delta2_sign";
    case ViolationKind::kMonotonicity:
      return "monotonicity";
    case ViolationKind::kNoStrictDelta:
      return "no_strict_delta";
  }
  return "unknown";
}

namespace {

bool CheckedMul(__int128 a, __int128 b, __int128* out) {
  return !__builtin_mul_overflow(a, b, out);
}

std::optional<__int128> Pow128(__int128 base, int exp) {
  __int128 out = 1;
  for (int i = 0; i < exp; ++i) {
    if (!CheckedMul(out, base, &out)) return std::nullopt;
  }
  return out;
}

// Psi on degrees 1..max_degree, tabulated once. Integer indices also get an
// __int128 table so signs and zeros are decided exactly. SEI is stored per
// vertex, a^d, because the shared a^y terms cancel in every delta.
class PsiTable {
 public:
  PsiTable(const IndexSpec& spec, int max_degree)
      : spec_(spec), n_(max_degree + 1), separable_(spec.kind() == IndexKind::kSei) {
    if (separable_) {
      vertex_.resize(n_);
      for (int d = 1; d < n_; ++d) {
        vertex_[d] = std::pow(static_cast<long double>(spec.param()), d);
      }
    } else {
      value_.resize(n_ * n_);
      for (int a = 1; a < n_; ++a) {
        for (int b = 1; b < n_; ++b) value_[a * n_ + b] = spec.PsiLong(a, b);
      }
    }
    BuildExact();
  }

  bool exact() const { return exact_; }

  long double Psi(int a, int b) const {
    return separable_ ? vertex_[a] + vertex_[b] : value_[a * n_ + b];
  }
  __int128 ExactPsi(int a, int b) const { return exact_value_[a * n_ + b]; }

  ConditionDeltas Deltas(ConditionTuple p) const {
    ConditionDeltas out;
    if (separable_) {
      const long double g[] = {vertex_[p.x + p.t], vertex_[p.x],
                               vertex_[p.c - p.t], vertex_[p.c]};
      const long double d = (g[0] - g[1]) + (g[2] - g[3]);
      out.delta1 = static_cast<double>(d);
      out.delta2 = out.delta1;
      out.magnitude = static_cast<double>(std::max({g[0], g[1], g[2], g[3]}));
    } else {
      const long double t[] = {Psi(p.x + p.t, p.y), Psi(p.x, p.y),
                               Psi(p.c - p.t, p.y), Psi(p.c, p.y),
                               Psi(p.x + p.t, p.c - p.t), Psi(p.x, p.c)};
      out.delta1 = static_cast<double>((t[0] - t[1]) + (t[2] - t[3]));
      out.delta2 = static_cast<double>(t[4] - t[5]);
      long double m = 0;
      for (long double v : t) m = std::max(m, std::fabs(v));
      out.magnitude = static_cast<double>(m);
    }
    return out;
  }

  // Exact deltas; only valid when exact().
  std::pair<__int128, __int128> ExactDeltas(ConditionTuple p) const {
    const __int128 d1 = (ExactPsi(p.x + p.t, p.y) - ExactPsi(p.x, p.y)) +
                        (ExactPsi(p.c - p.t, p.y) - ExactPsi(p.c, p.y));
    const __int128 d2 = ExactPsi(p.x + p.t, p.c - p.t) - ExactPsi(p.x, p.c);
    return {d1, d2};
  }

  // f(x + 1, y) - f(x, y) and the larger magnitude of the two terms.
  std::pair<long double, long double> Step(int x, int y) const {
    if (separable_) {
      return {vertex_[x + 1] - vertex_[x], std::max(vertex_[x + 1], vertex_[x])};
    }
    const long double hi = Psi(x + 1, y);
    const long double lo = Psi(x, y);
    return {hi - lo, std::max(std::fabs(hi), std::fabs(lo))};
  }

 private:
  void BuildExact() {
    if (!spec_.HasExactPath()) return;
    const int k = static_cast<int>(spec_.param());
    exact_value_.assign(n_ * n_, 0);
    for (int a = 1; a < n_; ++a) {
      for (int b = 1; b < n_; ++b) {
        std::optional<__int128> v;
        switch (spec_.kind()) {
          case IndexKind::kChi:
            v = Pow128(a + b, k);
            break;
          case IndexKind::kPl:
            v = Pow128(a + b - 2, k);
            break;
          case IndexKind::kSei: {
            const auto pa = Pow128(k, a);
            const auto pb = Pow128(k, b);
            if (pa && pb && *pa < (__int128{1} << 125) && *pb < (__int128{1} << 125)) {
              v = *pa + *pb;
            }
            break;
          }
          case IndexKind::kM1:
            v = a + b;
            break;
          case IndexKind::kPlatt:
            v = a + b - 2;
            break;
          case IndexKind::kCustom:
            break;
        }
        if (!v || *v > (__int128{1} << 120)) {
          exact_value_.clear();
          return;
        }
        exact_value_[a * n_ + b] = *v;
      }
    }
    exact_ = true;
  }

  const IndexSpec& spec_;
  int n_;
  bool separable_;
  bool exact_ = false;
  std::vector<long double> vertex_;
  std::vector<long double> value_;
  std::vector<__int128> exact_value_;
};

int SignOf(__int128 v) { return (v > 0) - (v < 0); }

int MaxDegreeFor(ConditionTuple p) {
  return std::max({p.x + p.t, p.c, p.y}) + 1;
}

}  // namespace

ConditionDeltas EvaluateDeltas(const IndexSpec& spec, ConditionTuple p) {
  if (spec.kind() == IndexKind::kSei) {
    const long double a = spec.param();
    const long double g[] = {std::pow(a, p.x + p.t), std::pow(a, p.x),
                             std::pow(a, p.c - p.t), std::pow(a, p.c)};
    const double d = static_cast<double>((g[0] - g[1]) + (g[2] - g[3]));
    return {d, d, static_cast<double>(std::max({g[0], g[1], g[2], g[3]}))};
  }
  const long double t[] = {spec.PsiLong(p.x + p.t, p.y), spec.PsiLong(p.x, p.y),
                           spec.PsiLong(p.c - p.t, p.y), spec.PsiLong(p.c, p.y),
                           spec.PsiLong(p.x + p.t, p.c - p.t),
                           spec.PsiLong(p.x, p.c)};
  long double m = 0;
  for (long double v : t) m = std::max(m, std::fabs(v));
  return {static_cast<double>((t[0] - t[1]) + (t[2] - t[3])),
          static_cast<double>(t[4] - t[5]), static_cast<double>(m)};
}

namespace {

double ZeroTolerance(double magnitude) {
  return kConditionZeroTolerance * std::max(1.0, magnitude);
}

struct SliceResult {
  bool delta1_ok = true;
  bool delta2_ok = true;
  std::optional<Counterexample> sign_violation;
  std::optional<Counterexample> no_strict;
};

void KeepSmallest(std::optional<Counterexample>& slot,
                  const Counterexample& candidate) {
  if (!slot || candidate.tuple < slot->tuple) slot = candidate;
}

// -1 for a wrong-signed value, 0 for zero, +1 for a good value; oriented so
// that kMax wants non-negative deltas.
struct DeltaSigns {
  int delta1;
  int delta2;
};

int Classify(double value, double tol) {
  if (value < -tol) return -1;
  return value > tol ? 1 : 0;
}

DeltaSigns Signs(const PsiTable& table, Direction mode, ConditionTuple tuple,
                 const ConditionDeltas& d) {
  const int sign = mode == Direction::kMax ? 1 : -1;
  if (table.exact()) {
    const auto [e1, e2] = table.ExactDeltas(tuple);
    return {sign * SignOf(e1), sign * SignOf(e2)};
  }
  const double tol = ZeroTolerance(d.magnitude);
  return {Classify(sign * d.delta1, tol), Classify(sign * d.delta2, tol)};
}

// +1 strict increase in the orientation, 0 flat, -1 wrong direction.
int StepSign(const PsiTable& table, Direction mode, int x, int y) {
  const int sign = mode == Direction::kMax ? 1 : -1;
  if (table.exact()) {
    return sign * SignOf(table.ExactPsi(x + 1, y) - table.ExactPsi(x, y));
  }
  const auto [step, magnitude] = table.Step(x, y);
  const double oriented = sign * static_cast<double>(step);
  if (oriented > 0.0) return 1;
  return oriented < -ZeroTolerance(static_cast<double>(magnitude)) ? -1 : 0;
}

// All tuples with the given y. Within a slice the loops run in (x, c, t)
// order, so the first violation found is the slice's smallest.
SliceResult ScanSlice(const PsiTable& table, Direction mode, int bound, int y) {
  SliceResult out;
  for (int x = 2; x <= bound; ++x) {
    for (int c = 2; c <= x; ++c) {
      for (int t = 1; t < c; ++t) {
        const ConditionTuple tuple{x, c, t, y};
        const ConditionDeltas d = table.Deltas(tuple);
        const DeltaSigns signs = Signs(table, mode, tuple, d);
        if (signs.delta1 < 0) {
          out.delta1_ok = false;
          if (!out.sign_violation) {
            out.sign_violation = Counterexample{ViolationKind::kDelta1Sign,
                                                tuple, d.delta1, d.delta2, 0.0};
          }
        }
        if (signs.delta2 < 0) {
          out.delta2_ok = false;
          if (!out.sign_violation) {
            out.sign_violation = Counterexample{ViolationKind::kDelta2Sign,
                                                tuple, d.delta1, d.delta2, 0.0};
          }
        }
        if (signs.delta1 <= 0 && signs.delta2 <= 0 && !out.no_strict) {
          out.no_strict = Counterexample{ViolationKind::kNoStrictDelta, tuple,
                                         d.delta1, d.delta2, 0.0};
        }
      }
    }
  }
  return out;
}

struct MonotoneResult {
  bool weak = true;
  bool strict = true;
  std::optional<Counterexample> violation;
};

// Unit steps in the first argument; psi is symmetric, so this also covers
// the second.
MonotoneResult ScanMonotonicity(const PsiTable& table, Direction mode,
                                int bound) {
  MonotoneResult out;
  for (int x = 1; x < bound; ++x) {
    for (int y = 1; y <= bound; ++y) {
      const int step = StepSign(table, mode, x, y);
      if (step <= 0) out.strict = false;
      if (step < 0) {
        out.weak = false;
        if (!out.violation) {
          out.violation = Counterexample{
              ViolationKind::kMonotonicity, {x, 0, 0, y}, 0.0, 0.0,
              static_cast<double>(table.Step(x, y).first)};
        }
      }
    }
  }
  return out;
}

}  // namespace

ConditionReport CheckConditions(const IndexSpec& spec, Direction mode,
                                int grid_bound, int workers) {
  if (grid_bound < 3) {
    throw IndexError("condition grid bound must be at least 3, got " +
                     std::to_string(grid_bound));
  }
  if (workers <= 0) {
    workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  }
  workers = std::min(workers, grid_bound);

  const PsiTable table(spec, 2 * grid_bound);
  std::vector<SliceResult> slices(grid_bound);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](int worker) {
    try {
      for (int y = 1 + worker; y <= grid_bound; y += workers) {
        slices[y - 1] = ScanSlice(table, mode, grid_bound, y);
      }
    } catch (...) {
      errors[worker] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
  }
  for (const std::exception_ptr& error : errors) {
    if (error) std::rethrow_exception(error);
  }

  ConditionReport report;
  report.mode = mode;
  report.grid_bound = grid_bound;
  report.delta1_ok = true;
  report.delta2_ok = true;
  std::optional<Counterexample> sign_violation;
  std::optional<Counterexample> no_strict;
  for (const SliceResult& slice : slices) {
    report.delta1_ok = report.delta1_ok && slice.delta1_ok;
    report.delta2_ok = report.delta2_ok && slice.delta2_ok;
    if (slice.sign_violation) KeepSmallest(sign_violation, *slice.sign_violation);
    if (slice.no_strict) KeepSmallest(no_strict, *slice.no_strict);
  }

  const MonotoneResult monotone = ScanMonotonicity(table, mode, grid_bound);
  report.monotone_ok = monotone.weak;

  if (sign_violation) {
    report.strictness = Strictness::kFailed;
    report.counterexample = sign_violation;
  } else if (!monotone.weak) {
    report.strictness = Strictness::kFailed;
    report.counterexample = monotone.violation;
  } else if (monotone.strict) {
    report.strictness = Strictness::kStrictMonotone;
  } else if (!no_strict) {
    report.strictness = Strictness::kWeakWithPositiveDelta;
  } else {
    report.strictness = Strictness::kFailed;
    report.counterexample = no_strict;
  }
  return report;
}

bool ReplayCounterexample(const IndexSpec& spec, Direction mode,
                          const Counterexample& cex) {
  if (cex.kind == ViolationKind::kMonotonicity) {
    const PsiTable table(spec, std::max(cex.tuple.x, cex.tuple.y) + 1);
    return StepSign(table, mode, cex.tuple.x, cex.tuple.y) < 0;
  }
  const PsiTable table(spec, MaxDegreeFor(cex.tuple));
  const DeltaSigns signs =
      Signs(table, mode, cex.tuple, table.Deltas(cex.tuple));
  switch (cex.kind) {
    case ViolationKind::kDelta1Sign:
      return signs.delta1 < 0;
    case ViolationKind::kDelta2Sign:
      return signs.delta2 < 0;
    case ViolationKind::kNoStrictDelta:
      return signs.delta1 <= 0 && signs.delta2 <= 0;
    case ViolationKind::kMonotonicity:
      break;
  }
  return false;
}

}  // namespace bidx
