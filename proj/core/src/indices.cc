#include "bidx/indices.h"

#include <cmath>
#include <sstream>
#include <utility>
#include <vector>

namespace bidx {
namespace {

std::optional<std::int64_t> CheckedPow(std::int64_t base, int exponent) {
  std::int64_t result = 1;
  for (int i = 0; i < exponent; ++i) {
    if (__builtin_mul_overflow(result, base, &result)) return std::nullopt;
  }
  return result;
}

bool IsPositiveInteger(double x) {
  return x >= 1.0 && x <= 62.0 && std::floor(x) == x;
}

std::string FormatParam(double x) {
  std::ostringstream out;
  out.precision(17);
  out << x;
  return out.str();
}

}  // namespace

IndexSpec IndexSpec::Chi(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw IndexError("chi needs a finite non-zero alpha");
  }
  return IndexSpec(IndexKind::kChi, alpha);
}

IndexSpec IndexSpec::Pl(double alpha) {
  if (alpha == 0.0 || !std::isfinite(alpha)) {
    throw IndexError("pl needs a finite non-zero alpha");
  }
  return IndexSpec(IndexKind::kPl, alpha);
}

IndexSpec IndexSpec::Sei(double a) {
  if (!(a > 0.0) || a == 1.0 || !std::isfinite(a)) {
    throw IndexError("sei needs a > 0 and a != 1");
  }
  return IndexSpec(IndexKind::kSei, a);
}

IndexSpec IndexSpec::M1() { return IndexSpec(IndexKind::kM1, 1.0); }

IndexSpec IndexSpec::Platt() { return IndexSpec(IndexKind::kPlatt, 1.0); }

IndexSpec IndexSpec::Custom(std::string name, PsiFunction psi) {
  if (!psi) throw IndexError("custom index '" + name + "' has no psi");
  IndexSpec spec(IndexKind::kCustom, 0.0);
  spec.custom_name_ = std::move(name);
  spec.custom_psi_ = std::move(psi);
  return spec;
}

IndexSpec IndexSpec::FromName(const std::string& kind, double param) {
  if (kind == "chi") return Chi(param);
  if (kind == "pl") return Pl(param);
  if (kind == "sei") return Sei(param);
  if (kind == "m1") return M1();
  if (kind == "platt") return Platt();
  throw IndexError("unknown index '" + kind +
                   "' (expected chi, pl, sei, m1 or platt)");
}

std::string IndexSpec::Name() const {
  switch (kind_) {
    case IndexKind::kChi:
      return "chi";
    case IndexKind::kPl:
      return "pl";
    case IndexKind::kSei:
      return "sei";
    case IndexKind::kM1:
      return "m1";
    case IndexKind::kPlatt:
      return "platt";
    case IndexKind::kCustom:
      return custom_name_;
  }
  return {};
}

std::string IndexSpec::Label() const {
  switch (kind_) {
    case IndexKind::kChi:
    case IndexKind::kPl:
      return Name() + "(alpha=" + FormatParam(param_) + ")";
    case IndexKind::kSei:
      return Name() + "(a=" + FormatParam(param_) + ")";
    default:
      return Name();
  }
}

double IndexSpec::Psi(int du, int dv) const {
  return static_cast<double>(PsiLong(du, dv));
}

long double IndexSpec::PsiLong(int du, int dv) const {
  const long double param = param_;
  switch (kind_) {
    case IndexKind::kChi:
      return std::pow(static_cast<long double>(du + dv), param);
    case IndexKind::kPl: {
      const int base = du + dv - 2;
      if (base == 0) {
        if (param_ < 0) {
          throw IndexError("pl with alpha < 0 is undefined on an edge joining "
                           "two pendant vertices");
        }
        return 0.0L;
      }
      return std::pow(static_cast<long double>(base), param);
    }
    case IndexKind::kSei:
      return std::pow(param, du) + std::pow(param, dv);
    case IndexKind::kM1:
      return du + dv;
    case IndexKind::kPlatt:
      return du + dv - 2;
    case IndexKind::kCustom:
      if (!custom_psi_) throw IndexError("custom index has no psi");
      return custom_psi_(du, dv);
  }
  return 0.0L;
}

bool IndexSpec::HasExactPath() const {
  switch (kind_) {
    case IndexKind::kChi:
    case IndexKind::kPl:
      return IsPositiveInteger(param_);
    case IndexKind::kSei:
      return param_ >= 2.0 && IsPositiveInteger(param_);
    case IndexKind::kM1:
    case IndexKind::kPlatt:
      return true;
    case IndexKind::kCustom:
      return false;
  }
  return false;
}

std::optional<std::int64_t> IndexSpec::ExactPsi(int du, int dv) const {
  if (!HasExactPath()) return std::nullopt;
  const int exponent = static_cast<int>(param_);
  switch (kind_) {
    case IndexKind::kChi:
      return CheckedPow(du + dv, exponent);
    case IndexKind::kPl:
      return CheckedPow(du + dv - 2, exponent);
    case IndexKind::kSei: {
      const auto a = CheckedPow(exponent, du);
      const auto b = CheckedPow(exponent, dv);
      std::int64_t sum = 0;
      if (!a || !b || __builtin_add_overflow(*a, *b, &sum)) return std::nullopt;
      return sum;
    }
    case IndexKind::kM1:
      return du + dv;
    case IndexKind::kPlatt:
      return du + dv - 2;
    case IndexKind::kCustom:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string_view DirectionName(Direction d) {
  return d == Direction::kMax ? "max" : "min";
}

int CompareValues(const IndexValue& a, const IndexValue& b) {
  if (a.exact && b.exact) return (*a.exact > *b.exact) - (*a.exact < *b.exact);
  const double scale = std::max(std::fabs(a.value), std::fabs(b.value));
  if (std::fabs(a.value - b.value) <= kTieTolerance * scale) return 0;
  return a.value > b.value ? 1 : -1;
}

namespace {

// Accumulates a sum of edge weights on both the float and integer paths.
class ValueAccumulator {
 public:
  explicit ValueAccumulator(const IndexSpec& spec)
      : spec_(spec), exact_ok_(spec.HasExactPath()) {}

  void Add(int du, int dv, std::int64_t count = 1) {
    if (count == 0) return;
    sum_ += static_cast<long double>(count) * spec_.PsiLong(du, dv);
    if (!exact_ok_) return;
    const auto weight = spec_.ExactPsi(du, dv);
    std::int64_t term = 0;
    if (!weight || __builtin_mul_overflow(*weight, count, &term) ||
        __builtin_add_overflow(exact_, term, &exact_)) {
      exact_ok_ = false;
    }
  }

  IndexValue Result() const {
    if (exact_ok_) return {static_cast<double>(exact_), exact_};
    return {static_cast<double>(sum_), std::nullopt};
  }

 private:
  const IndexSpec& spec_;
  bool exact_ok_;
  long double sum_ = 0.0L;
  std::int64_t exact_ = 0;
};

struct ProfileTerm {
  int count;
  int du;
  int dv;
};

// Edge-degree multiset of each family, written out by hand. `hub` is the
// dominating vertex's degree; every remainder vertex of remainder-degree r
// has degree r + 1 and contributes one (hub, r + 1) star edge.
std::vector<ProfileTerm> FamilyProfile(FamilyTag tag, int n) {
  const int hub = n - 1;
  switch (tag) {
    case FamilyTag::kS:
      return {{n - 1, hub, 1}};
    case FamilyTag::kSPlus:
      return {{1, 2, 2}, {2, hub, 2}, {n - 3, hub, 1}};
    case FamilyTag::kB1:
      return {{2, 2, 3}, {2, hub, 2}, {1, hub, 3}, {n - 4, hub, 1}};
    case FamilyTag::kB2:
      return {{2, 2, 2}, {4, hub, 2}, {n - 5, hub, 1}};
    case FamilyTag::kG1:
      return {{3, 2, 2}, {6, hub, 2}, {n - 7, hub, 1}};
    case FamilyTag::kG2:
      return {{2, 2, 3}, {1, 2, 2}, {4, hub, 2}, {1, hub, 3}, {n - 6, hub, 1}};
    case FamilyTag::kG3:
      return {{2, 2, 3}, {1, 3, 3}, {2, hub, 2}, {2, hub, 3}, {n - 5, hub, 1}};
    case FamilyTag::kG4:
      return {{3, 4, 2}, {1, hub, 4}, {3, hub, 2}, {n - 5, hub, 1}};
    case FamilyTag::kG5:
      return {{3, 3, 3}, {3, hub, 3}, {n - 4, hub, 1}};
    case FamilyTag::kH4:
      return {{4, 5, 2}, {1, hub, 5}, {4, hub, 2}, {n - 6, hub, 1}};
    case FamilyTag::kH5:
      return {{2, 4, 3}, {1, 3, 3}, {1, 4, 2}, {1, hub, 4},
              {2, hub, 3}, {1, hub, 2}, {n - 5, hub, 1}};
    case FamilyTag::kH8:
      return {{4, 3, 3}, {4, hub, 3}, {n - 5, hub, 1}};
    default:
      throw IndexError("no closed form for family " +
                       std::string(FamilyName(tag)));
  }
}

}  // namespace

IndexValue EvaluateBid(const IndexSpec& spec, const Graph& g) {
  ValueAccumulator acc(spec);
  for (const Edge& e : g.edges()) acc.Add(g.degree(e.u), g.degree(e.v));
  return acc.Result();
}

bool HasClosedForm(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::kS:
    case FamilyTag::kSPlus:
    case FamilyTag::kB1:
    case FamilyTag::kB2:
    case FamilyTag::kG1:
    case FamilyTag::kG2:
    case FamilyTag::kG3:
    case FamilyTag::kG4:
    case FamilyTag::kG5:
    case FamilyTag::kH4:
    case FamilyTag::kH5:
    case FamilyTag::kH8:
      return true;
    default:
      return false;
  }
}

IndexValue ClosedForm(const IndexSpec& spec, FamilyId id) {
  if (spec.kind() == IndexKind::kCustom) {
    throw IndexError("no closed form for custom indices");
  }
  if (!HasClosedForm(id.tag)) {
    throw IndexError("no closed form for family " +
                     std::string(FamilyName(id.tag)));
  }
  if (id.n < MinimumOrder(id.tag)) {
    throw IndexError(std::string(FamilyName(id.tag)) + " needs n >= " +
                     std::to_string(MinimumOrder(id.tag)));
  }
  ValueAccumulator acc(spec);
  for (const ProfileTerm& term : FamilyProfile(id.tag, id.n)) {
    acc.Add(term.du, term.dv, term.count);
  }
  return acc.Result();
}

bool LineGraphSizeCheck(const Graph& g) {
  if (!g.IsConnected()) {
    throw GraphError("line graph size check needs a connected graph");
  }
  std::int64_t m1 = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    m1 += static_cast<std::int64_t>(g.degree(v)) * g.degree(v);
  }
  return LineGraph(g).size() == m1 / 2 - g.size();
}

}  // namespace bidx
