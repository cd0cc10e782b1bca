#ifndef BIDX_INDICES_H_
#define BIDX_INDICES_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "bidx/families.h"
#include "bidx/graph.h"

namespace bidx {

class IndexError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class IndexKind {
  kChi,     // general sum-connectivity, (du + dv)^alpha
  kPl,      // general Platt, (du + dv - 2)^alpha
  kSei,     // variable sum exdeg, a^du + a^dv
  kM1,      // first Zagreb, du + dv
  kPlatt,   // Platt, du + dv - 2
  kCustom,  // caller-supplied symmetric psi
};

using PsiFunction = std::function<double(int, int)>;

// A bond-incident-degree index: the edge weight psi(du, dv) and its
// parameter. Construct through the named factories, which validate the
// parameter (alpha != 0 for chi/pl; a > 0 and a != 1 for sei).
class IndexSpec {
 public:
  static IndexSpec Chi(double alpha);
  static IndexSpec Pl(double alpha);
  static IndexSpec Sei(double a);
  static IndexSpec M1();
  static IndexSpec Platt();
  static IndexSpec Custom(std::string name, PsiFunction psi);

  // kind is one of chi, pl, sei, m1, platt; param is ignored by m1/platt.
  static IndexSpec FromName(const std::string& kind, double param);

  IndexKind kind() const { return kind_; }
  double param() const { return param_; }

  // "chi", "pl", "sei", "m1", "platt" or the custom name.
  std::string Name() const;
  // Name plus parameter, e.g. "chi(alpha=1.5)".
  std::string Label() const;

  // Edge weight. For pl, 0^alpha is 0 when alpha > 0; alpha < 0 on a
  // degree pair summing to 2 throws IndexError.
  double Psi(int du, int dv) const;
  // Psi in extended precision, used when summing many weights.
  long double PsiLong(int du, int dv) const;

  // Integer edge weight when the index is integral for this parameter (m1,
  // platt, chi/pl with a positive integer alpha, sei with an integer a >= 2).
  // nullopt when not integral or when the value overflows int64.
  std::optional<std::int64_t> ExactPsi(int du, int dv) const;
  bool HasExactPath() const;

 private:
  IndexSpec(IndexKind kind, double param) : kind_(kind), param_(param) {}

  IndexKind kind_;
  double param_;
  std::string custom_name_;
  PsiFunction custom_psi_;
};

enum class Direction { kMax, kMin };

std::string_view DirectionName(Direction d);

struct IndexValue {
  double value = 0.0;
  // Set when every edge weight went through the integer path; value then
  // equals exact converted to double.
  std::optional<std::int64_t> exact;
};

// Two float-path values within this relative distance compare as tied.
inline constexpr double kTieTolerance = 1e-9;

// -1, 0 or +1. Exact when both sides carry exact values, otherwise relative
// kTieTolerance.
int CompareValues(const IndexValue& a, const IndexValue& b);

// Sum of psi(du, dv) over all edges.
IndexValue EvaluateBid(const IndexSpec& spec, const Graph& g);

// Analytic value on a named family from its hand-derived edge-degree
// profile, as a function of n. Supported tags: S, S_PLUS, B1, B2, G1..G5, H4,
// H5, H8; supported kinds: chi, pl, sei, m1, platt. Anything else throws
// IndexError.
IndexValue ClosedForm(const IndexSpec& spec, FamilyId id);
bool HasClosedForm(FamilyTag tag);

// |E(L(g))| == M1(g)/2 - m(g). Throws GraphError for a disconnected g.
bool LineGraphSizeCheck(const Graph& g);

}  // namespace bidx

#endif  // BIDX_INDICES_H_
