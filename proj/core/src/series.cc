#include "bidx/series.h"

#include <cmath>
#include <stdexcept>
#include <string>

namespace bidx {
namespace {

// Index of the first term that is not structurally zero.
int FirstLiveTerm(SeriesKind kind) { return kind == SeriesKind::kB ? 3 : 2; }

__int128 Power(int base, int exp) {
  __int128 out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

void CheckBoundExponent(int m) {
  if (m < 0 || m > 40) {
    throw std::invalid_argument("bound exponent must lie in [0, 40], got " +
                                std::to_string(m));
  }
}

}  // namespace

double GeneralizedBinomial(double alpha, int k) {
  if (k < 0) throw std::invalid_argument("binomial index must be >= 0");
  double out = 1.0;
  for (int i = 0; i < k; ++i) out *= (alpha - i) / (i + 1);
  return out;
}

double SeriesWeight(SeriesKind kind, int k) {
  const double p2 = std::ldexp(1.0, k);
  const double p3 = std::pow(3.0, k);
  if (kind == SeriesKind::kB) return 3.0 + p3 - 3.0 * p2;
  return std::pow(4.0, k) - 2.0 * p2 + 3.0 - p3;
}

double SeriesTerm(SeriesKind kind, double alpha, int n, int k) {
  if (k < FirstLiveTerm(kind)) return 0.0;
  return GeneralizedBinomial(alpha, k) * std::pow(static_cast<double>(n), alpha - k) *
         SeriesWeight(kind, k);
}

SeriesExpansion ExpandSeries(SeriesKind kind, double alpha, int n,
                             int max_terms) {
  const int min_n = kind == SeriesKind::kB ? 5 : 6;
  if (n < min_n) {
    throw std::invalid_argument("series needs n >= " + std::to_string(min_n) +
                                ", got " + std::to_string(n));
  }
  if (max_terms < 5) {
    throw std::invalid_argument("series needs at least 5 terms");
  }
  SeriesExpansion out;
  out.kind = kind;
  out.alpha = alpha;
  out.n = n;
  out.leading_constant =
      kind == SeriesKind::kA
          ? 2.0 * (std::pow(7.0, alpha) - std::pow(6.0, alpha))
          : 0.0;

  double sum = out.leading_constant;
  for (int k = 0; k < max_terms; ++k) {
    const double term = SeriesTerm(kind, alpha, n, k);
    sum += term;
    out.terms.push_back(term);
    out.partial_sums.push_back(sum);
    if (k < FirstLiveTerm(kind)) continue;
    if (std::fabs(term) < kSeriesStopTolerance * std::max(1.0, std::fabs(sum))) {
      out.converged = true;
      break;
    }
  }
  return out;
}

__int128 BSeriesBoundAt(int n, int m) {
  CheckBoundExponent(m);
  const __int128 p2 = Power(2, m);
  const __int128 p3 = Power(3, m);
  return static_cast<__int128>(n) * (m + 1) * (3 + p3 - 3 * p2) -
         static_cast<__int128>(m - 1) * (3 + 3 * p3 - 6 * p2);
}

__int128 ASeriesBoundAt(int n, int m) {
  CheckBoundExponent(m);
  const __int128 p2 = Power(2, m);
  const __int128 p3 = Power(3, m);
  const __int128 p4 = Power(4, m);
  return static_cast<__int128>(n) * (m + 1) * (p4 - 2 * p2 + 3 - p3) -
         static_cast<__int128>(m - 1) * (4 * p4 - 4 * p2 + 3 - 3 * p3);
}

BoundValue BSeriesBound(int m) {
  CheckBoundExponent(m);
  const __int128 p2 = Power(2, m);
  const __int128 p3 = Power(3, m);
  return {BSeriesBoundAt(5, m),
          18 - 21 * p2 + 8 * p3 + (12 - 9 * p2 + 2 * p3) * m};
}

BoundValue ASeriesBound(int m) {
  CheckBoundExponent(m);
  const __int128 p2 = Power(2, m);
  const __int128 p3 = Power(3, m);
  const __int128 p4 = Power(4, m);
  return {ASeriesBoundAt(6, m),
          21 - 16 * p2 - 9 * p3 + 10 * p4 +
              (15 - 8 * p2 - 3 * p3 + 2 * p4) * m};
}

}  // namespace bidx
