#ifndef BIDX_SERIES_H_
#define BIDX_SERIES_H_

#include <vector>

namespace bidx {

// alpha (alpha - 1) ... (alpha - k + 1) / k!; 1 for k = 0.
double GeneralizedBinomial(double alpha, int k);

// Binomial expansions around n^alpha of two family differences:
//   kB: chi(G4) - chi(G5), weights 3 + 3^k - 3 * 2^k
//   kA: chi(H4) - chi(H5) less 2(7^alpha - 6^alpha), weights
//       4^k - 2^(k+1) + 3 - 3^k
enum class SeriesKind { kB, kA };

// The k-th weight. Zero at k = 1 for both kinds and at k = 2 for kB.
double SeriesWeight(SeriesKind kind, int k);

// C(alpha, k) n^(alpha - k) w_k, with the k = 0 term (and every term the
// weight kills) pinned to exactly zero.
double SeriesTerm(SeriesKind kind, double alpha, int n, int k);

struct SeriesExpansion {
  SeriesKind kind = SeriesKind::kB;
  double alpha = 0.0;
  int n = 0;
  std::vector<double> terms;
  // partial_sums[k] = leading_constant + terms[0] + ... + terms[k].
  std::vector<double> partial_sums;
  double leading_constant = 0.0;
  bool converged = false;

  double Sum() const {
    return partial_sums.empty() ? leading_constant : partial_sums.back();
  }
};

inline constexpr int kDefaultSeriesTerms = 80;
inline constexpr double kSeriesStopTolerance = 1e-15;

// Terms k = 0 .. max_terms - 1, stopping early once a term past the
// structural zeros drops below kSeriesStopTolerance * max(1, |partial sum|).
// Throws std::invalid_argument when n is below 5 (kB) or 6 (kA), or
// max_terms < 5.
SeriesExpansion ExpandSeries(SeriesKind kind, double alpha, int n,
                             int max_terms = kDefaultSeriesTerms);

// Integer bounds whose positivity closes the series arguments. Each is
// computed two ways, from the general two-variable form and from its
// expanded single-variable polynomial; the pair must agree.
struct BoundValue {
  __int128 general;
  __int128 expanded;
};

// n(m+1)(3 + 3^m - 3 2^m) - (m-1)(3 + 3^(m+1) - 6 2^m) at n = 5, against
// 18 - 21 2^m + 8 3^m + (12 - 9 2^m + 2 3^m) m.
BoundValue BSeriesBound(int m);

// n(m+1)(4^m - 2^(m+1) + 3 - 3^m) - (m-1)(4^(m+1) - 2^(m+2) + 3 - 3^(m+1))
// at n = 6, against
// 21 - 8 2^(m+1) - 9 3^m + 10 4^m + (15 - 4 2^(m+1) - 3 3^m + 2 4^m) m.
BoundValue ASeriesBound(int m);

// The general forms at any n; m is limited to [0, 40].
__int128 BSeriesBoundAt(int n, int m);
__int128 ASeriesBoundAt(int n, int m);

}  // namespace bidx

#endif  // BIDX_SERIES_H_
