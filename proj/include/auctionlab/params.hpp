#pragma once

#include "auctionlab/distribution.hpp"

namespace auctionlab {

struct DegenerateDistribution : std::runtime_error {
  explicit DegenerateDistribution(const std::string& what)
      : std::runtime_error(what) {}
};

struct LockBoundResult {
  double l_exact = 0.0;       // sup_s F(s)^-n * integral_lo^s F^(n-1)(1-F)
  double l_asymptotic = 0.0;  // hazard_ratio_sup / n; NaN when unbounded
  double argmax_s = 0.0;
  int n = 0;
};

// Lock-amount lower bound. The objective G(s) is evaluated through the
// substitution t = F(x)/F(s), which keeps it well conditioned for any n:
//   G(s) = integral_0^1 t^(n-1) (1 - F(s) t) / f(Q(F(s) t)) dt.
// A 512-point quantile grid is refined by golden section around the best
// grid point; the lower-support-edge limit (a 0/0 form) is recovered by
// quadratic extrapolation from the three smallest grid quantiles and
// cross-checked against the direct limit sf(a) / (n f(a)) where the edge
// density is positive. Requires n >= 2.
LockBoundResult lock_bound_exact(const Distribution& dist, int n);

// hazard_ratio_sup(dist) / n. Throws UnboundedHazard when the supremum
// exceeds the numeric cap.
double lock_bound_asymptotic(const Distribution& dist, int n);

struct FeeResult {
  double alpha = 0.0;  // 2 (E[B1] - E[B2]) / E[B2]
  double e_b1 = 0.0;
  double e_b2 = 0.0;
  double gap = 0.0;  // e_b1 - e_b2
  int n = 0;
};

// Fee coefficient for g(x) = alpha x. Requires n >= 2 and E[B2] > 0.
FeeResult fee_alpha(const Distribution& dist, int n);

// Truthfulness condition for the two-round resale attack:
// b2 - alpha b2 >= b1 - 2 alpha b1.
bool repeated_auction_check(double b1, double b2, double alpha);

}  // namespace auctionlab
