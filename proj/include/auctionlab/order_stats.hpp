#pragma once

#include "auctionlab/distribution.hpp"

namespace auctionlab {

// Exact order-statistic oracle for the highest and second-highest of n i.i.d.
// draws: CDF(B1) = F^n, CDF(B2) = F^n + n F^(n-1) (1 - F).
struct OrderStatOracle {
  Distribution dist;
  int n;

  double cdf_b1(double x) const;
  double cdf_b2(double x) const;
};

// E[B1] and E[B2] for distributions supported on the non-negative reals,
// via E[X] = integral of Pr(X >= x). Adaptive quadrature at `abs_tol`
// absolute accuracy, upper limit truncated at the 1 - 1e-12 quantile.
// E[B2] is 0 by convention when n = 1. Throws NumericalFailure if the
// quadrature cannot certify the tolerance.
double expected_b1(const OrderStatOracle& oracle, double abs_tol = 1e-9);
double expected_b2(const OrderStatOracle& oracle, double abs_tol = 1e-9);

}  // namespace auctionlab
