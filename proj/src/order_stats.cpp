#include "auctionlab/order_stats.hpp"

#include <cmath>
#include <stdexcept>

#include "auctionlab/quadrature.hpp"

namespace auctionlab {

namespace {

void check(const OrderStatOracle& o) {
  if (o.n < 1) throw std::invalid_argument("order stats: need n >= 1");
  if (o.dist.support_lo() < 0)
    throw std::invalid_argument("order stats: support must be non-negative");
}

// Survival function of B1, computed through log1p to stay accurate where
// sf is tiny: 1 - F^n = -expm1(n log(1 - sf)).
double sf_b1(const Distribution& d, int n, double x) {
  const double s = d.sf(x);
  if (s >= 1.0) return 1.0;
  if (s <= 0.0) return 0.0;
  return -std::expm1(static_cast<double>(n) * std::log1p(-s));
}

double sf_b2(const Distribution& d, int n, double x) {
  const double s = d.sf(x);
  if (s >= 1.0) return 1.0;
  if (s <= 0.0) return 0.0;
  const double log_f = std::log1p(-s);
  return -std::expm1(n * log_f) -
         n * std::exp((n - 1) * log_f) * s;
}

template <typename F>
double tail_expectation(const Distribution& d, F&& survival, double abs_tol) {
  const double upper = d.quantile(1.0 - 1e-12);
  const double lo = d.support_lo();
  // The survival function is identically 1 below the support.
  double total = std::min(lo, upper);
  double a = std::min(lo, upper);
  // Tighter internal tolerance; abs_tol is the certified contract.
  const double tol = abs_tol * 1e-2;
  const QuadratureResult res = integrate(survival, a, upper, tol);
  if (!res.converged || res.error_estimate > abs_tol) {
    throw NumericalFailure("order statistic expectation did not converge");
  }
  return total + res.value;
}

}  // namespace

double OrderStatOracle::cdf_b1(double x) const {
  check(*this);
  return std::pow(dist.cdf(x), n);
}

double OrderStatOracle::cdf_b2(double x) const {
  check(*this);
  const double f = dist.cdf(x);
  return std::pow(f, n) + n * std::pow(f, n - 1) * (1.0 - f);
}

double expected_b1(const OrderStatOracle& oracle, double abs_tol) {
  check(oracle);
  const Distribution& d = oracle.dist;
  const int n = oracle.n;
  return tail_expectation(
      d, [&](double x) { return sf_b1(d, n, x); }, abs_tol);
}

double expected_b2(const OrderStatOracle& oracle, double abs_tol) {
  check(oracle);
  if (oracle.n == 1) return 0.0;
  const Distribution& d = oracle.dist;
  const int n = oracle.n;
  return tail_expectation(
      d, [&](double x) { return sf_b2(d, n, x); }, abs_tol);
}

}  // namespace auctionlab
