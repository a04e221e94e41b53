#include "auctionlab/params.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "auctionlab/order_stats.hpp"
#include "auctionlab/quadrature.hpp"

namespace auctionlab {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();
constexpr double kDensityFloor = 1e-300;

// G(s) via the t = F(x)/F(s) substitution; exact for every magnitude of
// F(s)^n, which a direct evaluation of F^-n * integral is not.
double lock_objective(const Distribution& dist, int n, double s) {
  const double w = dist.cdf(s);
  if (!(w > 0.0)) return 0.0;
  auto integrand = [&](double t) {
    if (t <= 0.0) return 0.0;
    const double u = w * t;
    const double x = dist.quantile(u);
    const double f = dist.pdf(x);
    if (!(f > kDensityFloor)) return 0.0;  // limit of the integrand is 0
    return std::pow(t, n - 1) * (1.0 - u) / f;
  };
  return integrate_or_throw(integrand, 0.0, 1.0, 1e-11);
}

double golden_max_objective(const Distribution& dist, int n, double lo,
                            double hi, double* arg) {
  constexpr double kPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kPhi * (b - a);
  double x2 = a + kPhi * (b - a);
  double f1 = lock_objective(dist, n, x1);
  double f2 = lock_objective(dist, n, x2);
  for (int i = 0; i < 80 && b - a > 1e-12 * (1.0 + std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kPhi * (b - a);
      f2 = lock_objective(dist, n, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kPhi * (b - a);
      f1 = lock_objective(dist, n, x1);
    }
  }
  *arg = f1 >= f2 ? x1 : x2;
  return std::max(f1, f2);
}

// Quadratic (Lagrange) extrapolation of G to the lower support edge from the
// three smallest grid abscissae.
double edge_extrapolation(double edge, const double s[3], const double g[3]) {
  const double x0 = s[0] - edge, x1 = s[1] - edge, x2 = s[2] - edge;
  const double l0 = (x1 * x2) / ((x0 - x1) * (x0 - x2));
  const double l1 = (x0 * x2) / ((x1 - x0) * (x1 - x2));
  const double l2 = (x0 * x1) / ((x2 - x0) * (x2 - x1));
  return g[0] * l0 + g[1] * l1 + g[2] * l2;
}

}  // namespace

LockBoundResult lock_bound_exact(const Distribution& dist, int n) {
  if (n < 2) throw std::invalid_argument("lock_bound_exact: need n >= 2");
  if (dist.support_lo() < 0)
    throw std::invalid_argument("lock_bound_exact: support must be non-negative");

  constexpr int kGrid = 512;
  std::vector<double> ss(kGrid), gs(kGrid);
  int best_k = 0;
  for (int k = 0; k < kGrid; ++k) {
    const double u = static_cast<double>(k + 1) / (kGrid + 1);
    ss[k] = dist.quantile(u);
    gs[k] = lock_objective(dist, n, ss[k]);
    if (gs[k] > gs[best_k]) best_k = k;
  }

  double argmax = ss[best_k];
  const double lo_bracket = best_k > 0 ? ss[best_k - 1] : ss[best_k];
  const double hi_bracket = best_k + 1 < kGrid ? ss[best_k + 1] : ss[best_k];
  double best = gs[best_k];
  if (lo_bracket < hi_bracket) {
    double refined_arg = argmax;
    const double refined =
        golden_max_objective(dist, n, lo_bracket, hi_bracket, &refined_arg);
    if (refined > best) {
      best = refined;
      argmax = refined_arg;
    }
  }

  // Lower-edge limit. G is a 0/0 form there; extrapolate and, where the edge
  // density is positive, cross-check against the direct limit sf/(n f).
  const double edge = dist.support_lo();
  double edge_val = edge_extrapolation(edge, ss.data(), gs.data());
  const double f_edge = dist.pdf(edge);
  if (f_edge > kDensityFloor) {
    const double direct = dist.sf(edge) / (n * f_edge);
    const double scale = std::max({1e-12, std::abs(direct), std::abs(edge_val)});
    if (std::abs(edge_val - direct) > 0.01 * scale) edge_val = direct;
  } else if (!(gs[0] > gs[1] && gs[1] > gs[2])) {
    // Not increasing toward the edge and no direct limit: no edge supremum.
    edge_val = -std::numeric_limits<double>::infinity();
  }
  if (edge_val > best) {
    best = edge_val;
    argmax = edge;
  }

  LockBoundResult res;
  res.l_exact = best;
  res.argmax_s = argmax;
  res.n = n;
  const HazardSup sup = hazard_ratio_sup(dist);
  res.l_asymptotic = sup.infinite ? kNan : sup.value / n;
  return res;
}

double lock_bound_asymptotic(const Distribution& dist, int n) {
  if (n < 1) throw std::invalid_argument("lock_bound_asymptotic: need n >= 1");
  const HazardSup sup = hazard_ratio_sup(dist);
  if (sup.infinite) {
    throw UnboundedHazard(
        "sup over the support of (1 - F(s))/f(s) exceeds the numeric cap for " +
        dist.name() + "; the protocol requires this supremum to be finite");
  }
  return sup.value / n;
}

FeeResult fee_alpha(const Distribution& dist, int n) {
  if (n < 2) throw std::invalid_argument("fee_alpha: need n >= 2");
  const OrderStatOracle oracle{dist, n};
  FeeResult res;
  res.n = n;
  res.e_b1 = expected_b1(oracle);
  res.e_b2 = expected_b2(oracle);
  res.gap = res.e_b1 - res.e_b2;
  if (!(res.e_b2 > 0.0)) {
    throw DegenerateDistribution("fee_alpha: E[B2] = 0 for " + dist.name());
  }
  res.alpha = 2.0 * res.gap / res.e_b2;
  return res;
}

bool repeated_auction_check(double b1, double b2, double alpha) {
  if (!(b1 >= b2 && b2 >= 0))
    throw std::invalid_argument("repeated_auction_check: need b1 >= b2 >= 0");
  return b2 - alpha * b2 >= b1 - 2.0 * alpha * b1;
}

}  // namespace auctionlab
