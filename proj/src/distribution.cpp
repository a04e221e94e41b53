#include "auctionlab/distribution.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <limits>

namespace auctionlab {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSqrt2 = 1.4142135623730951;
constexpr double kSqrt2Pi = 2.5066282746310002;
constexpr double kDensityFloor = 1e-300;

void require(bool ok, const char* msg) {
  if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

Distribution Distribution::uniform(double a, double b) {
  require(std::isfinite(a) && std::isfinite(b) && a < b,
          "uniform: need a < b");
  return Distribution(DistKind::kUniform, a, b);
}

Distribution Distribution::exponential(double rate) {
  require(std::isfinite(rate) && rate > 0, "exponential: need rate > 0");
  return Distribution(DistKind::kExponential, rate, 0.0);
}

Distribution Distribution::lognormal(double mu, double sigma) {
  require(std::isfinite(mu) && std::isfinite(sigma) && sigma > 0,
          "lognormal: need sigma > 0");
  return Distribution(DistKind::kLogNormal, mu, sigma);
}

Distribution Distribution::shifted_exponential(double a, double rate) {
  require(std::isfinite(a) && a >= 0, "shifted_exponential: need a >= 0");
  require(std::isfinite(rate) && rate > 0, "shifted_exponential: need rate > 0");
  return Distribution(DistKind::kShiftedExponential, a, rate);
}

double Distribution::pdf(double x) const {
  switch (kind_) {
    case DistKind::kUniform:
      return (x >= p0_ && x <= p1_) ? 1.0 / (p1_ - p0_) : 0.0;
    case DistKind::kExponential:
      return x >= 0 ? p0_ * std::exp(-p0_ * x) : 0.0;
    case DistKind::kLogNormal: {
      if (!(x > 0)) return 0.0;
      const double z = (std::log(x) - p0_) / p1_;
      return std::exp(-0.5 * z * z) / (x * p1_ * kSqrt2Pi);
    }
    case DistKind::kShiftedExponential:
      return x >= p0_ ? p1_ * std::exp(-p1_ * (x - p0_)) : 0.0;
  }
  return 0.0;
}

double Distribution::cdf(double x) const {
  switch (kind_) {
    case DistKind::kUniform:
      return std::clamp((x - p0_) / (p1_ - p0_), 0.0, 1.0);
    case DistKind::kExponential:
      return x > 0 ? -std::expm1(-p0_ * x) : 0.0;
    case DistKind::kLogNormal: {
      if (!(x > 0)) return 0.0;
      const double z = (std::log(x) - p0_) / p1_;
      return 0.5 * std::erfc(-z / kSqrt2);
    }
    case DistKind::kShiftedExponential:
      return x > p0_ ? -std::expm1(-p1_ * (x - p0_)) : 0.0;
  }
  return 0.0;
}

double Distribution::sf(double x) const {
  switch (kind_) {
    case DistKind::kUniform:
      return std::clamp((p1_ - x) / (p1_ - p0_), 0.0, 1.0);
    case DistKind::kExponential:
      return x > 0 ? std::exp(-p0_ * x) : 1.0;
    case DistKind::kLogNormal: {
      if (!(x > 0)) return 1.0;
      const double z = (std::log(x) - p0_) / p1_;
      return 0.5 * std::erfc(z / kSqrt2);
    }
    case DistKind::kShiftedExponential:
      return x > p0_ ? std::exp(-p1_ * (x - p0_)) : 1.0;
  }
  return 0.0;
}

double Distribution::quantile(double u) const {
  require(u >= 0.0 && u <= 1.0, "quantile: u must lie in [0, 1]");
  switch (kind_) {
    case DistKind::kUniform:
      return p0_ + u * (p1_ - p0_);
    case DistKind::kExponential:
      return u < 1.0 ? -std::log1p(-u) / p0_ : kInf;
    case DistKind::kLogNormal:
      if (u <= 0.0) return 0.0;
      if (u >= 1.0) return kInf;
      return std::exp(p0_ + p1_ * probit(u));
    case DistKind::kShiftedExponential:
      return u < 1.0 ? p0_ - std::log1p(-u) / p1_ : kInf;
  }
  return 0.0;
}

double Distribution::support_lo() const {
  switch (kind_) {
    case DistKind::kUniform:
      return p0_;
    case DistKind::kExponential:
      return 0.0;
    case DistKind::kLogNormal:
      return 0.0;
    case DistKind::kShiftedExponential:
      return p0_;
  }
  return 0.0;
}

double Distribution::support_hi() const {
  return kind_ == DistKind::kUniform ? p1_ : kInf;
}

std::string Distribution::name() const {
  auto fmt = [](double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%g", v);
    return std::string(buf);
  };
  switch (kind_) {
    case DistKind::kUniform:
      return "uniform(" + fmt(p0_) + "," + fmt(p1_) + ")";
    case DistKind::kExponential:
      return "exponential(" + fmt(p0_) + ")";
    case DistKind::kLogNormal:
      return "lognormal(" + fmt(p0_) + "," + fmt(p1_) + ")";
    case DistKind::kShiftedExponential:
      return "shifted_exponential(" + fmt(p0_) + "," + fmt(p1_) + ")";
  }
  return "?";
}

double probit(double u) {
  require(u >= 0.0 && u <= 1.0, "probit: u must lie in [0, 1]");
  if (u == 0.0) return -kInf;
  if (u == 1.0) return kInf;

  static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                 -2.759285104469687e+02, 1.383577518672690e+02,
                                 -3.066479806614716e+01, 2.506628277459239e+00};
  static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                 -1.556989798598866e+02, 6.680131188771972e+01,
                                 -1.328068155288572e+01};
  static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                 -2.400758277161838e+00, -2.549732539343734e+00,
                                 4.374664141464968e+00, 2.938163982698783e+00};
  static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                 2.445134137142996e+00, 3.754408661907416e+00};
  constexpr double lo = 0.02425;

  double x;
  if (u < lo) {
    const double q = std::sqrt(-2.0 * std::log(u));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (u <= 1.0 - lo) {
    const double q = u - 0.5;
    const double r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) *
        q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log(1.0 - u));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  for (int i = 0; i < 2; ++i) {
    const double e = 0.5 * std::erfc(-x / kSqrt2) - u;
    const double step = e * kSqrt2Pi * std::exp(0.5 * x * x);
    x -= step / (1.0 + 0.5 * x * step);
  }
  return x;
}

namespace {

double ratio_at(const Distribution& dist, double x) {
  const double f = dist.pdf(x);
  if (!(f > kDensityFloor)) return -1.0;  // skipped cell
  return dist.sf(x) / f;
}

// Golden-section maximization of the hazard ratio on [lo, hi].
double golden_max(const Distribution& dist, double lo, double hi) {
  constexpr double kPhi = 0.6180339887498949;
  double a = lo, b = hi;
  double x1 = b - kPhi * (b - a);
  double x2 = a + kPhi * (b - a);
  double f1 = ratio_at(dist, x1);
  double f2 = ratio_at(dist, x2);
  for (int i = 0; i < 120 && b - a > 1e-14 * (1.0 + std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kPhi * (b - a);
      f2 = ratio_at(dist, x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kPhi * (b - a);
      f1 = ratio_at(dist, x1);
    }
  }
  return std::max(f1, f2);
}

}  // namespace

HazardSup hazard_ratio_sup(const Distribution& dist, double cap) {
  constexpr int kGrid = 10000;
  double best = 0.0;
  int best_k = -1;
  std::array<double, kGrid + 1> xs{};
  for (int k = 0; k <= kGrid; ++k) {
    const double x = dist.quantile(static_cast<double>(k) / kGrid);
    xs[k] = x;
    if (!std::isfinite(x)) continue;
    const double r = ratio_at(dist, x);
    if (r > best) {
      best = r;
      best_k = k;
    }
  }
  if (best > cap) return {kInf, true};

  if (best_k >= 0) {
    const double lo = best_k > 0 ? xs[best_k - 1] : xs[best_k];
    double hi = best_k < kGrid ? xs[best_k + 1] : xs[best_k];
    if (!std::isfinite(hi)) hi = xs[best_k];
    if (lo < hi) best = std::max(best, golden_max(dist, lo, hi));
    if (best > cap) return {kInf, true};
  }

  if (!std::isfinite(dist.support_hi())) {
    double x = std::max(dist.quantile(1.0 - 1e-9), 1.0);
    for (int i = 0; i < 2000; ++i) {
      x *= 2.0;
      if (!(dist.sf(x) > 0.0)) break;
      const double r = ratio_at(dist, x);
      if (r < 0.0) break;  // density underflow
      if (r > cap) return {kInf, true};
      best = std::max(best, r);
    }
  }
  return {best, false};
}

}  // namespace auctionlab
