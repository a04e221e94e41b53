#pragma once

#include <stdexcept>
#include <string>

#include "auctionlab/rng.hpp"

namespace auctionlab {

struct UnboundedHazard : std::runtime_error {
  explicit UnboundedHazard(const std::string& what)
      : std::runtime_error(what) {}
};

enum class DistKind {
  kUniform,
  kExponential,
  kLogNormal,
  kShiftedExponential,
};

// Continuous valuation distribution. Four parametric families; all expose
// density, CDF, a tail-accurate survival function, the closed-form quantile
// and inverse-CDF sampling from a counter-based stream.
class Distribution {
 public:
  static Distribution uniform(double a, double b);
  static Distribution exponential(double rate);
  static Distribution lognormal(double mu, double sigma);
  static Distribution shifted_exponential(double a, double rate);

  DistKind kind() const { return kind_; }
  double p0() const { return p0_; }
  double p1() const { return p1_; }

  double pdf(double x) const;
  double cdf(double x) const;
  double sf(double x) const;  // 1 - cdf, accurate deep in the tail
  double quantile(double u) const;

  double support_lo() const;
  double support_hi() const;  // +infinity for the unbounded families

  double sample(CounterRng& rng) const { return quantile(rng.next_unit()); }

  std::string name() const;

 private:
  Distribution(DistKind kind, double p0, double p1)
      : kind_(kind), p0_(p0), p1_(p1) {}

  DistKind kind_;
  double p0_;
  double p1_;
};

// Standard-normal quantile (Acklam's approximation plus Halley refinement).
double probit(double u);

struct HazardSup {
  double value = 0.0;
  bool infinite = false;
};

// Supremum over the support of (1 - F(s)) / f(s). Evaluated on a 10,001-point
// quantile grid refined by golden section around the grid argmax, then probed
// geometrically into the tail; ratios beyond `cap` classify the result as
// infinite. Grid cells where the density underflows are skipped.
HazardSup hazard_ratio_sup(const Distribution& dist, double cap = 1e9);

}  // namespace auctionlab
