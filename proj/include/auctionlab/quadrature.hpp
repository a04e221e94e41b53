#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace auctionlab {

struct NumericalFailure : std::runtime_error {
  explicit NumericalFailure(const std::string& what)
      : std::runtime_error(what) {}
};

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  bool converged = true;
};

namespace detail {

template <typename F>
double adaptive_simpson(F& f, double a, double fa, double b, double fb,
                        double m, double fm, double whole, double tol,
                        int depth, double& err, bool& converged) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    if (depth <= 0 && !(std::abs(delta) <= 15.0 * tol)) converged = false;
    err += std::abs(delta) / 15.0;
    return left + right + delta / 15.0;
  }
  return adaptive_simpson(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1,
                          err, converged) +
         adaptive_simpson(f, m, fm, b, fb, rm, frm, right, 0.5 * tol,
                          depth - 1, err, converged);
}

}  // namespace detail

// Adaptive Simpson with interval bisection. `abs_tol` bounds the absolute
// error of the whole interval; subintervals split the budget in half.
template <typename F>
QuadratureResult integrate(F&& f, double a, double b, double abs_tol = 1e-9,
                           int max_depth = 60) {
  QuadratureResult res;
  if (!(a < b)) return res;
  const double m = 0.5 * (a + b);
  const double fa = f(a);
  const double fb = f(b);
  const double fm = f(m);
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  res.value = detail::adaptive_simpson(f, a, fa, b, fb, m, fm, whole, abs_tol,
                                       max_depth, res.error_estimate,
                                       res.converged);
  if (!std::isfinite(res.value)) res.converged = false;
  return res;
}

template <typename F>
double integrate_or_throw(F&& f, double a, double b, double abs_tol = 1e-9,
                          int max_depth = 60) {
  const QuadratureResult res = integrate(f, a, b, abs_tol, max_depth);
  if (!res.converged || res.error_estimate > abs_tol) {
    throw NumericalFailure("quadrature did not converge to " +
                           std::to_string(abs_tol) + " on [" +
                           std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return res.value;
}

}  // namespace auctionlab
