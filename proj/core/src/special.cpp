#include "regbounds/special.hpp"

#include <cassert>
#include <cmath>
#include <numbers>

namespace regbounds {

namespace {
constexpr double kSqrt2 = std::numbers::sqrt2;
constexpr double kLogSqrt2Pi = 0.9189385332046727417803297;  // log(sqrt(2*pi))
}  // namespace

double normal_tail(double t) { return 0.5 * std::erfc(t / kSqrt2); }

double log_normal_tail(double t) {
  if (t < 30.0) {
    // erfc(30/sqrt(2)) ~ 1e-198, still normal range.
    return std::log(0.5 * std::erfc(t / kSqrt2));
  }
  // Asymptotic series: Phi(t) = phi(t)/t * (1 - 1/t^2 + 3/t^4 - 15/t^6 + 105/t^8 - ...)
  const double t2 = t * t;
  const double series = -1.0 / t2 + 3.0 / (t2 * t2) - 15.0 / (t2 * t2 * t2) +
                        105.0 / (t2 * t2 * t2 * t2);
  return -0.5 * t2 - std::log(t) - kLogSqrt2Pi + std::log1p(series);
}

double acoth(double x) {
  assert(std::abs(x) > 1.0);
  return 0.5 * std::log((x + 1.0) / (x - 1.0));
}

}  // namespace regbounds
