#pragma once

#include <cmath>
#include <cstdlib>

namespace regbounds {

// Adaptive Simpson quadrature with absolute tolerance handed down the
// recursion. Callers pass a relative tolerance against a scale estimate.
namespace detail {

template <typename F>
double simpson(F&& f, double a, double fa, double b, double fb, double m, double fm) {
  return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

template <typename F>
double adapt(F&& f, double a, double fa, double b, double fb, double m, double fm,
             double whole, double tol, int depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = simpson(f, a, fa, m, fm, lm, flm);
  const double right = simpson(f, m, fm, b, fb, rm, frm);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
    return left + right + delta / 15.0;
  }
  return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
         adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

}  // namespace detail

// scale_hint, when positive, anchors the absolute tolerance at
// rel_tol * scale_hint. Needed when the integrand's support is a small part
// of [a, b] and the three-point opening estimate would undershoot the scale.
template <typename F>
double integrate_adaptive(F&& f, double a, double b, double rel_tol, double scale_hint = 0.0,
                          int max_depth = 40) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  const double whole = detail::simpson(f, a, fa, b, fb, m, fm);
  double scale = scale_hint > 0.0 ? scale_hint : std::abs(whole);
  if (scale == 0.0) {
    scale = (std::abs(fa) + std::abs(fb) + std::abs(fm)) * std::abs(b - a) / 3.0;
  }
  if (scale == 0.0) scale = 1.0;
  return detail::adapt(f, a, fa, b, fb, m, fm, whole, rel_tol * scale, max_depth);
}

// Composite Simpson on a fixed grid of n (even) intervals; used by tests as
// the step-halving reference for Richardson checks.
template <typename F>
double integrate_simpson_fixed(F&& f, double a, double b, int n) {
  if (n % 2 != 0) ++n;
  const double h = (b - a) / n;
  double s = f(a) + f(b);
  for (int i = 1; i < n; ++i) {
    s += f(a + i * h) * (i % 2 == 1 ? 4.0 : 2.0);
  }
  return s * h / 3.0;
}

}  // namespace regbounds
