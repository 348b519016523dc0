#include "regbounds/det_bounds.hpp"

#include <cmath>

namespace regbounds {

namespace {

void check_input(const DetBoundInput& in) {
  if (!(in.sigma2 > 0.0)) throw InvalidSnr("sigma2 must be > 0");
  if (in.k < 1) throw InvalidSnr("K must be >= 1");
}

double gram_det(const GradientEnergy& g) { return g.e_xx * g.e_yy - g.e_xy * g.e_xy; }

void check_gram(const GradientEnergy& g) {
  const double det = gram_det(g);
  if (!(det > 0.0) || det <= 1e-14 * g.e_xx * g.e_yy) {
    throw SingularGradient("gradient Gram matrix is singular");
  }
}

// Trace of the inverse of the symmetric 2x2 [[a, b], [b, c]].
double trace_inv_2x2(double a, double b, double c) {
  return (a + c) / (a * c - b * b);
}

}  // namespace

double gg_lambda2(double c, double delta) {
  if (!(c > 0.5)) throw UnsupportedShape("prior shape must satisfy c > 1/2");
  if (!(delta > 0.0)) throw UnsupportedShape("prior scale must be > 0");
  const double lg = 2.0 * std::lgamma(1.0 / c) - std::lgamma(3.0 / c) -
                    std::lgamma(2.0 - 1.0 / c);
  return delta * delta * std::exp(lg) / (c * c);
}

double crbd(const DetBoundInput& input) {
  check_input(input);
  const GradientEnergy& g = input.gradient;
  check_gram(g);
  return input.sigma2 * (g.e_xx + g.e_yy) / gram_det(g);
}

double crbd_known(const DetBoundInput& input) { return crbd(input) / 2.0; }

double bcrb_lambda(const DetBoundInput& input, double lambda2) {
  check_input(input);
  if (!(lambda2 > 0.0)) throw UnsupportedShape("lambda2 must be > 0");
  const GradientEnergy& g = input.gradient;
  check_gram(g);

  const int k = input.k;
  const double inv_l2 = 1.0 / lambda2;

  // Data factor has eigenvalue 1 (multiplicity K-1) and 1/(K+1) on the
  // all-ones direction; each contributes a 2x2 system mu*Q/sigma^2 + I/l^2.
  const auto tr_for = [&](double mu) {
    const double s = mu / input.sigma2;
    return trace_inv_2x2(s * g.e_xx + inv_l2, s * g.e_xy, s * g.e_yy + inv_l2);
  };
  const double tr = (k - 1) * tr_for(1.0) + tr_for(1.0 / (k + 1));
  return tr / (2.0 * k);
}

double bcrb(const DetBoundInput& input, const ShiftPriorGG& prior) {
  return bcrb_lambda(input, gg_lambda2(prior.c, prior.delta));
}

}  // namespace regbounds
