#pragma once

#include "regbounds/errors.hpp"
#include "regbounds/gradient.hpp"

namespace regbounds {

// Inputs for the deterministic-image Cramér-Rao bounds: the gradient Gram
// matrix of the latent image, the per-pixel noise variance, and the number
// of unknown translations K (frames = K + 1).
struct DetBoundInput {
  GradientEnergy gradient;
  double sigma2 = 1.0;
  int k = 1;
};

// Generalized-Gaussian shift prior with shape c and scale delta. The derived
// effective prior variance is
//   lambda^2 = delta^2 Gamma^2(1/c) / (c^2 Gamma(3/c) Gamma(2 - 1/c)),
// defined for c > 1/2 (so the last Gamma stays on positive arguments).
struct ShiftPriorGG {
  double c = 2.0;
  double delta = 1.0;
};

double gg_lambda2(double c, double delta);

// MSE bound with the latent image unknown:
//   sigma^2 (e_xx + e_yy) / (e_xx e_yy - e_xy^2).
// Independent of K. Throws SingularGradient when the Gram matrix is not
// positive definite (constant image, pure 1D texture).
double crbd(const DetBoundInput& input);

// Known latent image: exactly crbd / 2.
double crbd_known(const DetBoundInput& input);

// Bayesian CRB on the expected MSE under the shift prior.
// (1/2K) tr(Sbar^-1) with Sbar = (1/sigma^2)(I_K - 11'/(K+1)) (x) Q
// + (1/lambda^2) I_2K, evaluated by splitting the Kronecker factor into its
// eigenvalue-1 (multiplicity K-1) and eigenvalue-1/(K+1) parts.
double bcrb_lambda(const DetBoundInput& input, double lambda2);
double bcrb(const DetBoundInput& input, const ShiftPriorGG& prior);

}  // namespace regbounds
