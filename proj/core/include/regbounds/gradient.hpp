#pragma once

#include "regbounds/geometry.hpp"

namespace regbounds {

// Squared-gradient inner products of the latent image:
//   e_xx = u_x'u_x, e_yy = u_y'u_y, e_xy = u_x'u_y,
// with derivatives taken spectrally (multiplication by i*omega under the
// cyclic/band-limited convention; the unpaired Nyquist harmonics carry a
// zero derivative so u_x, u_y stay real).
struct GradientEnergy {
  double e_xx = 0.0;
  double e_yy = 0.0;
  double e_xy = 0.0;
};

GradientEnergy gradient_energy(const Image& image);

}  // namespace regbounds
