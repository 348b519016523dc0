#include "regbounds/gradient.hpp"

#include <cmath>

#include "regbounds/fft.hpp"

namespace regbounds {

GradientEnergy gradient_energy(const Image& image) {
  const int m_r = image.rows();
  const int m_c = image.cols();
  const auto spec = fft2(image);

  // Parseval: u_h' u_q = (1/N_p) sum omega_h omega_q |U|^2.
  GradientEnergy g;
  double sxx = 0.0, syy = 0.0, sxy = 0.0;
  for (int lr = 0; lr < m_r; ++lr) {
    const double wy = (lr == m_r / 2) ? 0.0 : omega_of_index(lr, m_r);
    for (int lc = 0; lc < m_c; ++lc) {
      const double wx = (lc == m_c / 2) ? 0.0 : omega_of_index(lc, m_c);
      const double p = std::norm(spec[static_cast<size_t>(lr) * m_c + lc]);
      sxx += wx * wx * p;
      syy += wy * wy * p;
      sxy += wx * wy * p;
    }
  }
  const double inv_np = 1.0 / image.size();
  g.e_xx = sxx * inv_np;
  g.e_yy = syy * inv_np;
  g.e_xy = sxy * inv_np;
  return g;
}

}  // namespace regbounds
