#include "regbounds/stoch_bounds.hpp"

#include <cmath>
#include <numbers>

#include "regbounds/special.hpp"

namespace regbounds {

namespace {
constexpr double kPi = std::numbers::pi;
}

RhoMatrix rho(const StochBoundInput& input) {
  const double n = input.noise.level;
  const double kp1 = input.k + 1;
  RhoMatrix out;
  for (const auto& b : input.grid.bins) {
    const double s = eval_spectrum(input.model, b.wx, b.wy);
    if (s <= 0.0) continue;  // out-of-band bins carry no shift information
    const double common = 0.5 * b.weight * 2.0 * s * s / (n * n + kp1 * s * n);
    out.rho_xx += common * b.wx * b.wx;
    out.rho_yy += common * b.wy * b.wy;
    out.rho_xy += common * b.wx * b.wy;
  }
  return out;
}

double crbs(const StochBoundInput& input) {
  const RhoMatrix r = rho(input);
  const double det = r.rho_xx * r.rho_yy - r.rho_xy * r.rho_xy;
  if (!(det > 0.0) || det <= 1e-14 * r.rho_xx * r.rho_yy) {
    throw SingularInformation("information density matrix is singular");
  }
  return (r.rho_xx + r.rho_yy) / (det * (input.k + 1));
}

double crbs_hsnr(const FrequencyGrid& grid, const SpectrumModel& model, double sigma2) {
  if (!(sigma2 > 0.0)) throw InvalidSnr("sigma2 must be > 0");
  const double n_p = grid.geometry.pixel_count();
  // integral S(w) w_x^2 dw as a Riemann sum over the full plane.
  double sum = 0.0;
  for (const auto& b : grid.bins) {
    sum += b.weight * eval_spectrum(model, b.wx, b.wy) * b.wx * b.wx;
  }
  const double integral = (2.0 * kPi) * (2.0 * kPi) / n_p * sum;
  if (!(integral > 0.0)) throw SingularInformation("zero gradient-energy integral");
  return 2.0 * sigma2 * (2.0 * kPi) * (2.0 * kPi) / (n_p * integral);
}

double crbs_flat_closed(double n_p, int k, double bandwidth, double snr_w) {
  if (!(snr_w > 0.0)) throw InvalidSnr("snr must be > 0");
  const double kp1 = k + 1;
  return 8.0 * kPi * kPi / (3.0 * n_p * kp1 * snr_w * snr_w) +
         16.0 * kPi * kPi / (n_p * bandwidth * bandwidth * snr_w);
}

double crbs_natural_closed(double n_p, int k, double bandwidth, double snr_n) {
  if (!(snr_n > 0.0)) throw InvalidSnr("snr must be > 0");
  const double kp1 = k + 1;
  const double arg = 1.0 + 2.0 * kPi * kp1 * snr_n / (bandwidth * bandwidth);
  return 8.0 * kPi / (n_p * kp1 * snr_n * snr_n * acoth(arg));
}

double snr1_flat(int k, double bandwidth) {
  return bandwidth * bandwidth / (6.0 * (k + 1));
}

double snr1_natural(int k, double bandwidth) {
  return bandwidth * bandwidth / (2.0 * kPi * (k + 1));
}

}  // namespace regbounds
