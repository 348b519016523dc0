#pragma once

#include "regbounds/errors.hpp"
#include "regbounds/frequency_grid.hpp"
#include "regbounds/spectrum.hpp"

namespace regbounds {

// Inputs for the stochastic-image (zero-mean Gaussian process) bounds.
struct StochBoundInput {
  FrequencyGrid grid;
  SpectrumModel model;
  NoiseSpectrum noise;
  int k = 1;

  StochBoundInput(FrequencyGrid g, SpectrumModel m, NoiseSpectrum n, int k_)
      : grid(std::move(g)), model(std::move(m)), noise(n), k(k_) {
    if (k < 1) throw InvalidSnr("K must be >= 1");
  }
};

// Information densities
//   rho_hq = sum_l 2 S^2(w_l) w_h w_q / (N^2 + (K+1) S N),
// accumulated over the half-plane with each conjugate pair counted once
// (bin coefficient weight/2). That convention reproduces the Fisher
// information of the real-valued frames and is the one the closed forms
// below discretize; a full-plane sum would double it.
struct RhoMatrix {
  double rho_xx = 0.0;
  double rho_yy = 0.0;
  double rho_xy = 0.0;
};

RhoMatrix rho(const StochBoundInput& input);

// MSE bound under the stochastic image model:
//   (1/(K+1)) (rho_xx + rho_yy) / (rho_xx rho_yy - rho_xy^2),
// which reduces to 2/((K+1) rho_xx) in the rotationally symmetric case.
double crbs(const StochBoundInput& input);

// High-SNR limit for a rotationally symmetric model:
//   2 sigma^2 (2pi)^2 / (N_p * integral S(w) w_x^2 dw),
// the integral evaluated as a weighted discrete sum. Independent of K.
double crbs_hsnr(const FrequencyGrid& grid, const SpectrumModel& model, double sigma2);

// Closed forms (continuous-integral approximations of crbs).
double crbs_flat_closed(double n_p, int k, double bandwidth, double snr_w);
double crbs_natural_closed(double n_p, int k, double bandwidth, double snr_n);

// SNR above which adding images stops improving the stochastic bound.
double snr1_flat(int k, double bandwidth);
double snr1_natural(int k, double bandwidth);

}  // namespace regbounds
