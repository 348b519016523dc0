#pragma once

#include <utility>
#include <vector>

#include "regbounds/errors.hpp"
#include "regbounds/frequency_grid.hpp"
#include "regbounds/geometry.hpp"
#include "regbounds/spectrum.hpp"

namespace regbounds {

// Extended Ziv-Zakai bound for flat full-band (W = 2pi) signals, single
// shift component, uniform [0, D] prior per component.
struct EzzbFlatInput {
  int n_p = 2500;     // signal length (the 2D image rearranged row-wise)
  int k = 1;          // number of unknown translations
  double snr_w = 1.0; // linear SNR
  double d = 20.0;    // prior width, px

  void validate() const {
    if (n_p < 16) throw InvalidSnr("n_p must be >= 16");
    if (k < 1) throw InvalidSnr("K must be >= 1");
    if (!(snr_w > 0.0)) throw InvalidSnr("snr must be > 0");
    if (!(d >= 1.0)) throw InvalidSnr("prior width D must be >= 1");
  }
};

// Constants of the flat-spectrum EZZB:
//   kappa1 = 9 snr^2 (K+1) / (8 pi^4 + 12 pi^2 snr (K+1))
//   kappa2 = 9 snr^2 K / (4 pi^4 + 6 pi^2 snr (K+1))
//   a  = -N_p log((sqrt(kappa2+1) + 1)/2)        (<= 0)
//   b  = (N_p/2) (sqrt(kappa2+1) - 1)/sqrt(kappa2+1)
//   c2 = N_p pi^2 kappa1 / 12
struct EzzbConstants {
  double kappa1 = 0.0;
  double kappa2 = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c2 = 0.0;
};

// Candidate offset vector of the binary hypothesis test: K 2D shifts,
// i.e. 2K scalar components.
struct DeltaHypothesis {
  std::vector<Shift> offsets;
};

// Prior-overlap factor for the uniform [0, D]^{2K} prior:
//   A(delta) = prod_i max(1 - |delta_i|/D, 0).
double overlap_factor(const DeltaHypothesis& delta, double d);

// One-term approximation of the minimum error probability of deciding
// between shift vectors separated by delta:
//   0.5 exp{a(delta) + b(delta)} Phi(sqrt(2 b(delta))),
// with gamma = S^2 ((K+1)^2 - T) / (4 (N^2 + (K+1) N S)),
// T = |1 + sum_j exp(-i delta_j . w)|^2. Evaluates to exactly 1/4 at
// delta = 0. The exp * Phi product is formed in log space.
double pmin(const DeltaHypothesis& delta, const FrequencyGrid& grid,
            const SpectrumModel& model, const NoiseSpectrum& noise, int k);

EzzbConstants ezzb_flat_constants(const EzzbFlatInput& input);

// EMSE bound, px^2:
//   (1/c2) int_0^sqrt(2b) h exp(-9 h^4 / (20 N_p)) Phi(h) dh
//   + (D^2/6) exp(a+b) Phi(sqrt(2b)).
double ezzb_flat(const EzzbFlatInput& input);

// The two addends of ezzb_flat, for curve emission.
std::pair<double, double> ezzb_terms(const EzzbFlatInput& input);

// Transition thresholds, solved on log-SNR in [-60, 60] dB to 0.01 dB:
//   snr2: 1/(4 c2) = (D^2/6) exp(a+b) Phi(sqrt(2b))
//   snr3: exp(a+b) Phi(sqrt(2b)) = 1/4
// Throws NoTransition when no sign change is found in the search window.
double snr2(int n_p, int k, double d);
double snr3(int n_p, int k);

}  // namespace regbounds
