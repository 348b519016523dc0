#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "regbounds/errors.hpp"
#include "regbounds/frequency_grid.hpp"
#include "regbounds/geometry.hpp"

namespace regbounds {

// Power spectral density models for the latent image. The band is the square
// max(|wx|,|wy|) <= bandwidth/2, bandwidth in (0, 2pi].

struct FlatSpectrum {
  double amplitude = 1.0;  // S_w, power
  double bandwidth = 2.0 * 3.14159265358979323846;  // W, rad/px
};

struct InverseSquareSpectrum {
  double amplitude = 1.0;  // S_n, power * rad^2
  double bandwidth = 2.0 * 3.14159265358979323846;
};

// Per-bin powers sampled on a FrequencyGrid (e.g. a periodogram).
struct EmpiricalSpectrum {
  FrequencyGrid grid;
  std::vector<double> values;  // one per grid bin, >= 0
};

class SpectrumModel {
 public:
  SpectrumModel(FlatSpectrum f) : v_(check(f)) {}
  SpectrumModel(InverseSquareSpectrum s) : v_(check(s)) {}
  SpectrumModel(EmpiricalSpectrum e) : v_(std::move(e)) {}

  bool is_flat() const { return std::holds_alternative<FlatSpectrum>(v_); }
  bool is_inverse_square() const { return std::holds_alternative<InverseSquareSpectrum>(v_); }
  bool is_empirical() const { return std::holds_alternative<EmpiricalSpectrum>(v_); }

  const FlatSpectrum& flat() const { return std::get<FlatSpectrum>(v_); }
  const InverseSquareSpectrum& inverse_square() const {
    return std::get<InverseSquareSpectrum>(v_);
  }
  const EmpiricalSpectrum& empirical() const { return std::get<EmpiricalSpectrum>(v_); }

  std::string tag() const {
    if (is_flat()) return "flat";
    if (is_inverse_square()) return "inverse-square";
    return "empirical";
  }

 private:
  static FlatSpectrum check(FlatSpectrum f) {
    if (f.amplitude <= 0.0) throw UnsupportedModel("flat spectrum amplitude must be > 0");
    check_bandwidth(f.bandwidth);
    return f;
  }
  static InverseSquareSpectrum check(InverseSquareSpectrum s) {
    if (s.amplitude <= 0.0) throw UnsupportedModel("inverse-square amplitude must be > 0");
    check_bandwidth(s.bandwidth);
    return s;
  }
  static void check_bandwidth(double w) {
    if (!(w > 0.0) || w > 2.0 * 3.14159265358979323846 + 1e-12) {
      throw UnsupportedModel("bandwidth must lie in (0, 2pi]");
    }
  }

  std::variant<FlatSpectrum, InverseSquareSpectrum, EmpiricalSpectrum> v_;
};

// Additive noise, flat over the signal band. Under full-band white noise
// (W = 2pi) the level equals the pixel-domain variance sigma^2.
struct NoiseSpectrum {
  double level = 1.0;  // N, power

  NoiseSpectrum() = default;
  explicit NoiseSpectrum(double n) : level(n) {
    if (!(n > 0.0)) throw InvalidSnr("noise level must be > 0");
  }
  double sigma2() const { return level; }
};

// S(omega). Flat -> S_w inside the band; InverseSquare -> S_n/|omega|^2
// inside the band with the DC bin pinned to 0 (zero-mean image convention);
// Empirical -> nearest-bin lookup (omega must land on the grid).
double eval_spectrum(const SpectrumModel& model, double wx, double wy);

// SNR as energy of the derivative over noise power:
// Flat -> S_w W^2 / (6N); InverseSquare -> S_n / N. Linear ratio, not dB.
double snr_of(const SpectrumModel& model, const NoiseSpectrum& noise);

// Inverse of snr_of for the parametric models.
NoiseSpectrum calibrate_noise(const SpectrumModel& model, double target_snr);

// Discrete analogue of the SNR definition with the image periodogram in
// place of the model spectrum, full band W = 2pi:
//   snr = (u_x'u_x + u_y'u_y) / (sigma^2 * N_p).
// A constant image yields 0.
double empirical_snr(const Image& image, double sigma2);

// Periodogram |U(omega)|^2 / N_p sampled on the half-plane grid.
EmpiricalSpectrum periodogram(const Image& image);

inline double snr_to_db(double snr) { return 10.0 * std::log10(snr); }
inline double db_to_snr(double db) { return std::pow(10.0, db / 10.0); }

}  // namespace regbounds
