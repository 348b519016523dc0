#include "regbounds/spectrum.hpp"

#include <cmath>

#include "regbounds/fft.hpp"
#include "regbounds/gradient.hpp"

namespace regbounds {

namespace {

bool in_band(double wx, double wy, double bandwidth) {
  return std::max(std::abs(wx), std::abs(wy)) <= 0.5 * bandwidth + 1e-15;
}

}  // namespace

double eval_spectrum(const SpectrumModel& model, double wx, double wy) {
  if (model.is_flat()) {
    const auto& f = model.flat();
    return in_band(wx, wy, f.bandwidth) ? f.amplitude : 0.0;
  }
  if (model.is_inverse_square()) {
    const auto& s = model.inverse_square();
    if (!in_band(wx, wy, s.bandwidth)) return 0.0;
    const double w2 = wx * wx + wy * wy;
    if (w2 == 0.0) return 0.0;  // DC substitute: zero-mean image
    return s.amplitude / w2;
  }
  const auto& e = model.empirical();
  const auto& g = e.grid;
  const int m_r = g.geometry.rows;
  const int m_c = g.geometry.cols;
  const int lx = static_cast<int>(std::lround(wx * m_c / (2.0 * 3.14159265358979323846)));
  const int ly = static_cast<int>(std::lround(wy * m_r / (2.0 * 3.14159265358979323846)));
  if (ly < 0 || ly > m_r / 2 || lx < -m_c / 2 || lx >= m_c / 2) {
    throw UnsupportedModel("empirical spectrum lookup outside stored half-plane");
  }
  const size_t row = static_cast<size_t>(ly) * m_c;
  const size_t col = static_cast<size_t>(lx + m_c / 2);
  return e.values[row + col];
}

double snr_of(const SpectrumModel& model, const NoiseSpectrum& noise) {
  if (model.is_flat()) {
    const auto& f = model.flat();
    return f.amplitude * f.bandwidth * f.bandwidth / (6.0 * noise.level);
  }
  if (model.is_inverse_square()) {
    return model.inverse_square().amplitude / noise.level;
  }
  throw UnsupportedModel("snr_of requires a parametric model; use empirical_snr");
}

NoiseSpectrum calibrate_noise(const SpectrumModel& model, double target_snr) {
  if (!(target_snr > 0.0)) throw InvalidSnr("target SNR must be > 0");
  if (model.is_flat()) {
    const auto& f = model.flat();
    return NoiseSpectrum(f.amplitude * f.bandwidth * f.bandwidth / (6.0 * target_snr));
  }
  if (model.is_inverse_square()) {
    return NoiseSpectrum(model.inverse_square().amplitude / target_snr);
  }
  throw UnsupportedModel("calibrate_noise requires a parametric model");
}

double empirical_snr(const Image& image, double sigma2) {
  if (!(sigma2 > 0.0)) throw InvalidSnr("sigma2 must be > 0");
  const GradientEnergy g = gradient_energy(image);
  return (g.e_xx + g.e_yy) / (sigma2 * image.size());
}

EmpiricalSpectrum periodogram(const Image& image) {
  EmpiricalSpectrum out;
  out.grid = build_frequency_grid(image.geometry());
  out.values.resize(out.grid.bins.size());
  const auto spec = fft2(image);
  const int m_r = image.rows();
  const int m_c = image.cols();
  const double inv_np = 1.0 / image.size();
  for (size_t i = 0; i < out.grid.bins.size(); ++i) {
    const auto& b = out.grid.bins[i];
    const int row = b.ly;                      // ly in [0, m_r/2] is the storage row
    const int col = (b.lx + m_c) % m_c;        // signed harmonic back to storage index
    const cdouble u = spec[static_cast<size_t>(row) * m_c + col];
    out.values[i] = std::norm(u) * inv_np;
  }
  return out;
}

}  // namespace regbounds
