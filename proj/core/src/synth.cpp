#include "regbounds/synth.hpp"

#include <cmath>
#include <numbers>

#include "regbounds/fft.hpp"
#include "regbounds/spectrum.hpp"

namespace regbounds {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// exp(-i * 2*pi * l * t / m) with the argument reduced before the trig call,
// so integer t yields (numerically) exact roots of unity.
cdouble unit_phase(int l_signed, double t, int m) {
  double r = std::fmod(static_cast<double>(l_signed) * t, static_cast<double>(m));
  const double ang = kTwoPi * r / m;
  return {std::cos(ang), -std::sin(ang)};
}

std::vector<cdouble> axis_phases(int m, double t) {
  std::vector<cdouble> p(static_cast<size_t>(m));
  for (int l = 0; l < m; ++l) {
    if (l == m / 2) {
      // Unpaired Nyquist harmonic: real (cosine) factor keeps the image real.
      const double ang = std::numbers::pi * t;
      p[l] = {std::cos(ang), 0.0};
    } else {
      p[l] = unit_phase(signed_freq_index(l, m), t, m);
    }
  }
  return p;
}

void add_noise(Image& img, double sigma, RngStream& rng) {
  if (sigma == 0.0) return;
  for (int i = 0; i < img.size(); ++i) img[i] += sigma * rng.gaussian();
}

}  // namespace

Image gen_flat_image(const ImageGeometry& geometry, RngStream& rng, double amplitude) {
  geometry.validate();
  Image img(geometry);
  double sum = 0.0;
  for (int i = 0; i < img.size(); ++i) {
    img[i] = amplitude * rng.uniform01();
    sum += img[i];
  }
  const double mean = sum / img.size();
  for (int i = 0; i < img.size(); ++i) img[i] -= mean;
  return img;
}

Image gen_natural_image(const ImageGeometry& geometry, RngStream& rng, double amplitude) {
  geometry.validate();
  const int m_r = geometry.rows;
  const int m_c = geometry.cols;
  const double n_p = geometry.pixel_count();
  std::vector<cdouble> spec(static_cast<size_t>(geometry.pixel_count()), cdouble(0.0, 0.0));

  const auto idx = [m_c](int row, int col) {
    return static_cast<size_t>(row) * m_c + col;
  };
  const auto coeff_sigma = [&](double wx, double wy) {
    const double w2 = wx * wx + wy * wy;
    if (w2 == 0.0) return 0.0;  // zero-mean image
    return std::sqrt(n_p * amplitude / w2);
  };

  for (int ly = 0; ly <= m_r / 2; ++ly) {
    const double wy = kTwoPi * ly / m_r;
    const bool edge_row = (ly == 0 || ly == m_r / 2);
    const int row = ly;
    const int conj_row = (m_r - ly) % m_r;
    // In the self-conjugate rows only half the columns are free.
    const int lx_hi = edge_row ? 0 : m_c / 2 - 1;
    for (int lx = -m_c / 2; lx <= lx_hi; ++lx) {
      const double wx = kTwoPi * lx / m_c;
      const int col = (lx + m_c) % m_c;
      const int conj_col = (m_c - col) % m_c;
      const double s = coeff_sigma(wx, wy);
      const bool self_conjugate =
          edge_row && (lx == 0 || lx == -m_c / 2);
      if (self_conjugate) {
        spec[idx(row, col)] = cdouble(s * rng.gaussian(), 0.0);
      } else {
        const double re = rng.gaussian() / std::numbers::sqrt2;
        const double im = rng.gaussian() / std::numbers::sqrt2;
        spec[idx(row, col)] = cdouble(s * re, s * im);
        spec[idx(conj_row, conj_col)] = std::conj(spec[idx(row, col)]);
      }
    }
  }
  return ifft2_real(geometry, spec);
}

Image fourier_shift(const Image& image, const Shift& tau) {
  const int m_r = image.rows();
  const int m_c = image.cols();
  auto spec = fft2(image);
  const auto px = axis_phases(m_c, tau.x);
  const auto py = axis_phases(m_r, tau.y);
  for (int r = 0; r < m_r; ++r) {
    const cdouble pr = py[r];
    for (int c = 0; c < m_c; ++c) {
      spec[static_cast<size_t>(r) * m_c + c] *= pr * px[c];
    }
  }
  return ifft2_real(image.geometry(), spec);
}

ObservationSet make_observations(const Image& u, int k, const ShiftSampler& sampler,
                                 double sigma2, uint64_t seed) {
  if (k < 1) throw InvalidGeometry("K must be >= 1");
  if (sigma2 < 0.0) throw InvalidSnr("sigma2 must be >= 0");
  const double sigma = std::sqrt(sigma2);

  ObservationSet obs;
  obs.sigma2 = sigma2;
  obs.seed = seed;
  obs.true_shifts.resize(static_cast<size_t>(k) + 1);
  obs.true_shifts[0] = {0.0, 0.0};

  RngStream shift_rng = make_stream(seed, {static_cast<uint64_t>(StreamUse::kShiftSample)});
  for (int i = 1; i <= k; ++i) obs.true_shifts[i] = sampler.sample(shift_rng);

  obs.frames.reserve(static_cast<size_t>(k) + 1);
  for (int i = 0; i <= k; ++i) {
    Image frame = (i == 0) ? u : fourier_shift(u, obs.true_shifts[i]);
    RngStream noise_rng = make_stream(
        seed, {static_cast<uint64_t>(StreamUse::kNoise), static_cast<uint64_t>(i)});
    add_noise(frame, sigma, noise_rng);
    obs.frames.push_back(std::move(frame));
  }
  return obs;
}

}  // namespace regbounds
