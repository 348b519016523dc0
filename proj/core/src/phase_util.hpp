#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "regbounds/fft.hpp"

namespace regbounds::detail {

// exp(-i * 2*pi * l * t / m) with the argument reduced before the trig call,
// so integer t yields (numerically) exact roots of unity.
inline cdouble unit_phase(int l_signed, double t, int m) {
  const double r = std::fmod(static_cast<double>(l_signed) * t, static_cast<double>(m));
  const double ang = 2.0 * std::numbers::pi * r / m;
  return {std::cos(ang), -std::sin(ang)};
}

// Per-axis factors of the shift ramp exp(-i omega t). The unpaired Nyquist
// harmonic gets the real cosine factor so shifted real images stay real.
inline std::vector<cdouble> shift_phases(int m, double t) {
  std::vector<cdouble> p(static_cast<size_t>(m));
  for (int l = 0; l < m; ++l) {
    if (l == m / 2) {
      p[l] = {std::cos(std::numbers::pi * t), 0.0};
    } else {
      p[l] = unit_phase(signed_freq_index(l, m), t, m);
    }
  }
  return p;
}

}  // namespace regbounds::detail
