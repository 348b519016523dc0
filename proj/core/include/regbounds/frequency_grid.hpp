#pragma once

#include <vector>

#include "regbounds/geometry.hpp"

namespace regbounds {

// One stored bin of the non-redundant DFT half-plane (omega_y >= 0).
// `weight` is the Hermitian multiplicity: 2 when the conjugate bin lives in
// the discarded half-plane, 1 when the conjugate is itself stored (the
// omega_y = 0 and omega_y = pi rows, which are closed under conjugation).
struct FrequencyBin {
  int lx = 0;  // signed column harmonic, in [-m_c/2, m_c/2)
  int ly = 0;  // row harmonic, in [0, m_r/2]
  double wx = 0.0;  // rad/px
  double wy = 0.0;  // rad/px
  int weight = 1;
};

// Hermitian half-plane of an m_r x m_c real image: m_c * (m_r/2 + 1) bins
// whose weights sum to the pixel count, so weighted half-plane sums of any
// conjugate-symmetric integrand equal the full-plane sums (Parseval).
//
// Bound sums that count each conjugate pair once (the Fisher-information and
// error-probability accumulations) should use weight/2 per bin; see
// stoch_bounds.cpp.
struct FrequencyGrid {
  ImageGeometry geometry;
  std::vector<FrequencyBin> bins;

  int weighted_count() const {
    int n = 0;
    for (const auto& b : bins) n += b.weight;
    return n;
  }
};

// Deterministic, order-stable enumeration: ly ascending 0..m_r/2, lx
// ascending -m_c/2..m_c/2-1 within each row.
FrequencyGrid build_frequency_grid(const ImageGeometry& geometry);

}  // namespace regbounds
