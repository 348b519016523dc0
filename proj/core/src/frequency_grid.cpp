#include "regbounds/frequency_grid.hpp"

#include <numbers>

namespace regbounds {

FrequencyGrid build_frequency_grid(const ImageGeometry& geometry) {
  geometry.validate();
  const int m_r = geometry.rows;
  const int m_c = geometry.cols;

  FrequencyGrid grid;
  grid.geometry = geometry;
  grid.bins.reserve(static_cast<size_t>(m_c) * (m_r / 2 + 1));

  for (int ly = 0; ly <= m_r / 2; ++ly) {
    // Conjugate of (lx, ly) is (-lx, -ly); -ly folds back into the stored
    // rows only for ly = 0 and ly = m_r/2.
    const bool self_conjugate_row = (ly == 0 || ly == m_r / 2);
    for (int lx = -m_c / 2; lx < m_c / 2; ++lx) {
      FrequencyBin b;
      b.lx = lx;
      b.ly = ly;
      b.wx = 2.0 * std::numbers::pi * lx / m_c;
      b.wy = 2.0 * std::numbers::pi * ly / m_r;
      b.weight = self_conjugate_row ? 1 : 2;
      grid.bins.push_back(b);
    }
  }
  return grid;
}

}  // namespace regbounds
