#pragma once

#include <complex>
#include <numbers>
#include <vector>

#include "regbounds/geometry.hpp"

namespace regbounds {

using cdouble = std::complex<double>;

// Map a DFT storage index to its signed harmonic: for even m, indices
// 0..m/2-1 stay, m/2..m-1 become negative with the Nyquist index mapping
// to -m/2.
inline int signed_freq_index(int l, int m) { return l < (m + 1) / 2 ? l : l - m; }

// Angular frequency of storage index l on an m-point axis, rad/px.
inline double omega_of_index(int l, int m) {
  return 2.0 * std::numbers::pi * signed_freq_index(l, m) / m;
}

// 2D complex-to-complex transforms backed by FFTW with a process-wide plan
// cache (FFTW_ESTIMATE plans, so results are reproducible run to run).
// Execution is thread-safe; planning is serialized internally.
// Forward is unnormalized; inverse carries the 1/N factor.
void fft2_forward(const ImageGeometry& g, const cdouble* in, cdouble* out);
void fft2_inverse(const ImageGeometry& g, const cdouble* in, cdouble* out);

std::vector<cdouble> fft2(const Image& img);
std::vector<cdouble> ifft2(const ImageGeometry& g, const std::vector<cdouble>& spec);

// Inverse transform of a (nominally Hermitian) spectrum, keeping the real
// part. Returns the largest |imaginary| residue via *imag_residue when asked.
Image ifft2_real(const ImageGeometry& g, const std::vector<cdouble>& spec,
                 double* imag_residue = nullptr);

}  // namespace regbounds
