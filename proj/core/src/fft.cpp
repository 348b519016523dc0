#include "regbounds/fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstdint>
#include <map>
#include <mutex>

namespace regbounds {

namespace {

struct PlanKey {
  int rows;
  int cols;
  int sign;
  bool operator<(const PlanKey& o) const {
    if (rows != o.rows) return rows < o.rows;
    if (cols != o.cols) return cols < o.cols;
    return sign < o.sign;
  }
};

class PlanCache {
 public:
  fftw_plan get(int rows, int cols, int sign) {
    std::lock_guard<std::mutex> lock(mu_);
    const PlanKey key{rows, cols, sign};
    auto it = plans_.find(key);
    if (it != plans_.end()) return it->second;
    // Dummy buffers only shape the plan; FFTW_UNALIGNED lets us execute on
    // any caller array via the new-array interface.
    std::vector<cdouble> a(static_cast<size_t>(rows) * cols);
    std::vector<cdouble> b(a.size());
    fftw_plan p = fftw_plan_dft_2d(rows, cols, reinterpret_cast<fftw_complex*>(a.data()),
                                   reinterpret_cast<fftw_complex*>(b.data()), sign,
                                   FFTW_ESTIMATE | FFTW_UNALIGNED);
    plans_.emplace(key, p);
    return p;
  }

 private:
  std::mutex mu_;
  std::map<PlanKey, fftw_plan> plans_;
};

PlanCache& cache() {
  static PlanCache c;
  return c;
}

}  // namespace

void fft2_forward(const ImageGeometry& g, const cdouble* in, cdouble* out) {
  fftw_plan p = cache().get(g.rows, g.cols, FFTW_FORWARD);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
}

void fft2_inverse(const ImageGeometry& g, const cdouble* in, cdouble* out) {
  fftw_plan p = cache().get(g.rows, g.cols, FFTW_BACKWARD);
  fftw_execute_dft(p, reinterpret_cast<fftw_complex*>(const_cast<cdouble*>(in)),
                   reinterpret_cast<fftw_complex*>(out));
  const double inv_n = 1.0 / g.pixel_count();
  const size_t n = static_cast<size_t>(g.pixel_count());
  for (size_t i = 0; i < n; ++i) out[i] *= inv_n;
}

std::vector<cdouble> fft2(const Image& img) {
  const size_t n = static_cast<size_t>(img.size());
  std::vector<cdouble> in(n), out(n);
  for (size_t i = 0; i < n; ++i) in[i] = img[i];
  fft2_forward(img.geometry(), in.data(), out.data());
  return out;
}

std::vector<cdouble> ifft2(const ImageGeometry& g, const std::vector<cdouble>& spec) {
  std::vector<cdouble> out(spec.size());
  fft2_inverse(g, spec.data(), out.data());
  return out;
}

Image ifft2_real(const ImageGeometry& g, const std::vector<cdouble>& spec,
                 double* imag_residue) {
  std::vector<cdouble> out = ifft2(g, spec);
  Image img(g);
  double worst = 0.0;
  for (size_t i = 0; i < out.size(); ++i) {
    img[i] = out[i].real();
    worst = std::max(worst, std::abs(out[i].imag()));
  }
  if (imag_residue) *imag_residue = worst;
  return img;
}

}  // namespace regbounds
