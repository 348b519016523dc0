#pragma once

#include <string>
#include <variant>
#include <vector>

#include "regbounds/geometry.hpp"
#include "regbounds/rng.hpp"

namespace regbounds {

// Shift distributions used by the experiments: the symmetric box of the
// Monte Carlo protocol and the positive-quadrant uniform prior of the EZZB.
struct UniformBox {
  double half_width = 5.0;
};
struct UniformPositive {
  double d = 20.0;
};

class ShiftSampler {
 public:
  ShiftSampler(UniformBox b) : v_(b) { check(b.half_width); }
  ShiftSampler(UniformPositive p) : v_(p) { check(p.d); }

  Shift sample(RngStream& rng) const {
    if (const auto* b = std::get_if<UniformBox>(&v_)) {
      const double x = rng.uniform(-b->half_width, b->half_width);
      const double y = rng.uniform(-b->half_width, b->half_width);
      return {x, y};
    }
    const auto& p = std::get<UniformPositive>(v_);
    const double x = rng.uniform(0.0, p.d);
    const double y = rng.uniform(0.0, p.d);
    return {x, y};
  }

  double max_abs() const {
    if (const auto* b = std::get_if<UniformBox>(&v_)) return b->half_width;
    return std::get<UniformPositive>(v_).d;
  }

 private:
  static void check(double v) {
    if (!(v > 0.0)) throw InvalidGeometry("sampler width must be > 0");
  }
  std::variant<UniformBox, UniformPositive> v_;
};

// K+1 noisy frames of a common latent image, frame 0 unshifted.
struct ObservationSet {
  std::vector<Image> frames;       // size K+1
  std::vector<Shift> true_shifts;  // size K+1, [0] = (0,0)
  double sigma2 = 0.0;
  std::string source_model;        // "flat", "natural-synth", "raster", ...
  uint64_t seed = 0;

  int k() const { return static_cast<int>(frames.size()) - 1; }
};

// Realization of a flat-spectrum process: i.i.d. uniform samples scaled by
// `amplitude`, then mean-subtracted.
Image gen_flat_image(const ImageGeometry& geometry, RngStream& rng, double amplitude = 1.0);

// Realization of the quadratic-decay ("natural") spectrum: white complex
// Gaussian Fourier coefficients shaped by sqrt(S_n)/|omega|, DC pinned to
// zero, Hermitian-symmetrized, inverse transformed.
Image gen_natural_image(const ImageGeometry& geometry, RngStream& rng, double amplitude = 1.0);

// Cyclic subpixel shift by tau: content at x moves to x + tau. Implemented
// as the phase ramp exp(-i omega . tau); the unpaired Nyquist harmonics use
// the cosine convention so the output stays real.
Image fourier_shift(const Image& image, const Shift& tau);

// Synthesize frame 0 = u + noise and frames 1..K = shift(u, tau_i) + noise,
// noise i.i.d. Gaussian with variance sigma2, shifts drawn from the sampler.
// Streams are keyed on (seed, frame, purpose), so generation is reproducible
// independently of scheduling.
ObservationSet make_observations(const Image& u, int k, const ShiftSampler& sampler,
                                 double sigma2, uint64_t seed);

}  // namespace regbounds
