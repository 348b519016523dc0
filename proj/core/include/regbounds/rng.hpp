#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

namespace regbounds {

// Counter-free splittable RNG. Streams are derived by hashing a key path
// (master seed, cell, trial, frame, purpose) through SplitMix64, so any
// stream can be reconstructed independently of scheduling order. Gaussian
// variates use Box-Muller on 53-bit uniforms; no libc distribution state is
// involved, so sequences are identical across platforms and thread counts.

inline uint64_t splitmix64_mix(uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class RngStream {
 public:
  explicit RngStream(uint64_t state) : state_(state) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    // u1 in (0,1] keeps the log finite.
    const double u1 = 1.0 - uniform01();
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(a);
    has_spare_ = true;
    return r * std::cos(a);
  }

 private:
  uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline RngStream make_stream(uint64_t master, std::initializer_list<uint64_t> path) {
  uint64_t s = splitmix64_mix(master);
  for (uint64_t id : path) {
    s = splitmix64_mix(s ^ splitmix64_mix(id + 0x632be59bd9b4e019ULL));
  }
  return RngStream(s);
}

// Stream purposes, kept stable so recorded seeds stay replayable.
enum class StreamUse : uint64_t {
  kImageGen = 1,
  kShiftSample = 2,
  kNoise = 3,
};

}  // namespace regbounds
