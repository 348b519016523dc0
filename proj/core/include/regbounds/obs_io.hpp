#pragma once

#include <string>

#include "regbounds/synth.hpp"

namespace regbounds {

// Binary container for an ObservationSet (reproducibility audits).
// Little-endian layout:
//   magic "ROBS" + u32 version
//   u32 rows, u32 cols, u32 K
//   f64 sigma2, u64 seed
//   u32 tag_len + source_model bytes
//   (K+1) * 2 f64 true shifts (x, y)
//   (K+1) * rows*cols f64 frames, row-major
void write_observations(const std::string& path, const ObservationSet& obs);
ObservationSet read_observations(const std::string& path);

}  // namespace regbounds
