#pragma once

#include <string>

#include "regbounds/geometry.hpp"

namespace regbounds {

// Portable graymap reader/writer. Accepts binary (P5) and ASCII (P2) inputs
// with 8- or 16-bit samples (16-bit big-endian per the format); values are
// returned as raw doubles in [0, maxval]. Throws IoError on malformed input
// and InvalidGeometry when the raster dimensions are odd.
Image read_pgm(const std::string& path);

// Writes 16-bit binary PGM, linearly mapping [min, max] of the image onto
// [0, 65535].
void write_pgm(const std::string& path, const Image& image);

}  // namespace regbounds
