#pragma once

#include <cstddef>
#include <vector>

#include "regbounds/errors.hpp"

namespace regbounds {

// Pixel raster dimensions. Both sides must be even: the Hermitian half-plane
// bookkeeping and the Nyquist-bin conventions assume it.
struct ImageGeometry {
  int rows = 0;  // m_r
  int cols = 0;  // m_c

  ImageGeometry() = default;
  ImageGeometry(int m_r, int m_c) : rows(m_r), cols(m_c) { validate(); }

  int pixel_count() const { return rows * cols; }

  void validate() const {
    if (rows < 2 || cols < 2 || rows % 2 != 0 || cols % 2 != 0) {
      throw InvalidGeometry("image geometry must have even rows/cols >= 2, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
    }
  }

  bool operator==(const ImageGeometry&) const = default;
};

// Row-major real-valued image. Spatial x runs along columns, y along rows,
// matching the (omega_x, omega_y) frequency convention.
class Image {
 public:
  Image() = default;
  explicit Image(ImageGeometry g) : geom_(g), data_(static_cast<size_t>(g.pixel_count()), 0.0) {}
  Image(int rows, int cols) : Image(ImageGeometry(rows, cols)) {}

  const ImageGeometry& geometry() const { return geom_; }
  int rows() const { return geom_.rows; }
  int cols() const { return geom_.cols; }
  int size() const { return geom_.pixel_count(); }

  double& at(int r, int c) { return data_[static_cast<size_t>(r) * geom_.cols + c]; }
  double at(int r, int c) const { return data_[static_cast<size_t>(r) * geom_.cols + c]; }
  double& operator[](size_t i) { return data_[i]; }
  double operator[](size_t i) const { return data_[i]; }

  double* data() { return data_.data(); }
  const double* data() const { return data_.data(); }
  std::vector<double>& storage() { return data_; }
  const std::vector<double>& storage() const { return data_; }

 private:
  ImageGeometry geom_;
  std::vector<double> data_;
};

// 2D translation in pixels; x along columns, y along rows.
struct Shift {
  double x = 0.0;
  double y = 0.0;
};

}  // namespace regbounds
