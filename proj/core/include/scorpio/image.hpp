// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "scorpio/error.hpp"

namespace scorpio {

struct Rgb {
  std::uint8_t r = 0;
  std::uint8_t g = 0;
  std::uint8_t b = 0;

  bool operator==(const Rgb&) const = default;
};

/// Pixel in HSV form. Hue is stored in half-degree units (0..179) so the
/// calibrated fluorescence band 73..82 is directly addressable; saturation
/// and value are 0..255.
struct Hsv {
  std::uint8_t h = 0;
  std::uint8_t s = 0;
  std::uint8_t v = 0;

  bool operator==(const Hsv&) const = default;
};

namespace detail {

inline void check_dimensions(int width, int height) {
  if (width < 1 || height < 1) {
    throw ParameterError("image dimensions must be at least 1x1, got " +
                         std::to_string(width) + "x" + std::to_string(height));
  }
}

inline void check_coordinate(int coord, int extent, const char* axis) {
  if (coord < 0 || coord >= extent) {
    throw CoordinateError(std::string(axis) + " coordinate " + std::to_string(coord) +
                          " outside [0, " + std::to_string(extent) + ")");
  }
}

}  // namespace detail

/// Immutable-by-convention raster with row-major pixel storage. All pipeline
/// functions take frames by const reference and return new frames, so sharing
/// one frame across concurrent workers is safe.
template <typename PixelT>
class Image {
public:
  Image(int width, int height, PixelT fill = PixelT{})
      : width_(width), height_(height) {
    detail::check_dimensions(width, height);
    pixels_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height), fill);
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::int64_t pixel_count() const noexcept {
    return static_cast<std::int64_t>(width_) * height_;
  }

  /// Bounds-checked access; throws CoordinateError naming the bad axis.
  const PixelT& at(int x, int y) const {
    detail::check_coordinate(x, width_, "x");
    detail::check_coordinate(y, height_, "y");
    return pixels_[index(x, y)];
  }
  PixelT& at(int x, int y) {
    detail::check_coordinate(x, width_, "x");
    detail::check_coordinate(y, height_, "y");
    return pixels_[index(x, y)];
  }

  const PixelT* data() const noexcept { return pixels_.data(); }
  PixelT* data() noexcept { return pixels_.data(); }

  const PixelT* row(int y) const noexcept { return pixels_.data() + index(0, y); }
  PixelT* row(int y) noexcept { return pixels_.data() + index(0, y); }

  bool operator==(const Image&) const = default;

private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<PixelT> pixels_;
};

using RgbFrame = Image<Rgb>;
using HsvFrame = Image<Hsv>;

}  // namespace scorpio
