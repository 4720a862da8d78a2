// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <vector>

#include "scorpio/error.hpp"
#include "scorpio/image.hpp"

namespace scorpio {

/// Per-pixel foreground map, row-major, one byte per pixel (0 or 1).
class BinaryMask {
public:
  BinaryMask(int width, int height, bool fill = false)
      : width_(width), height_(height) {
    detail::check_dimensions(width, height);
    cells_.assign(static_cast<std::size_t>(width) * static_cast<std::size_t>(height),
                  fill ? std::uint8_t{1} : std::uint8_t{0});
  }

  int width() const noexcept { return width_; }
  int height() const noexcept { return height_; }
  std::int64_t pixel_count() const noexcept {
    return static_cast<std::int64_t>(width_) * height_;
  }

  bool at(int x, int y) const {
    detail::check_coordinate(x, width_, "x");
    detail::check_coordinate(y, height_, "y");
    return cells_[index(x, y)] != 0;
  }
  void set(int x, int y, bool value) {
    detail::check_coordinate(x, width_, "x");
    detail::check_coordinate(y, height_, "y");
    cells_[index(x, y)] = value ? 1 : 0;
  }

  /// Unchecked test for hot loops; caller guarantees bounds.
  bool get(int x, int y) const noexcept { return cells_[index(x, y)] != 0; }

  /// Number of foreground pixels.
  std::int64_t count() const noexcept {
    std::int64_t n = 0;
    for (std::uint8_t c : cells_) n += c;
    return n;
  }

  const std::uint8_t* data() const noexcept { return cells_.data(); }
  std::uint8_t* data() noexcept { return cells_.data(); }
  const std::uint8_t* row(int y) const noexcept { return cells_.data() + index(0, y); }
  std::uint8_t* row(int y) noexcept { return cells_.data() + index(0, y); }

  bool operator==(const BinaryMask&) const = default;

private:
  std::size_t index(int x, int y) const noexcept {
    return static_cast<std::size_t>(y) * static_cast<std::size_t>(width_) +
           static_cast<std::size_t>(x);
  }

  int width_;
  int height_;
  std::vector<std::uint8_t> cells_;
};

}  // namespace scorpio
