// SPDX-License-Identifier: Apache-2.0
#include "scorpio/colorspace.hpp"

#include <algorithm>

namespace scorpio {

namespace {

// round-half-up of num/den for num >= 0, den > 0; equals half-away-from-zero
// on the non-negative values this file feeds it.
inline int round_ratio(int num, int den) { return (2 * num + den) / (2 * den); }

}  // namespace

Hsv rgb_to_hsv(Rgb pixel) {
  const int r = pixel.r;
  const int g = pixel.g;
  const int b = pixel.b;
  const int maxc = std::max({r, g, b});
  const int minc = std::min({r, g, b});
  const int delta = maxc - minc;

  const int v = maxc;
  const int s = (maxc == 0) ? 0 : round_ratio(255 * delta, maxc);

  int h = 0;
  if (delta != 0) {
    // t/delta is the half-degree hue before rounding. The max=r sector wraps
    // negative angles by adding a full turn (180 half-degrees).
    int t;
    if (maxc == r) {
      t = 30 * (g - b) + (g < b ? 180 * delta : 0);
    } else if (maxc == g) {
      t = 30 * (b - r) + 60 * delta;
    } else {
      t = 30 * (r - g) + 120 * delta;
    }
    h = round_ratio(t, delta) % 180;
  }

  return Hsv{static_cast<std::uint8_t>(h), static_cast<std::uint8_t>(s),
             static_cast<std::uint8_t>(v)};
}

HsvFrame rgb_to_hsv(const RgbFrame& frame) {
  HsvFrame out(frame.width(), frame.height());
  const Rgb* src = frame.data();
  Hsv* dst = out.data();
  const std::int64_t n = frame.pixel_count();
  for (std::int64_t i = 0; i < n; ++i) {
    dst[i] = rgb_to_hsv(src[i]);
  }
  return out;
}

int sample_hue(const RgbFrame& frame, int x, int y) {
  return rgb_to_hsv(frame.at(x, y)).h;
}

Rgb hsv_to_rgb(Hsv pixel) {
  const int s = pixel.s;
  const int v = pixel.v;
  const int hdeg = 2 * pixel.h;  // 0..358

  // Exact rational channel values over the denominator 255*60. `ramp` is the
  // distance from the nearest sector edge, giving the rising/falling channel.
  const int sector = hdeg / 60;
  const int ramp = 60 - std::abs(hdeg % 120 - 60);
  const auto scaled = [&](int num) {
    const long long n2 = static_cast<long long>(v) * num;
    const long long den = 255LL * 60LL;
    return static_cast<int>((2 * n2 + den) / (2 * den));
  };

  const int major = v;
  const int minor = scaled((255 - s) * 60);
  const int mid = scaled((255 - s) * 60 + s * ramp);

  const auto u8 = [](int c) { return static_cast<std::uint8_t>(c); };
  switch (sector) {
    case 0: return Rgb{u8(major), u8(mid), u8(minor)};
    case 1: return Rgb{u8(mid), u8(major), u8(minor)};
    case 2: return Rgb{u8(minor), u8(major), u8(mid)};
    case 3: return Rgb{u8(minor), u8(mid), u8(major)};
    case 4: return Rgb{u8(mid), u8(minor), u8(major)};
    default: return Rgb{u8(major), u8(minor), u8(mid)};
  }
}

}  // namespace scorpio
