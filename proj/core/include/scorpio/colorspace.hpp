// SPDX-License-Identifier: Apache-2.0
#pragma once

#include "scorpio/image.hpp"

namespace scorpio {

/// Converts one pixel to HSV.
///
/// With M = max(r,g,b), m = min(r,g,b) and D = M - m:
///   v = M
///   s = 0 if M = 0, else 255*D/M rounded
///   h = half the usual 0..360 degree hue, rounded, wrapped into 0..179
/// Rounding is half-away-from-zero throughout. When channels tie at the
/// maximum the hue sector is resolved with precedence r, then g, then b.
/// Achromatic pixels (D = 0) get h = 0, so hue must always be paired with a
/// saturation floor downstream.
///
/// The whole computation is done in exact integer arithmetic, so results are
/// identical on every platform.
Hsv rgb_to_hsv(Rgb pixel);

/// Converts a full frame, pixel by pixel in row-major order.
HsvFrame rgb_to_hsv(const RgbFrame& frame);

/// Hue of a single pixel; throws CoordinateError naming the offending axis
/// when (x, y) is outside the frame.
int sample_hue(const RgbFrame& frame, int x, int y);

/// Inverse conversion, also exact-integer. Used by the synthetic scene
/// renderer to author frames in HSV terms.
Rgb hsv_to_rgb(Hsv pixel);

}  // namespace scorpio
