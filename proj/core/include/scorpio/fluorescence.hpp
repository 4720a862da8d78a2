// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <span>

#include "scorpio/image.hpp"
#include "scorpio/mask.hpp"

namespace scorpio {

/// Saturation/value floors applied alongside the hue band. Hue is meaningless
/// on nearly gray or nearly black pixels, so the floors keep sensor noise out
/// of the mask; both are configurable per pipeline.
inline constexpr int kDefaultSatFloor = 30;
inline constexpr int kDefaultValFloor = 40;

/// Summary of probed hue samples from a fluorescing specimen.
struct HueStats {
  double mean = 0.0;  // half-degree units, [0, 180)
  double sd = 0.0;    // population standard deviation, >= 0
  int n = 0;

  bool operator==(const HueStats&) const = default;
};

/// Closed hue interval plus saturation/value floors. A pixel is
/// fluorescence-colored iff lo <= h <= hi, s >= s_min and v >= v_min.
/// Wrapping bands are unsupported; the fluorescence band sits in cyan-green,
/// far from the hue origin.
struct HueBand {
  int lo = 0;
  int hi = 179;
  int s_min = kDefaultSatFloor;
  int v_min = kDefaultValFloor;

  bool operator==(const HueBand&) const = default;
};

/// Validates band invariants (0 <= lo <= hi <= 179, floors in 0..255);
/// throws ParameterError on violation.
HueBand make_band(int lo, int hi, int s_min = kDefaultSatFloor,
                  int v_min = kDefaultValFloor);

/// Mean and population standard deviation (divide by n) of probed hues.
/// Throws CalibrationError when the sample list is empty or a sample is
/// outside 0..179.
HueStats hue_stats(std::span<const int> samples);

/// Derives the detection band as mean +/- one standard deviation, rounded
/// half-away-from-zero and clamped to 0..179. On the calibration data this
/// library ships as defaults (mean 77.4, sd 4.5) that yields 73..82.
HueBand stats_to_band(const HueStats& stats, int s_min = kDefaultSatFloor,
                      int v_min = kDefaultValFloor);

/// Per-pixel band membership mask over an HSV frame.
BinaryMask band_mask(const HsvFrame& frame, const HueBand& band);

}  // namespace scorpio
