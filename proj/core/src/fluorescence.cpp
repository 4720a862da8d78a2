// SPDX-License-Identifier: Apache-2.0
#include "scorpio/fluorescence.hpp"

#include <algorithm>
#include <cmath>

namespace scorpio {

namespace {

void check_channel_range(int value, int hi, const char* name) {
  if (value < 0 || value > hi) {
    throw ParameterError(std::string(name) + " must be in 0.." + std::to_string(hi) +
                         ", got " + std::to_string(value));
  }
}

}  // namespace

HueBand make_band(int lo, int hi, int s_min, int v_min) {
  check_channel_range(lo, 179, "hue lo");
  check_channel_range(hi, 179, "hue hi");
  check_channel_range(s_min, 255, "s_min");
  check_channel_range(v_min, 255, "v_min");
  if (lo > hi) {
    throw ParameterError("hue band lo " + std::to_string(lo) + " exceeds hi " +
                         std::to_string(hi) + " (wrapping bands unsupported)");
  }
  return HueBand{lo, hi, s_min, v_min};
}

HueStats hue_stats(std::span<const int> samples) {
  if (samples.empty()) {
    throw CalibrationError("cannot calibrate from an empty hue sample list");
  }
  double sum = 0.0;
  for (int s : samples) {
    if (s < 0 || s > 179) {
      throw CalibrationError("hue sample " + std::to_string(s) + " outside 0..179");
    }
    sum += s;
  }
  const double n = static_cast<double>(samples.size());
  const double mean = sum / n;

  double sq = 0.0;
  for (int s : samples) {
    const double d = s - mean;
    sq += d * d;
  }
  const double sd = std::sqrt(sq / n);
  return HueStats{mean, sd, static_cast<int>(samples.size())};
}

HueBand stats_to_band(const HueStats& stats, int s_min, int v_min) {
  const auto clamp_hue = [](long v) {
    return static_cast<int>(std::clamp(v, 0L, 179L));
  };
  // lround rounds half away from zero, matching the pipeline-wide rule.
  const int lo = clamp_hue(std::lround(stats.mean - stats.sd));
  const int hi = clamp_hue(std::lround(stats.mean + stats.sd));
  return make_band(lo, hi, s_min, v_min);
}

BinaryMask band_mask(const HsvFrame& frame, const HueBand& band) {
  BinaryMask mask(frame.width(), frame.height());
  const Hsv* src = frame.data();
  std::uint8_t* dst = mask.data();
  const std::int64_t n = frame.pixel_count();
  for (std::int64_t i = 0; i < n; ++i) {
    const Hsv px = src[i];
    dst[i] = (px.h >= band.lo && px.h <= band.hi && px.s >= band.s_min &&
              px.v >= band.v_min)
                 ? 1
                 : 0;
  }
  return mask;
}

}  // namespace scorpio
