// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "scorpio/mask.hpp"

namespace scorpio {

enum class MorphOp { Erode, Dilate };

struct MorphStep {
  MorphOp op = MorphOp::Erode;
  int count = 1;  // >= 1

  bool operator==(const MorphStep&) const = default;
};

/// Ordered cleanup schedule; each step repeats its operation `count` times.
/// Schedules are plain data so alternative cleanups are expressible as
/// configuration rather than code. An empty schedule is the identity.
struct MorphSchedule {
  std::vector<MorphStep> steps;

  /// The calibrated default: two dilations, six erosions, eight dilations.
  /// Kills thin bright contours (wet-surface reflections) while restoring the
  /// fluorescing body to a detectable size and density.
  static MorphSchedule default_cleanup();

  bool operator==(const MorphSchedule&) const = default;
};

/// Erosion with a 3x3 square structuring element. Output is foreground iff
/// the whole 3x3 neighborhood is foreground; pixels outside the frame count
/// as background, so foreground touching the border erodes away.
BinaryMask erode(const BinaryMask& mask);

/// Dilation with a 3x3 square structuring element. Output is foreground iff
/// any pixel of the 3x3 neighborhood is foreground; outside pixels are
/// background and output is clipped to the frame.
BinaryMask dilate(const BinaryMask& mask);

/// Applies the schedule's steps left to right. Throws ParameterError when a
/// step count is below 1.
BinaryMask apply_schedule(BinaryMask mask, const MorphSchedule& schedule);

/// Compact textual form used by the CLI, e.g. "dilate:2,erode:6,dilate:8".
MorphSchedule parse_schedule(const std::string& text);
std::string format_schedule(const MorphSchedule& schedule);

}  // namespace scorpio
