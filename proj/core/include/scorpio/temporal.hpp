// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <vector>

#include "scorpio/error.hpp"

namespace scorpio {

/// Verdict over one block of consecutive frames (one second of video at the
/// native frame rate). `frame_first`/`frame_last` are inclusive indices.
struct BlockVerdict {
  int block_idx = 0;
  int frame_first = 0;
  int frame_last = 0;
  bool positive = false;

  bool operator==(const BlockVerdict&) const = default;
};

/// Partitions per-frame verdicts into ceil(n / block_size) consecutive blocks
/// (the final block may be partial). A block is positive iff at least one of
/// its frames is positive: more than one detection per second adds nothing to
/// reaction time, so one hit per block counts as detection for that second.
/// Throws ParameterError when block_size < 1.
std::vector<BlockVerdict> group_blocks(const std::vector<bool>& frame_positive,
                                       int block_size);

/// Fraction of positive blocks: the seconds-with-detection recall.
/// Throws ParameterError on an empty verdict list.
double block_recall(const std::vector<BlockVerdict>& verdicts);

}  // namespace scorpio
