// SPDX-License-Identifier: Apache-2.0
#include "scorpio/temporal.hpp"

namespace scorpio {

std::vector<BlockVerdict> group_blocks(const std::vector<bool>& frame_positive,
                                       int block_size) {
  if (block_size < 1) {
    throw ParameterError("block_size must be >= 1, got " + std::to_string(block_size));
  }

  std::vector<BlockVerdict> out;
  const int n = static_cast<int>(frame_positive.size());
  for (int first = 0; first < n; first += block_size) {
    const int last = std::min(first + block_size, n) - 1;
    bool positive = false;
    for (int f = first; f <= last; ++f) {
      if (frame_positive[f]) {
        positive = true;
        break;
      }
    }
    out.push_back(BlockVerdict{static_cast<int>(out.size()), first, last, positive});
  }
  return out;
}

double block_recall(const std::vector<BlockVerdict>& verdicts) {
  if (verdicts.empty()) {
    throw ParameterError("block recall needs at least one block");
  }
  std::int64_t positives = 0;
  for (const BlockVerdict& v : verdicts) positives += v.positive ? 1 : 0;
  return static_cast<double>(positives) / static_cast<double>(verdicts.size());
}

}  // namespace scorpio
