// SPDX-License-Identifier: Apache-2.0
#include "scorpio/morphology.hpp"

#include <sstream>
#include <utility>

namespace scorpio {

namespace {

// The 3x3 square element is separable: a horizontal 1x3 pass followed by a
// vertical 3x1 pass. Out-of-frame neighbors contribute `border` (0 for both
// ops, since erosion ANDs it in and dilation ORs it in).
template <bool kErode>
BinaryMask morph3x3(const BinaryMask& in) {
  const int w = in.width();
  const int h = in.height();
  BinaryMask tmp(w, h);
  BinaryMask out(w, h);

  for (int y = 0; y < h; ++y) {
    const std::uint8_t* src = in.row(y);
    std::uint8_t* dst = tmp.row(y);
    for (int x = 0; x < w; ++x) {
      const std::uint8_t left = (x > 0) ? src[x - 1] : 0;
      const std::uint8_t right = (x + 1 < w) ? src[x + 1] : 0;
      if constexpr (kErode) {
        dst[x] = left & src[x] & right;
      } else {
        dst[x] = left | src[x] | right;
      }
    }
  }

  for (int y = 0; y < h; ++y) {
    const std::uint8_t* mid = tmp.row(y);
    const std::uint8_t* up = (y > 0) ? tmp.row(y - 1) : nullptr;
    const std::uint8_t* down = (y + 1 < h) ? tmp.row(y + 1) : nullptr;
    std::uint8_t* dst = out.row(y);
    for (int x = 0; x < w; ++x) {
      const std::uint8_t a = up ? up[x] : 0;
      const std::uint8_t c = down ? down[x] : 0;
      if constexpr (kErode) {
        dst[x] = a & mid[x] & c;
      } else {
        dst[x] = a | mid[x] | c;
      }
    }
  }
  return out;
}

}  // namespace

MorphSchedule MorphSchedule::default_cleanup() {
  return MorphSchedule{{{MorphOp::Dilate, 2}, {MorphOp::Erode, 6}, {MorphOp::Dilate, 8}}};
}

BinaryMask erode(const BinaryMask& mask) { return morph3x3<true>(mask); }

BinaryMask dilate(const BinaryMask& mask) { return morph3x3<false>(mask); }

BinaryMask apply_schedule(BinaryMask mask, const MorphSchedule& schedule) {
  for (const MorphStep& step : schedule.steps) {
    if (step.count < 1) {
      throw ParameterError("schedule step count must be >= 1, got " +
                           std::to_string(step.count));
    }
    for (int i = 0; i < step.count; ++i) {
      mask = (step.op == MorphOp::Erode) ? erode(mask) : dilate(mask);
    }
  }
  return mask;
}

MorphSchedule parse_schedule(const std::string& text) {
  MorphSchedule schedule;
  if (text.empty()) return schedule;

  std::istringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos) {
      throw ParameterError("bad schedule step '" + item + "', expected op:count");
    }
    const std::string op = item.substr(0, colon);
    const std::string count_text = item.substr(colon + 1);
    MorphStep step;
    if (op == "erode") {
      step.op = MorphOp::Erode;
    } else if (op == "dilate") {
      step.op = MorphOp::Dilate;
    } else {
      throw ParameterError("unknown schedule op '" + op + "', expected erode or dilate");
    }
    try {
      std::size_t used = 0;
      step.count = std::stoi(count_text, &used);
      if (used != count_text.size()) throw std::invalid_argument(count_text);
    } catch (const std::exception&) {
      throw ParameterError("bad schedule count '" + count_text + "'");
    }
    if (step.count < 1) {
      throw ParameterError("schedule step count must be >= 1, got " + count_text);
    }
    schedule.steps.push_back(step);
  }
  return schedule;
}

std::string format_schedule(const MorphSchedule& schedule) {
  std::string out;
  for (const MorphStep& step : schedule.steps) {
    if (!out.empty()) out += ',';
    out += (step.op == MorphOp::Erode) ? "erode" : "dilate";
    out += ':';
    out += std::to_string(step.count);
  }
  return out;
}

}  // namespace scorpio
