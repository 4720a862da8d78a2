// SPDX-License-Identifier: Apache-2.0
#include "scorpio/detection.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "scorpio/colorspace.hpp"

#include "record_json.hpp"

namespace scorpio {

std::vector<Detection> ingest_detections(std::istream& stream) {
  std::vector<Detection> out;
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (detail::blank_line(line)) continue;
    const nlohmann::json obj = detail::parse_record_object(line, line_no);
    out.push_back(detail::parse_detection_record(obj, line_no));
  }
  return out;
}

std::vector<Detection> ingest_detections(const std::string& text) {
  std::istringstream stream(text);
  return ingest_detections(stream);
}

std::vector<Detection> blob_detect(const BinaryMask& mask, std::int64_t min_area,
                                   int frame_idx) {
  const int w = mask.width();
  const int h = mask.height();

  std::vector<std::uint8_t> visited(static_cast<std::size_t>(w) * h, 0);
  std::vector<std::pair<int, int>> stack;
  std::vector<Detection> out;

  const auto idx = [w](int x, int y) {
    return static_cast<std::size_t>(y) * w + x;
  };

  for (int sy = 0; sy < h; ++sy) {
    for (int sx = 0; sx < w; ++sx) {
      if (!mask.get(sx, sy) || visited[idx(sx, sy)]) continue;

      // Flood-fill one 8-connected component.
      std::int64_t area = 0;
      int min_x = sx, max_x = sx, min_y = sy, max_y = sy;
      visited[idx(sx, sy)] = 1;
      stack.clear();
      stack.emplace_back(sx, sy);
      while (!stack.empty()) {
        const auto [x, y] = stack.back();
        stack.pop_back();
        ++area;
        min_x = std::min(min_x, x);
        max_x = std::max(max_x, x);
        min_y = std::min(min_y, y);
        max_y = std::max(max_y, y);
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            if (dx == 0 && dy == 0) continue;
            const int nx = x + dx;
            const int ny = y + dy;
            if (nx < 0 || nx >= w || ny < 0 || ny >= h) continue;
            if (!mask.get(nx, ny) || visited[idx(nx, ny)]) continue;
            visited[idx(nx, ny)] = 1;
            stack.emplace_back(nx, ny);
          }
        }
      }

      if (area < min_area) continue;
      Detection d;
      d.frame = frame_idx;
      d.bbox = BBox{min_x, min_y, max_x - min_x + 1, max_y - min_y + 1};
      d.score = static_cast<double>(area) / static_cast<double>(d.bbox.area());
      d.source = "blob";
      out.push_back(std::move(d));
    }
  }

  std::stable_sort(out.begin(), out.end(), [](const Detection& a, const Detection& b) {
    if (a.bbox.y != b.bbox.y) return a.bbox.y < b.bbox.y;
    return a.bbox.x < b.bbox.x;
  });
  return out;
}

std::vector<ValidatedDetection> dual_validate(const RgbFrame& frame,
                                              const std::vector<Detection>& candidates,
                                              const HueBand& band,
                                              const MorphSchedule& schedule,
                                              std::int64_t min_area,
                                              double min_density) {
  const BinaryMask mask = apply_schedule(band_mask(rgb_to_hsv(frame), band), schedule);

  std::vector<ValidatedDetection> out;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const Detection& cand = candidates[i];
    const BBox& box = cand.bbox;
    if (box.x < 0 || box.y < 0 || box.w < 1 || box.h < 1 ||
        box.x + box.w > frame.width() || box.y + box.h > frame.height()) {
      throw ValidationError("candidate " + std::to_string(i) + ": bbox (" +
                            std::to_string(box.x) + "," + std::to_string(box.y) + "," +
                            std::to_string(box.w) + "," + std::to_string(box.h) +
                            ") outside frame " + std::to_string(frame.width()) + "x" +
                            std::to_string(frame.height()));
    }

    std::int64_t area = 0;
    for (int y = box.y; y < box.y + box.h; ++y) {
      const std::uint8_t* row = mask.row(y);
      for (int x = box.x; x < box.x + box.w; ++x) area += row[x];
    }

    const double density = static_cast<double>(area) / static_cast<double>(box.area());
    if (area >= min_area && density >= min_density) {
      const double ratio =
          (min_density <= 0.0) ? 1.0 : std::min(1.0, density / min_density);
      out.push_back(ValidatedDetection{cand, area, density, cand.score * ratio});
    }
  }
  return out;
}

}  // namespace scorpio
