// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "scorpio/fluorescence.hpp"
#include "scorpio/image.hpp"
#include "scorpio/mask.hpp"
#include "scorpio/morphology.hpp"

namespace scorpio {

/// Axis-aligned box, top-left anchored. Width and height are >= 1; bounds
/// against a concrete frame are checked wherever a frame is in scope.
struct BBox {
  int x = 0;
  int y = 0;
  int w = 1;
  int h = 1;

  std::int64_t area() const noexcept { return static_cast<std::int64_t>(w) * h; }
  bool operator==(const BBox&) const = default;
};

/// One shape-detector candidate. `source` tags the producing detector
/// ("hcc", "yolo", "blob", ...).
struct Detection {
  int frame = 0;
  BBox bbox;
  double score = 0.0;  // [0, 1]
  std::string source;

  bool operator==(const Detection&) const = default;
};

/// A candidate that passed the fluorescence gate, with the evidence found
/// inside its box. combined_score never exceeds the shape score; it exists
/// only to rank frames for ROC analysis, the gate itself is binary.
struct ValidatedDetection {
  Detection detection;
  std::int64_t fluor_area = 0;   // foreground pixels inside bbox
  double fluor_density = 0.0;    // fluor_area / bbox area
  double combined_score = 0.0;

  bool operator==(const ValidatedDetection&) const = default;
};

/// Parses a line-delimited detection log (one JSON object per line with
/// fields frame, x, y, w, h, score, source). Blank lines are skipped and
/// unknown fields are ignored, so validated logs read back fine.
///
/// Parsing is all-or-nothing: a syntactically broken line throws ParseError
/// and a line whose fields violate the record contract (score outside [0,1],
/// non-positive w/h, negative frame or origin) throws RecordError, both
/// carrying the 1-based line number.
std::vector<Detection> ingest_detections(std::istream& stream);
std::vector<Detection> ingest_detections(const std::string& text);

/// Baseline detector for dark-mode runs without an external shape model:
/// 8-connected foreground components of area >= min_area become detections.
/// bbox is the component bounding box, score its area over the bbox area,
/// source "blob". Output is ordered by (y, x) of the bbox top-left.
std::vector<Detection> blob_detect(const BinaryMask& mask, std::int64_t min_area,
                                   int frame_idx = 0);

/// The dual-validation gate. Computes the cleaned fluorescence mask for the
/// whole frame once, then confirms each candidate by the evidence inside its
/// box: pass iff fluor_area >= min_area and fluor_density >= min_density.
/// combined_score = score * min(1, fluor_density / min_density), with the
/// ratio treated as 1 when min_density <= 0.
///
/// Output preserves candidate order (the gate filters, it never invents).
/// A candidate box outside the frame throws ValidationError naming the
/// candidate index.
std::vector<ValidatedDetection> dual_validate(const RgbFrame& frame,
                                              const std::vector<Detection>& candidates,
                                              const HueBand& band,
                                              const MorphSchedule& schedule,
                                              std::int64_t min_area,
                                              double min_density);

}  // namespace scorpio
