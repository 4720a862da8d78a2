// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>

#include "scorpio/fluorescence.hpp"
#include "scorpio/morphology.hpp"

namespace scorpio {

/// The pipeline's operating constants. The defaults are the calibrated
/// values this project ships with: hue band 73..82 (half-degrees), the
/// dilate:2,erode:6,dilate:8 cleanup, and 5-frame blocks at 5 fps.
struct PipelineConfig {
  int hue_lo = 73;
  int hue_hi = 82;
  int s_min = kDefaultSatFloor;
  int v_min = kDefaultValFloor;
  MorphSchedule morph_schedule = MorphSchedule::default_cleanup();
  std::int64_t min_area = 40;
  double min_density = 0.05;
  int block_size = 5;
  int fps = 5;

  HueBand band() const { return make_band(hue_lo, hue_hi, s_min, v_min); }

  /// Throws ConfigError when any field violates its range or hue_lo > hue_hi.
  void validate() const;

  bool operator==(const PipelineConfig&) const = default;
};

/// Parses a JSON config document. Every key is optional and defaults as
/// above; unknown keys are errors so typos in experiments fail loudly.
/// The schedule is a JSON array of {"op": "erode"|"dilate", "count": n}.
PipelineConfig parse_config(const std::string& json_text);
std::string serialize_config(const PipelineConfig& config);

PipelineConfig load_config(const std::filesystem::path& path);
void save_config(const PipelineConfig& config, const std::filesystem::path& path);

}  // namespace scorpio
