// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "scorpio/error.hpp"
#include "scorpio/image.hpp"

namespace scorpio {

/// Rings are drawn as the classic wet-reflection distractor: bright but
/// washed out. Saturation is fixed low and value high so a ring lands inside
/// the color gate yet stays a thin structure the cleanup schedule removes.
inline constexpr int kRingSat = 64;
inline constexpr int kRingVal = 255;

/// A filled axis-aligned ellipse ("blob"), the stand-in for a glowing target.
struct EllipseSpec {
  int cx = 0;
  int cy = 0;
  int rx = 1;
  int ry = 1;
  int hue = 0;  // 0-179 half-degrees
  int sat = 255;
  int val = 255;

  bool operator==(const EllipseSpec&) const = default;
};

/// A 1-px-thick circle. `spread` jitters the hue deterministically per pixel
/// within ±spread so the ring is not one flat color.
struct RingSpec {
  int cx = 0;
  int cy = 0;
  int radius = 1;
  int hue = 0;    // 0-179 half-degrees
  int spread = 0;  // ≥ 0
  bool operator==(const RingSpec&) const = default;
};

/// Description of one synthetic frame: black background, blobs, rings, then
/// optional additive LCG noise. Everything is integer-valued so renders are
/// bit-identical across platforms.
struct SceneSpec {
  int width = 1;
  int height = 1;
  std::vector<EllipseSpec> blobs;
  std::vector<RingSpec> rings;
  std::uint32_t noise_seed = 0;
  int noise_amplitude = 0;  // 0-255; 0 disables noise entirely

  bool operator==(const SceneSpec&) const = default;
};

/// Renders the scene. Shapes are validated to fit entirely inside the frame
/// (SceneSpecError otherwise). Noise adds ((lcg_byte * amplitude) / 255) to
/// each channel, saturating at 255; the LCG is state ← state×1664525 +
/// 1013904223 (mod 2^32) with one byte per channel (r, g, b, row-major)
/// taken from the top 8 bits after each step.
RgbFrame synth_scene(const SceneSpec& spec);

/// Scene documents are JSON: width/height required, blobs/rings arrays of
/// objects with exactly the field names above, noise_seed/noise_amplitude
/// optional (default 0). Unknown keys anywhere throw SceneSpecError.
SceneSpec parse_scene(const std::string& text);
std::string serialize_scene(const SceneSpec& spec);
SceneSpec load_scene(const std::filesystem::path& path);
void save_scene(const SceneSpec& spec, const std::filesystem::path& path);

}  // namespace scorpio
