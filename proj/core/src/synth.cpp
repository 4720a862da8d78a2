// SPDX-License-Identifier: Apache-2.0
#include "scorpio/synth.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "scorpio/colorspace.hpp"

#include "json.hpp"

namespace scorpio {

namespace {

using ordered_json = nlohmann::ordered_json;

void check_range(int value, int lo, int hi, const char* what) {
  if (value < lo || value > hi) {
    throw SceneSpecError(std::string(what) + " must be in [" + std::to_string(lo) +
                         ", " + std::to_string(hi) + "], got " + std::to_string(value));
  }
}

void validate_scene(const SceneSpec& spec) {
  if (spec.width < 1 || spec.height < 1) {
    throw SceneSpecError("frame dimensions must be >= 1, got " +
                         std::to_string(spec.width) + "x" + std::to_string(spec.height));
  }
  check_range(spec.noise_amplitude, 0, 255, "noise_amplitude");
  for (const EllipseSpec& e : spec.blobs) {
    check_range(e.hue, 0, 179, "blob hue");
    check_range(e.sat, 0, 255, "blob sat");
    check_range(e.val, 0, 255, "blob val");
    if (e.rx < 1 || e.ry < 1) {
      throw SceneSpecError("blob radii must be >= 1");
    }
    if (e.cx - e.rx < 0 || e.cx + e.rx >= spec.width || e.cy - e.ry < 0 ||
        e.cy + e.ry >= spec.height) {
      throw SceneSpecError("blob at (" + std::to_string(e.cx) + "," +
                           std::to_string(e.cy) + ") exceeds frame bounds");
    }
  }
  for (const RingSpec& r : spec.rings) {
    check_range(r.hue, 0, 179, "ring hue");
    if (r.radius < 1) {
      throw SceneSpecError("ring radius must be >= 1");
    }
    if (r.spread < 0) {
      throw SceneSpecError("ring spread must be >= 0");
    }
    if (r.cx - r.radius < 0 || r.cx + r.radius >= spec.width ||
        r.cy - r.radius < 0 || r.cy + r.radius >= spec.height) {
      throw SceneSpecError("ring at (" + std::to_string(r.cx) + "," +
                           std::to_string(r.cy) + ") exceeds frame bounds");
    }
  }
}

void fill_ellipse(RgbFrame& frame, const EllipseSpec& e) {
  const Rgb color = hsv_to_rgb(Hsv{static_cast<std::uint8_t>(e.hue),
                                   static_cast<std::uint8_t>(e.sat),
                                   static_cast<std::uint8_t>(e.val)});
  // Integer membership test: (dx·ry)² + (dy·rx)² ≤ (rx·ry)².
  const std::int64_t rx = e.rx;
  const std::int64_t ry = e.ry;
  const std::int64_t rhs = rx * rx * ry * ry;
  for (int y = e.cy - e.ry; y <= e.cy + e.ry; ++y) {
    Rgb* row = frame.row(y);
    const std::int64_t dy = y - e.cy;
    for (int x = e.cx - e.rx; x <= e.cx + e.rx; ++x) {
      const std::int64_t dx = x - e.cx;
      if (dx * dx * ry * ry + dy * dy * rx * rx <= rhs) {
        row[x] = color;
      }
    }
  }
}

/// Per-pixel hue jitter for rings: a fixed mix of the coordinates, wrapped
/// into ±spread. Deterministic by construction, no RNG state involved.
int jittered_hue(int hue, int spread, int x, int y) {
  if (spread == 0) return hue;
  const int offset = (x * 31 + y * 17) % (2 * spread + 1) - spread;
  return ((hue + offset) % 180 + 180) % 180;
}

void draw_ring(RgbFrame& frame, const RingSpec& r) {
  const auto plot = [&](int x, int y) {
    frame.row(y)[x] =
        hsv_to_rgb(Hsv{static_cast<std::uint8_t>(jittered_hue(r.hue, r.spread, x, y)),
                       static_cast<std::uint8_t>(kRingSat),
                       static_cast<std::uint8_t>(kRingVal)});
  };
  // Midpoint circle, all eight octants.
  int x = r.radius;
  int y = 0;
  int err = 1 - r.radius;
  while (x >= y) {
    plot(r.cx + x, r.cy + y);
    plot(r.cx - x, r.cy + y);
    plot(r.cx + x, r.cy - y);
    plot(r.cx - x, r.cy - y);
    plot(r.cx + y, r.cy + x);
    plot(r.cx - y, r.cy + x);
    plot(r.cx + y, r.cy - x);
    plot(r.cx - y, r.cy - x);
    ++y;
    if (err < 0) {
      err += 2 * y + 1;
    } else {
      --x;
      err += 2 * (y - x) + 1;
    }
  }
}

void add_noise(RgbFrame& frame, std::uint32_t seed, int amplitude) {
  std::uint32_t state = seed;
  const auto next_byte = [&state]() {
    state = state * 1664525u + 1013904223u;
    return static_cast<int>(state >> 24);
  };
  const auto bump = [amplitude](std::uint8_t& channel, int byte) {
    const int add = (byte * amplitude) / 255;
    channel = static_cast<std::uint8_t>(std::min(255, channel + add));
  };
  Rgb* px = frame.data();
  for (std::int64_t i = 0; i < frame.pixel_count(); ++i) {
    bump(px[i].r, next_byte());
    bump(px[i].g, next_byte());
    bump(px[i].b, next_byte());
  }
}

int scene_int(const ordered_json& obj, const char* key, bool required, int fallback) {
  if (!obj.contains(key)) {
    if (required) throw SceneSpecError(std::string("missing key '") + key + "'");
    return fallback;
  }
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw SceneSpecError(std::string("key '") + key + "' must be an integer");
  }
  return v.get<int>();
}

void reject_unknown_keys(const ordered_json& obj,
                         std::initializer_list<const char*> known,
                         const char* context) {
  for (const auto& item : obj.items()) {
    if (std::find_if(known.begin(), known.end(), [&](const char* k) {
          return item.key() == k;
        }) == known.end()) {
      throw SceneSpecError(std::string("unknown ") + context + " key '" + item.key() +
                           "'");
    }
  }
}

}  // namespace

RgbFrame synth_scene(const SceneSpec& spec) {
  validate_scene(spec);
  RgbFrame frame(spec.width, spec.height);  // zero-initialized: black background
  for (const EllipseSpec& e : spec.blobs) fill_ellipse(frame, e);
  for (const RingSpec& r : spec.rings) draw_ring(frame, r);
  if (spec.noise_amplitude > 0) {
    add_noise(frame, spec.noise_seed, spec.noise_amplitude);
  }
  return frame;
}

SceneSpec parse_scene(const std::string& text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw SceneSpecError(std::string("malformed scene document: ") + e.what());
  }
  if (!doc.is_object()) {
    throw SceneSpecError("scene document must be a JSON object");
  }
  reject_unknown_keys(
      doc, {"width", "height", "blobs", "rings", "noise_seed", "noise_amplitude"},
      "scene");

  SceneSpec spec;
  spec.width = scene_int(doc, "width", true, 0);
  spec.height = scene_int(doc, "height", true, 0);

  if (doc.contains("blobs")) {
    if (!doc.at("blobs").is_array()) throw SceneSpecError("'blobs' must be an array");
    for (const auto& b : doc.at("blobs")) {
      if (!b.is_object()) throw SceneSpecError("blob entries must be objects");
      reject_unknown_keys(b, {"cx", "cy", "rx", "ry", "hue", "sat", "val"}, "blob");
      EllipseSpec e;
      e.cx = scene_int(b, "cx", true, 0);
      e.cy = scene_int(b, "cy", true, 0);
      e.rx = scene_int(b, "rx", true, 0);
      e.ry = scene_int(b, "ry", true, 0);
      e.hue = scene_int(b, "hue", true, 0);
      e.sat = scene_int(b, "sat", false, 255);
      e.val = scene_int(b, "val", false, 255);
      spec.blobs.push_back(e);
    }
  }
  if (doc.contains("rings")) {
    if (!doc.at("rings").is_array()) throw SceneSpecError("'rings' must be an array");
    for (const auto& r : doc.at("rings")) {
      if (!r.is_object()) throw SceneSpecError("ring entries must be objects");
      reject_unknown_keys(r, {"cx", "cy", "radius", "hue", "spread"}, "ring");
      RingSpec ring;
      ring.cx = scene_int(r, "cx", true, 0);
      ring.cy = scene_int(r, "cy", true, 0);
      ring.radius = scene_int(r, "radius", true, 0);
      ring.hue = scene_int(r, "hue", true, 0);
      ring.spread = scene_int(r, "spread", false, 0);
      spec.rings.push_back(ring);
    }
  }
  if (doc.contains("noise_seed")) {
    const auto& v = doc.at("noise_seed");
    if (!v.is_number_integer() || v.get<std::int64_t>() < 0 ||
        v.get<std::int64_t>() > 0xFFFFFFFFll) {
      throw SceneSpecError("'noise_seed' must be an integer in [0, 2^32)");
    }
    spec.noise_seed = v.get<std::uint32_t>();
  }
  spec.noise_amplitude = scene_int(doc, "noise_amplitude", false, 0);

  validate_scene(spec);  // catch bounds problems at parse time, not render time
  return spec;
}

std::string serialize_scene(const SceneSpec& spec) {
  ordered_json doc;
  doc["width"] = spec.width;
  doc["height"] = spec.height;
  doc["blobs"] = ordered_json::array();
  for (const EllipseSpec& e : spec.blobs) {
    ordered_json b;
    b["cx"] = e.cx;
    b["cy"] = e.cy;
    b["rx"] = e.rx;
    b["ry"] = e.ry;
    b["hue"] = e.hue;
    b["sat"] = e.sat;
    b["val"] = e.val;
    doc["blobs"].push_back(std::move(b));
  }
  doc["rings"] = ordered_json::array();
  for (const RingSpec& r : spec.rings) {
    ordered_json rj;
    rj["cx"] = r.cx;
    rj["cy"] = r.cy;
    rj["radius"] = r.radius;
    rj["hue"] = r.hue;
    rj["spread"] = r.spread;
    doc["rings"].push_back(std::move(rj));
  }
  doc["noise_seed"] = spec.noise_seed;
  doc["noise_amplitude"] = spec.noise_amplitude;
  return doc.dump(2) + "\n";
}

SceneSpec load_scene(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scene(buf.str());
}

void save_scene(const SceneSpec& spec, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write file " + path.string());
  }
  out << serialize_scene(spec);
  if (!out) {
    throw IoError("failed writing file " + path.string());
  }
}

}  // namespace scorpio
