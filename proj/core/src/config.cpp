// SPDX-License-Identifier: Apache-2.0
#include "scorpio/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace scorpio {

namespace {

using nlohmann::ordered_json;

void check_range(long long value, long long lo, long long hi, const char* name) {
  if (value < lo || value > hi) {
    throw ConfigError(std::string(name) + " must be in " + std::to_string(lo) + ".." +
                      std::to_string(hi) + ", got " + std::to_string(value));
  }
}

MorphSchedule schedule_from_json(const ordered_json& arr) {
  if (!arr.is_array()) {
    throw ConfigError("morph_schedule must be an array of {op, count} steps");
  }
  MorphSchedule schedule;
  for (const auto& item : arr) {
    if (!item.is_object() || !item.contains("op") || !item.contains("count")) {
      throw ConfigError("each morph_schedule step needs 'op' and 'count'");
    }
    for (const auto& [key, value] : item.items()) {
      (void)value;
      if (key != "op" && key != "count") {
        throw ConfigError("unknown morph_schedule step key '" + key + "'");
      }
    }
    const std::string op = item.at("op").is_string() ? item.at("op").get<std::string>() : "";
    MorphStep step;
    if (op == "erode") {
      step.op = MorphOp::Erode;
    } else if (op == "dilate") {
      step.op = MorphOp::Dilate;
    } else {
      throw ConfigError("morph_schedule op must be \"erode\" or \"dilate\"");
    }
    if (!item.at("count").is_number_integer()) {
      throw ConfigError("morph_schedule count must be an integer");
    }
    step.count = item.at("count").get<int>();
    if (step.count < 1) {
      throw ConfigError("morph_schedule count must be >= 1, got " +
                        std::to_string(step.count));
    }
    schedule.steps.push_back(step);
  }
  return schedule;
}

ordered_json schedule_to_json(const MorphSchedule& schedule) {
  ordered_json arr = ordered_json::array();
  for (const MorphStep& step : schedule.steps) {
    arr.push_back({{"op", step.op == MorphOp::Erode ? "erode" : "dilate"},
                   {"count", step.count}});
  }
  return arr;
}

}  // namespace

void PipelineConfig::validate() const {
  check_range(hue_lo, 0, 179, "hue_lo");
  check_range(hue_hi, 0, 179, "hue_hi");
  if (hue_lo > hue_hi) {
    throw ConfigError("hue_lo " + std::to_string(hue_lo) + " exceeds hue_hi " +
                      std::to_string(hue_hi));
  }
  check_range(s_min, 0, 255, "s_min");
  check_range(v_min, 0, 255, "v_min");
  for (const MorphStep& step : morph_schedule.steps) {
    if (step.count < 1) {
      throw ConfigError("morph_schedule count must be >= 1, got " +
                        std::to_string(step.count));
    }
  }
  if (min_area < 0) {
    throw ConfigError("min_area must be >= 0, got " + std::to_string(min_area));
  }
  if (!(min_density >= 0.0 && min_density <= 1.0)) {
    throw ConfigError("min_density must be in [0, 1]");
  }
  if (block_size < 1) {
    throw ConfigError("block_size must be >= 1, got " + std::to_string(block_size));
  }
  if (fps < 1) {
    throw ConfigError("fps must be >= 1, got " + std::to_string(fps));
  }
}

PipelineConfig parse_config(const std::string& json_text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object");
  }

  static const std::set<std::string> known = {
      "hue_lo", "hue_hi", "s_min",       "v_min", "morph_schedule",
      "min_area", "min_density", "block_size", "fps"};
  for (const auto& [key, value] : doc.items()) {
    (void)value;
    if (!known.contains(key)) {
      throw ConfigError("unknown config key '" + key + "'");
    }
  }

  PipelineConfig config;
  const auto get_int = [&](const char* key, int& field) {
    if (!doc.contains(key)) return;
    if (!doc.at(key).is_number_integer()) {
      throw ConfigError(std::string(key) + " must be an integer");
    }
    field = doc.at(key).get<int>();
  };
  get_int("hue_lo", config.hue_lo);
  get_int("hue_hi", config.hue_hi);
  get_int("s_min", config.s_min);
  get_int("v_min", config.v_min);
  get_int("block_size", config.block_size);
  get_int("fps", config.fps);
  if (doc.contains("min_area")) {
    if (!doc.at("min_area").is_number_integer()) {
      throw ConfigError("min_area must be an integer");
    }
    config.min_area = doc.at("min_area").get<std::int64_t>();
  }
  if (doc.contains("min_density")) {
    if (!doc.at("min_density").is_number()) {
      throw ConfigError("min_density must be a number");
    }
    config.min_density = doc.at("min_density").get<double>();
  }
  if (doc.contains("morph_schedule")) {
    config.morph_schedule = schedule_from_json(doc.at("morph_schedule"));
  }

  config.validate();
  return config;
}

std::string serialize_config(const PipelineConfig& config) {
  ordered_json doc;
  doc["hue_lo"] = config.hue_lo;
  doc["hue_hi"] = config.hue_hi;
  doc["s_min"] = config.s_min;
  doc["v_min"] = config.v_min;
  doc["morph_schedule"] = schedule_to_json(config.morph_schedule);
  doc["min_area"] = config.min_area;
  doc["min_density"] = config.min_density;
  doc["block_size"] = config.block_size;
  doc["fps"] = config.fps;
  return doc.dump(2) + "\n";
}

PipelineConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open config file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

void save_config(const PipelineConfig& config, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write config file " + path.string());
  }
  out << serialize_config(config);
  if (!out) {
    throw IoError("failed writing config file " + path.string());
  }
}

}  // namespace scorpio
