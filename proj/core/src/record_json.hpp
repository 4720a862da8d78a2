// SPDX-License-Identifier: Apache-2.0
#pragma once

// Internal helpers shared by the line-delimited JSON record readers
// (detection logs and validated logs). Not installed.

#include <string>

#include "scorpio/detection.hpp"
#include "scorpio/error.hpp"

#include "json.hpp"

namespace scorpio::detail {

inline bool blank_line(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

inline int require_int(const nlohmann::json& obj, const char* key, int line_no) {
  if (!obj.contains(key)) {
    throw RecordError(line_no, std::string("missing field '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw RecordError(line_no, std::string("field '") + key + "' must be an integer");
  }
  return v.get<int>();
}

inline std::int64_t require_int64(const nlohmann::json& obj, const char* key,
                                  int line_no) {
  if (!obj.contains(key)) {
    throw RecordError(line_no, std::string("missing field '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number_integer()) {
    throw RecordError(line_no, std::string("field '") + key + "' must be an integer");
  }
  return v.get<std::int64_t>();
}

inline double require_number(const nlohmann::json& obj, const char* key, int line_no) {
  if (!obj.contains(key)) {
    throw RecordError(line_no, std::string("missing field '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_number()) {
    throw RecordError(line_no, std::string("field '") + key + "' must be a number");
  }
  return v.get<double>();
}

inline std::string require_string(const nlohmann::json& obj, const char* key,
                                  int line_no) {
  if (!obj.contains(key)) {
    throw RecordError(line_no, std::string("missing field '") + key + "'");
  }
  const auto& v = obj.at(key);
  if (!v.is_string()) {
    throw RecordError(line_no, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

/// Parses one text line into a JSON object, mapping syntax failures to
/// ParseError with the given 1-based line number.
inline nlohmann::json parse_record_object(const std::string& line, int line_no) {
  nlohmann::json obj;
  try {
    obj = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(line_no, std::string("malformed record: ") + e.what());
  }
  if (!obj.is_object()) {
    throw ParseError(line_no, "record is not a JSON object");
  }
  return obj;
}

/// Extracts and validates the seven shared detection fields. Unknown extra
/// fields are ignored so validated logs are readable as plain detections.
inline Detection parse_detection_record(const nlohmann::json& obj, int line_no) {
  Detection d;
  d.frame = require_int(obj, "frame", line_no);
  d.bbox.x = require_int(obj, "x", line_no);
  d.bbox.y = require_int(obj, "y", line_no);
  d.bbox.w = require_int(obj, "w", line_no);
  d.bbox.h = require_int(obj, "h", line_no);
  d.score = require_number(obj, "score", line_no);
  d.source = require_string(obj, "source", line_no);

  if (d.frame < 0) {
    throw RecordError(line_no,
                      "frame index must be >= 0, got " + std::to_string(d.frame));
  }
  if (d.bbox.x < 0 || d.bbox.y < 0) {
    throw RecordError(line_no, "bbox origin must be non-negative");
  }
  if (d.bbox.w < 1 || d.bbox.h < 1) {
    throw RecordError(line_no, "bbox width and height must be >= 1");
  }
  if (!(d.score >= 0.0 && d.score <= 1.0)) {
    throw RecordError(line_no, "score must be in [0, 1]");
  }
  return d;
}

}  // namespace scorpio::detail
