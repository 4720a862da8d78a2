// SPDX-License-Identifier: Apache-2.0
#include "scorpio/logs.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "record_json.hpp"

namespace scorpio {

namespace {

using ordered_json = nlohmann::ordered_json;

std::string strip(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

ordered_json detection_fields(const Detection& d) {
  ordered_json obj;
  obj["frame"] = d.frame;
  obj["x"] = d.bbox.x;
  obj["y"] = d.bbox.y;
  obj["w"] = d.bbox.w;
  obj["h"] = d.bbox.h;
  obj["score"] = d.score;
  obj["source"] = d.source;
  return obj;
}

int parse_int_field(const std::string& token, int line_no, const char* what) {
  int value = 0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

double parse_real_field(const std::string& token, int line_no, const char* what) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line_no, std::string("bad ") + what + " '" + token + "'");
  }
  return value;
}

bool parse_label_field(const std::string& token, int line_no) {
  if (token == "0") return false;
  if (token == "1") return true;
  throw ParseError(line_no, "label must be 0 or 1, got '" + token + "'");
}

/// Splits one CSV data line on the single expected comma.
std::pair<std::string, std::string> split_pair(const std::string& line, int line_no) {
  const auto comma = line.find(',');
  if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
    throw ParseError(line_no, "expected exactly two comma-separated fields");
  }
  return {strip(line.substr(0, comma)), strip(line.substr(comma + 1))};
}

}  // namespace

std::string format_real(double value) {
  if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 1e15) {
    // Keep integral reals readable: "1" rather than "1e+00".
    return std::to_string(static_cast<long long>(value));
  }
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot open file " + path.string());
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::string& text, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw IoError("cannot write file " + path.string());
  }
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) {
    throw IoError("failed writing file " + path.string());
  }
}

std::string serialize_detections(std::span<const Detection> dets) {
  std::string out;
  for (const Detection& d : dets) {
    out += detection_fields(d).dump();
    out += '\n';
  }
  return out;
}

std::string serialize_validated(std::span<const ValidatedDetection> dets) {
  std::string out;
  for (const ValidatedDetection& v : dets) {
    ordered_json obj = detection_fields(v.detection);
    obj["fluor_area"] = v.fluor_area;
    obj["fluor_density"] = v.fluor_density;
    obj["combined_score"] = v.combined_score;
    out += obj.dump();
    out += '\n';
  }
  return out;
}

std::vector<ValidatedDetection> parse_validated(const std::string& text) {
  std::istringstream stream(text);
  std::vector<ValidatedDetection> out;
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (detail::blank_line(line)) continue;

    const nlohmann::json obj = detail::parse_record_object(line, line_no);
    ValidatedDetection v;
    v.detection = detail::parse_detection_record(obj, line_no);
    v.fluor_area = detail::require_int64(obj, "fluor_area", line_no);
    v.fluor_density = detail::require_number(obj, "fluor_density", line_no);
    v.combined_score = detail::require_number(obj, "combined_score", line_no);
    if (v.fluor_area < 0) {
      throw RecordError(line_no, "fluor_area must be >= 0");
    }
    out.push_back(std::move(v));
  }
  return out;
}

void write_detection_log(std::span<const Detection> dets,
                         const std::filesystem::path& path) {
  write_text_file(serialize_detections(dets), path);
}

void write_validated_log(std::span<const ValidatedDetection> dets,
                         const std::filesystem::path& path) {
  write_text_file(serialize_validated(dets), path);
}

std::vector<Detection> read_detection_log(const std::filesystem::path& path) {
  return ingest_detections(read_text_file(path));
}

std::vector<ValidatedDetection> read_validated_log(const std::filesystem::path& path) {
  return parse_validated(read_text_file(path));
}

std::vector<FrameLabel> parse_frame_labels(const std::string& text) {
  std::istringstream stream(text);
  std::vector<FrameLabel> out;
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (detail::blank_line(line)) continue;
    if (line_no == 1 && strip(line) == "frame,label") continue;

    const auto [frame_tok, label_tok] = split_pair(line, line_no);
    FrameLabel fl;
    fl.frame = parse_int_field(frame_tok, line_no, "frame index");
    if (fl.frame < 0) {
      throw ParseError(line_no, "frame index must be >= 0");
    }
    fl.label = parse_label_field(label_tok, line_no);
    out.push_back(fl);
  }
  return out;
}

std::vector<FrameLabel> read_frame_labels(const std::filesystem::path& path) {
  return parse_frame_labels(read_text_file(path));
}

std::string serialize_frame_labels(std::span<const FrameLabel> labels) {
  std::string out = "frame,label\n";
  for (const FrameLabel& fl : labels) {
    out += std::to_string(fl.frame);
    out += fl.label ? ",1\n" : ",0\n";
  }
  return out;
}

void write_frame_labels(std::span<const FrameLabel> labels,
                        const std::filesystem::path& path) {
  write_text_file(serialize_frame_labels(labels), path);
}

std::vector<RocSample> parse_scored_labels(const std::string& text) {
  std::istringstream stream(text);
  std::vector<RocSample> out;
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    if (detail::blank_line(line)) continue;
    if (line_no == 1 && strip(line) == "score,label") continue;

    const auto [score_tok, label_tok] = split_pair(line, line_no);
    RocSample s;
    s.score = parse_real_field(score_tok, line_no, "score");
    if (!(s.score >= 0.0 && s.score <= 1.0)) {
      throw ParseError(line_no, "score must be in [0, 1]");
    }
    s.label = parse_label_field(label_tok, line_no);
    out.push_back(s);
  }
  return out;
}

std::vector<RocSample> read_scored_labels(const std::filesystem::path& path) {
  return parse_scored_labels(read_text_file(path));
}

std::string serialize_scored_labels(std::span<const RocSample> samples) {
  std::string out = "score,label\n";
  for (const RocSample& s : samples) {
    out += format_real(s.score);
    out += s.label ? ",1\n" : ",0\n";
  }
  return out;
}

std::vector<int> parse_hue_samples(const std::string& text) {
  std::vector<int> out;
  std::istringstream stream(text);
  std::string line;
  int line_no = 0;
  while (std::getline(stream, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);

    std::istringstream fields(line);
    std::string token;
    while (fields >> token) {
      out.push_back(parse_int_field(token, line_no, "hue sample"));
    }
  }
  return out;
}

std::vector<int> read_hue_samples(const std::filesystem::path& path) {
  return parse_hue_samples(read_text_file(path));
}

std::string metrics_table(const ConfusionMatrix& cm, const Metrics& m) {
  // Counts stay exact; the four metrics are displayed at two decimals, the
  // granularity results are reported at. Exact values live on Metrics itself.
  char rendered[64];
  std::snprintf(rendered, sizeof(rendered), "%.2f,%.2f,%.2f,%.2f\n", m.accuracy,
                m.precision, m.recall, m.f_measure);
  std::string out = "tp,fp,tn,fn,accuracy,precision,recall,f_measure\n";
  out += std::to_string(cm.tp) + "," + std::to_string(cm.fp) + "," +
         std::to_string(cm.tn) + "," + std::to_string(cm.fn) + ",";
  out += rendered;
  return out;
}

std::string roc_points_table(const RocCurve& curve) {
  std::string out = "fpr,tpr\n";
  for (const RocPoint& p : curve.points) {
    out += format_real(p.fpr) + "," + format_real(p.tpr) + "\n";
  }
  return out;
}

std::string block_verdicts_table(std::span<const BlockVerdict> verdicts) {
  std::string out = "block,frame_first,frame_last,positive\n";
  for (const BlockVerdict& v : verdicts) {
    out += std::to_string(v.block_idx) + "," + std::to_string(v.frame_first) + "," +
           std::to_string(v.frame_last) + ",";
    out += v.positive ? "1\n" : "0\n";
  }
  return out;
}

}  // namespace scorpio
