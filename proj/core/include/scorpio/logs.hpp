// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "scorpio/detection.hpp"
#include "scorpio/error.hpp"
#include "scorpio/metrics.hpp"
#include "scorpio/temporal.hpp"

namespace scorpio {

/// Shortest decimal string that parses back to exactly `value` (round-trip
/// safe). Integral values print without an exponent or trailing ".0".
std::string format_real(double value);

/// Whole-file helpers used by every text format below. Both throw IoError.
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::string& text, const std::filesystem::path& path);

// --- detection / validation logs: one JSON object per line -----------------

/// Serializes detections as JSON lines with fields frame, x, y, w, h, score,
/// source — the format ingest_detections reads.
std::string serialize_detections(std::span<const Detection> dets);

/// Validated records carry the same seven fields plus fluor_area,
/// fluor_density and combined_score.
std::string serialize_validated(std::span<const ValidatedDetection> dets);

/// Parses a validated log. Same line discipline and errors as
/// ingest_detections; the three validation fields are required here.
std::vector<ValidatedDetection> parse_validated(const std::string& text);

void write_detection_log(std::span<const Detection> dets,
                         const std::filesystem::path& path);
void write_validated_log(std::span<const ValidatedDetection> dets,
                         const std::filesystem::path& path);
std::vector<Detection> read_detection_log(const std::filesystem::path& path);
std::vector<ValidatedDetection> read_validated_log(const std::filesystem::path& path);

// --- ground truth: "frame,label" lines --------------------------------------

/// Per-frame truth: does frame `frame` contain a target?
struct FrameLabel {
  int frame = 0;
  bool label = false;

  bool operator==(const FrameLabel&) const = default;
};

/// Parses "frame,label" lines with label 0 or 1. A leading "frame,label"
/// header line and blank lines are tolerated. Malformed lines throw
/// ParseError with the 1-based line number.
std::vector<FrameLabel> parse_frame_labels(const std::string& text);
std::vector<FrameLabel> read_frame_labels(const std::filesystem::path& path);
std::string serialize_frame_labels(std::span<const FrameLabel> labels);
void write_frame_labels(std::span<const FrameLabel> labels,
                        const std::filesystem::path& path);

// --- scored labels: "score,label" lines for ROC analysis --------------------

/// Parses "score,label" lines with score a real in [0,1] and label 0 or 1.
/// Same header/blank-line tolerance and errors as parse_frame_labels.
std::vector<RocSample> parse_scored_labels(const std::string& text);
std::vector<RocSample> read_scored_labels(const std::filesystem::path& path);
std::string serialize_scored_labels(std::span<const RocSample> samples);

// --- calibration input: whitespace-separated hue samples --------------------

/// Parses integer hue samples separated by any whitespace; '#' starts a
/// comment running to end of line. Non-integer tokens throw ParseError.
std::vector<int> parse_hue_samples(const std::string& text);
std::vector<int> read_hue_samples(const std::filesystem::path& path);

// --- comma-separated result tables (single header line each) ----------------

/// Header: tp,fp,tn,fn,accuracy,precision,recall,f_measure — one data row.
/// Counts are exact integers; the four metrics display at two decimals.
std::string metrics_table(const ConfusionMatrix& cm, const Metrics& m);

/// Header: fpr,tpr — one row per curve point.
std::string roc_points_table(const RocCurve& curve);

/// Header: block,frame_first,frame_last,positive — one row per block.
std::string block_verdicts_table(std::span<const BlockVerdict> verdicts);

}  // namespace scorpio
