// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "scorpio/error.hpp"

namespace scorpio {

struct ConfusionMatrix {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t tn = 0;
  std::int64_t fn = 0;

  std::int64_t total() const noexcept { return tp + fp + tn + fn; }
  bool operator==(const ConfusionMatrix&) const = default;
};

struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double f_measure = 0.0;

  bool operator==(const Metrics&) const = default;
};

/// Standard classification metrics:
///   accuracy  = (tp + tn) / (tp + tn + fp + fn)
///   precision = tp / (tp + fp)
///   recall    = tp / (tp + fn)
///   f_measure = 2 * precision * recall / (precision + recall)
/// Each value is produced by a single division of exact integer counts, so it
/// is the correctly rounded double of the exact rational (f_measure uses the
/// equivalent form 2*tp / (2*tp + fp + fn)).
///
/// Throws ParameterError when the matrix is empty and UndefinedMetricError
/// (naming the metric) when a denominator vanishes.
Metrics compute_metrics(const ConfusionMatrix& cm);

/// Per-frame tallies of predicted vs true labels. Lists must have equal
/// length; throws ParameterError otherwise.
ConfusionMatrix frame_confusion(const std::vector<bool>& predicted,
                                const std::vector<bool>& truth);

struct RocSample {
  double score = 0.0;
  bool label = false;  // true = positive

  bool operator==(const RocSample&) const = default;
};

struct RocPoint {
  double fpr = 0.0;
  double tpr = 0.0;

  bool operator==(const RocPoint&) const = default;
};

/// Stepped ROC curve: points sorted by non-decreasing false-positive rate,
/// anchored at (0,0) and ending at (1,1); auc is the trapezoidal area.
struct RocCurve {
  std::vector<RocPoint> points;
  double auc = 0.0;
};

/// Sweeps thresholds over the distinct scores in descending order; a sample
/// is predicted positive iff its score >= threshold, and all samples sharing
/// a score advance the curve in one step. Throws DegenerateInputError unless
/// both a positive and a negative label are present.
RocCurve roc(std::span<const RocSample> samples);

}  // namespace scorpio
