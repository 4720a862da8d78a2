// SPDX-License-Identifier: Apache-2.0
#include "scorpio/metrics.hpp"

#include <algorithm>
#include <numeric>

namespace scorpio {

Metrics compute_metrics(const ConfusionMatrix& cm) {
  if (cm.tp < 0 || cm.fp < 0 || cm.tn < 0 || cm.fn < 0) {
    throw ParameterError("confusion matrix counts must be non-negative");
  }
  const std::int64_t total = cm.total();
  if (total == 0) {
    throw ParameterError("confusion matrix is empty");
  }
  if (cm.tp + cm.fp == 0) {
    throw UndefinedMetricError("precision undefined: tp + fp == 0");
  }
  if (cm.tp + cm.fn == 0) {
    throw UndefinedMetricError("recall undefined: tp + fn == 0");
  }
  if (2 * cm.tp + cm.fp + cm.fn == 0) {
    throw UndefinedMetricError("f_measure undefined: precision + recall == 0");
  }

  Metrics m;
  m.accuracy = static_cast<double>(cm.tp + cm.tn) / static_cast<double>(total);
  m.precision = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fp);
  m.recall = static_cast<double>(cm.tp) / static_cast<double>(cm.tp + cm.fn);
  m.f_measure = static_cast<double>(2 * cm.tp) /
                static_cast<double>(2 * cm.tp + cm.fp + cm.fn);
  return m;
}

ConfusionMatrix frame_confusion(const std::vector<bool>& predicted,
                                const std::vector<bool>& truth) {
  if (predicted.size() != truth.size()) {
    throw ParameterError("prediction list has " + std::to_string(predicted.size()) +
                         " frames but truth has " + std::to_string(truth.size()));
  }
  ConfusionMatrix cm;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    if (predicted[i]) {
      (truth[i] ? cm.tp : cm.fp) += 1;
    } else {
      (truth[i] ? cm.fn : cm.tn) += 1;
    }
  }
  return cm;
}

RocCurve roc(std::span<const RocSample> samples) {
  std::int64_t positives = 0;
  std::int64_t negatives = 0;
  for (const RocSample& s : samples) (s.label ? positives : negatives) += 1;
  if (positives == 0 || negatives == 0) {
    throw DegenerateInputError("ROC needs at least one positive and one negative label");
  }

  std::vector<std::size_t> order(samples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].score > samples[b].score;
  });

  RocCurve curve;
  curve.points.push_back(RocPoint{0.0, 0.0});

  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::size_t i = 0;
  while (i < order.size()) {
    // One threshold step consumes every sample tied at this score.
    const double score = samples[order[i]].score;
    while (i < order.size() && samples[order[i]].score == score) {
      (samples[order[i]].label ? tp : fp) += 1;
      ++i;
    }
    curve.points.push_back(RocPoint{static_cast<double>(fp) / negatives,
                                    static_cast<double>(tp) / positives});
  }

  double auc = 0.0;
  for (std::size_t k = 1; k < curve.points.size(); ++k) {
    const RocPoint& a = curve.points[k - 1];
    const RocPoint& b = curve.points[k];
    auc += (b.fpr - a.fpr) * (a.tpr + b.tpr) * 0.5;
  }
  curve.auc = auc;
  return curve;
}

}  // namespace scorpio
