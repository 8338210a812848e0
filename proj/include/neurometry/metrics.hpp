// Copyright 2026 The Neurometry Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#ifndef NEUROMETRY_METRICS_HPP_
#define NEUROMETRY_METRICS_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/mask.hpp"
#include "neurometry/matching.hpp"

namespace neurometry {

/// Segmentation report row set. All values are ratios in [0,1]; 0/0 ratios
/// are reported as 0 and listed in `undefined` so an empty image never
/// silently scores as perfect. iou_accuracy is the mean matched IoU, which
/// is exactly SQ; pixel_accuracy is filled in by the caller (it needs the
/// union masks, not the match result).
struct SegMetrics {
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
  double iou_accuracy = 0.0;
  double sq = 0.0;
  double rq = 0.0;
  double pq = 0.0;
  double pixel_accuracy = 0.0;
  std::vector<std::string> undefined;

  bool operator==(const SegMetrics&) const = default;
};

/// Pooled counts that aggregate across images (micro-aggregation): dataset
/// metrics are recomputed from these sums, not averaged per image.
struct MatchCounts {
  std::int64_t tp = 0;
  std::int64_t fp = 0;
  std::int64_t fn = 0;
  double iou_sum = 0.0;
  std::int64_t pixel_agreements = 0;
  std::int64_t pixel_total = 0;

  MatchCounts& operator+=(const MatchCounts& o) {
    tp += o.tp;
    fp += o.fp;
    fn += o.fn;
    iou_sum += o.iou_sum;
    pixel_agreements += o.pixel_agreements;
    pixel_total += o.pixel_total;
    return *this;
  }

  bool operator==(const MatchCounts&) const = default;
};

inline MatchCounts match_counts(const MatchResult& m) {
  MatchCounts c;
  c.tp = static_cast<std::int64_t>(m.pairs.size());
  c.fp = static_cast<std::int64_t>(m.unmatched_pred.size());
  c.fn = static_cast<std::int64_t>(m.unmatched_gt.size());
  for (const auto& p : m.pairs) c.iou_sum += p.iou;
  return c;
}

/// Metrics from pooled counts:
///   precision = TP/(TP+FP)        recall = TP/(TP+FN)
///   f1 = 2PR/(P+R)                sq = mean matched IoU
///   rq = TP/(TP + FP/2 + FN/2)    pq = sq * rq
inline SegMetrics segmentation_metrics(const MatchCounts& c) {
  SegMetrics s;
  const auto tp = static_cast<double>(c.tp);

  const bool p_defined = c.tp + c.fp > 0;
  const bool r_defined = c.tp + c.fn > 0;
  const bool sq_defined = c.tp > 0;
  const bool rq_defined = c.tp + c.fp + c.fn > 0;

  if (p_defined) {
    s.precision = tp / static_cast<double>(c.tp + c.fp);
  } else {
    s.undefined.push_back("precision");
  }
  if (r_defined) {
    s.recall = tp / static_cast<double>(c.tp + c.fn);
  } else {
    s.undefined.push_back("recall");
  }
  if (p_defined && r_defined) {
    // Defined P=R=0 gives a plain f1 of 0.
    if (s.precision + s.recall > 0.0) {
      s.f1 = 2.0 * s.precision * s.recall / (s.precision + s.recall);
    }
  } else {
    s.undefined.push_back("f1");
  }
  if (sq_defined) {
    s.sq = c.iou_sum / tp;
  } else {
    s.undefined.push_back("iou_accuracy");
    s.undefined.push_back("sq");
  }
  s.iou_accuracy = s.sq;
  if (rq_defined) {
    s.rq = tp / (tp + 0.5 * static_cast<double>(c.fp + c.fn));
  } else {
    s.undefined.push_back("rq");
  }
  if (sq_defined && rq_defined) {
    s.pq = s.sq * s.rq;
  } else {
    s.undefined.push_back("pq");
  }
  if (c.pixel_total > 0) {
    s.pixel_accuracy = static_cast<double>(c.pixel_agreements) /
                       static_cast<double>(c.pixel_total);
  } else {
    s.undefined.push_back("pixel_accuracy");
  }
  return s;
}

inline SegMetrics segmentation_metrics(const MatchResult& m) {
  return segmentation_metrics(match_counts(m));
}

/// Fraction of pixels on which two union masks agree (foreground with
/// foreground, background with background).
inline double pixel_accuracy(const BinaryMask& gt_union,
                             const BinaryMask& pred_union) {
  if (!gt_union.same_size(pred_union)) {
    throw InvalidArgument("pixel_accuracy: mask dimensions differ");
  }
  std::int64_t agree = 0;
  for (std::size_t i = 0; i < gt_union.bits.size(); ++i) {
    agree += gt_union.bits[i] == pred_union.bits[i];
  }
  return static_cast<double>(agree) /
         static_cast<double>(gt_union.bits.size());
}

}  // namespace neurometry

#endif  // NEUROMETRY_METRICS_HPP_
