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
#ifndef NEUROMETRY_MATCHING_HPP_
#define NEUROMETRY_MATCHING_HPP_

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/mask.hpp"

namespace neurometry {

struct MatchPair {
  int gt_id = 0;
  int pred_id = 0;
  double iou = 0.0;

  bool operator==(const MatchPair&) const = default;
};

/// TP pairs plus the leftovers: unmatched ground truth (FN) and unmatched
/// predictions (FP). Every id appears at most once across all three fields.
struct MatchResult {
  std::vector<MatchPair> pairs;
  std::vector<int> unmatched_gt;
  std::vector<int> unmatched_pred;

  bool operator==(const MatchResult&) const = default;
};

/// Greedy one-to-one matching by descending IoU, ties broken by smaller
/// gt_id then smaller pred_id; only candidates with iou > threshold are
/// eligible. For threshold >= 0.5 and non-overlapping instance sets the
/// greedy result coincides with the unique matching (two masks cannot both
/// exceed 0.5 IoU against the same counterpart), so input order never
/// matters; sorting makes that hold below 0.5 as well.
inline MatchResult match_instances(const std::vector<Instance>& gt,
                                   const std::vector<Instance>& pred,
                                   double threshold = 0.5) {
  if (threshold < 0.0 || threshold >= 1.0) {
    throw InvalidArgument("match_instances: threshold must be in [0,1), got " +
                          std::to_string(threshold));
  }
  const BinaryMask* ref = nullptr;
  for (const auto& inst : gt) {
    if (!ref) ref = &inst.mask;
    if (!ref->same_size(inst.mask)) {
      throw InvalidArgument("match_instances: mask dimensions differ");
    }
  }
  for (const auto& inst : pred) {
    if (!ref) ref = &inst.mask;
    if (!ref->same_size(inst.mask)) {
      throw InvalidArgument("match_instances: mask dimensions differ");
    }
  }

  struct Candidate {
    double iou;
    int gt_id;
    int pred_id;
    std::size_t gt_index;
    std::size_t pred_index;
  };
  std::vector<Candidate> candidates;
  std::vector<std::int64_t> gt_area(gt.size()), pred_area(pred.size());
  for (std::size_t i = 0; i < gt.size(); ++i) gt_area[i] = area(gt[i].mask);
  for (std::size_t j = 0; j < pred.size(); ++j) pred_area[j] = area(pred[j].mask);

  for (std::size_t i = 0; i < gt.size(); ++i) {
    for (std::size_t j = 0; j < pred.size(); ++j) {
      if (!gt[i].bbox.intersects(pred[j].bbox)) continue;
      const std::int64_t inter =
          intersection_area(gt[i].mask, gt[i].bbox, pred[j].mask, pred[j].bbox);
      if (inter == 0) continue;
      const std::int64_t uni = gt_area[i] + pred_area[j] - inter;
      const double v = static_cast<double>(inter) / static_cast<double>(uni);
      if (v > threshold) {
        candidates.push_back({v, gt[i].id, pred[j].id, i, j});
      }
    }
  }
  std::sort(candidates.begin(), candidates.end(),
            [](const Candidate& a, const Candidate& b) {
              if (a.iou != b.iou) return a.iou > b.iou;
              if (a.gt_id != b.gt_id) return a.gt_id < b.gt_id;
              return a.pred_id < b.pred_id;
            });

  MatchResult result;
  std::vector<std::uint8_t> gt_used(gt.size(), 0), pred_used(pred.size(), 0);
  for (const auto& c : candidates) {
    if (gt_used[c.gt_index] || pred_used[c.pred_index]) continue;
    gt_used[c.gt_index] = 1;
    pred_used[c.pred_index] = 1;
    result.pairs.push_back({c.gt_id, c.pred_id, c.iou});
  }
  std::sort(result.pairs.begin(), result.pairs.end(),
            [](const MatchPair& a, const MatchPair& b) {
              return a.gt_id < b.gt_id;
            });
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (!gt_used[i]) result.unmatched_gt.push_back(gt[i].id);
  }
  for (std::size_t j = 0; j < pred.size(); ++j) {
    if (!pred_used[j]) result.unmatched_pred.push_back(pred[j].id);
  }
  std::sort(result.unmatched_gt.begin(), result.unmatched_gt.end());
  std::sort(result.unmatched_pred.begin(), result.unmatched_pred.end());
  return result;
}

}  // namespace neurometry

#endif  // NEUROMETRY_MATCHING_HPP_
