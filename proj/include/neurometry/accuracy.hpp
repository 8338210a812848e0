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
#ifndef NEUROMETRY_ACCURACY_HPP_
#define NEUROMETRY_ACCURACY_HPP_

#include <array>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/morphometry.hpp"

namespace neurometry {

/// The six measurement names, in report order.
inline constexpr std::array<const char*, 6> kMeasurementNames = {
    "length", "width", "area", "min_intensity", "mean_intensity",
    "max_intensity"};

/// Per-measurement agreement percentages over matched cell pairs, plus two
/// overall aggregates: the macro mean averages the six per-metric values,
/// the micro mean averages every cell-metric score directly. Both are
/// reported because neither aggregation is canonical.
struct AccuracyTable {
  std::array<double, 6> per_metric = {0, 0, 0, 0, 0, 0};
  double overall_macro = 0.0;
  double overall_micro = 0.0;
  std::int64_t n_pairs = 0;

  bool operator==(const AccuracyTable&) const = default;
};

/// Symmetric, scale-invariant agreement score in [0,100]:
/// 100 * min(pred,gt) / max(pred,gt), with 100 when both are 0. Bounded even
/// when the ground-truth value is 0, which min-intensity frequently is on
/// dark fluorescence backgrounds.
inline double pair_accuracy(double pred, double gt) {
  if (!(pred >= 0.0) || !(gt >= 0.0) || !std::isfinite(pred) ||
      !std::isfinite(gt)) {
    throw InvalidArgument("pair_accuracy: values must be finite and >= 0");
  }
  if (pred == 0.0 && gt == 0.0) return 100.0;
  const double lo = std::min(pred, gt);
  const double hi = std::max(pred, gt);
  return 100.0 * lo / hi;
}

inline std::array<double, 6> measurement_values(const Measurements& m) {
  return {static_cast<double>(m.length),        static_cast<double>(m.width),
          static_cast<double>(m.area),          static_cast<double>(m.min_intensity),
          m.mean_intensity,                     static_cast<double>(m.max_intensity)};
}

inline AccuracyTable measurement_accuracy(
    const std::vector<std::pair<Measurements, Measurements>>& pairs) {
  if (pairs.empty()) {
    throw InvalidArgument("measurement_accuracy: no matched pairs");
  }
  AccuracyTable table;
  table.n_pairs = static_cast<std::int64_t>(pairs.size());
  std::array<double, 6> sums = {0, 0, 0, 0, 0, 0};
  double total = 0.0;
  for (const auto& [gt, pred] : pairs) {
    const auto gv = measurement_values(gt);
    const auto pv = measurement_values(pred);
    for (std::size_t k = 0; k < 6; ++k) {
      const double a = pair_accuracy(pv[k], gv[k]);
      sums[k] += a;
      total += a;
    }
  }
  double macro = 0.0;
  for (std::size_t k = 0; k < 6; ++k) {
    table.per_metric[k] = sums[k] / static_cast<double>(pairs.size());
    macro += table.per_metric[k];
  }
  table.overall_macro = macro / 6.0;
  table.overall_micro = total / (6.0 * static_cast<double>(pairs.size()));
  return table;
}

}  // namespace neurometry

#endif  // NEUROMETRY_ACCURACY_HPP_
