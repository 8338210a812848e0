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
//
// Minimal library walkthrough: synthesize a scene, degrade it into a fake
// prediction, match, and print the segmentation metrics and measurement
// accuracy that the CLI would write as CSV.

#include <iostream>
#include <map>
#include <utility>
#include <vector>

#include "neurometry/accuracy.hpp"
#include "neurometry/matching.hpp"
#include "neurometry/metrics.hpp"
#include "neurometry/morphometry.hpp"
#include "neurometry/synth.hpp"
#include "neurometry/util.hpp"

int main() {
  neurometry::SceneConfig cfg;
  cfg.width = 256;
  cfg.height = 256;
  cfg.n_cells = 8;
  cfg.seed = 7;
  const neurometry::Scene scene = neurometry::generate_scene(cfg);

  neurometry::PerturbSpec spec;
  spec.erode_px = 1;
  spec.spurious_count = 1;
  spec.seed = 7;
  const auto pred =
      neurometry::perturb(scene.instances, spec, cfg.width, cfg.height);

  const auto match = neurometry::match_instances(scene.instances, pred, 0.5);
  const auto metrics = neurometry::segmentation_metrics(match);
  std::cout << "cells: " << scene.instances.size()
            << "  predictions: " << pred.size() << "\n"
            << "precision " << neurometry::format_percent(metrics.precision)
            << "  recall " << neurometry::format_percent(metrics.recall)
            << "  pq " << neurometry::format_percent(metrics.pq) << "\n";

  std::vector<std::pair<neurometry::Measurements, neurometry::Measurements>>
      pairs;
  std::map<int, neurometry::Measurements> gt_meas, pred_meas;
  for (const auto& [id, m] : neurometry::measure_all(scene.instances, scene.image)) {
    gt_meas[id] = m;
  }
  for (const auto& [id, m] : neurometry::measure_all(pred, scene.image)) {
    pred_meas[id] = m;
  }
  for (const auto& p : match.pairs) {
    pairs.emplace_back(gt_meas.at(p.gt_id), pred_meas.at(p.pred_id));
  }
  const auto table = neurometry::measurement_accuracy(pairs);
  for (std::size_t k = 0; k < neurometry::kMeasurementNames.size(); ++k) {
    std::cout << neurometry::kMeasurementNames[k] << " accuracy "
              << neurometry::format_fixed(table.per_metric[k], 2) << "%\n";
  }
  std::cout << "overall (macro) "
            << neurometry::format_fixed(table.overall_macro, 2) << "%\n";
  return 0;
}
