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
#include <doctest.h>

#include <vector>

#include "neurometry/matching.hpp"
#include "neurometry/metrics.hpp"
#include "neurometry/synth.hpp"

using neurometry::BinaryMask;
using neurometry::Instance;
using neurometry::PerturbSpec;
using neurometry::Scene;
using neurometry::SceneConfig;

namespace {

// Disk-only scenes. The square structuring element erodes about r*sqrt(2)
// pixels along diagonals, so keeping IoU above 0.5 at erode_px=3 needs
// ((R - 3*sqrt(2)) / R)^2 > 0.5, i.e. soma radius 15 or more.
SceneConfig disk_config(std::uint64_t seed, int n_cells = 5) {
  SceneConfig cfg;
  cfg.width = 256;
  cfg.height = 256;
  cfg.n_cells = n_cells;
  cfg.soma_radius_min = 18;
  cfg.soma_radius_max = 22;
  cfg.neurites_min = 0;
  cfg.neurites_max = 0;
  cfg.seed = seed;
  return cfg;
}

}  // namespace

TEST_CASE("scene generation is bit-deterministic in its seed") {
  SceneConfig cfg;
  cfg.seed = 99;
  cfg.n_cells = 4;
  const Scene a = neurometry::generate_scene(cfg);
  const Scene b = neurometry::generate_scene(cfg);
  CHECK(a.image == b.image);
  CHECK(a.instances == b.instances);

  cfg.seed = 100;
  const Scene c = neurometry::generate_scene(cfg);
  CHECK(a.image.pixels != c.image.pixels);
}

TEST_CASE("zero cells means background and noise only") {
  SceneConfig cfg;
  cfg.n_cells = 0;
  cfg.background_level = 30;
  cfg.noise_amplitude = 5;
  const Scene scene = neurometry::generate_scene(cfg);
  CHECK(scene.instances.empty());
  for (const auto p : scene.image.pixels) {
    CHECK(p >= 25);
    CHECK(p <= 35);
  }
}

TEST_CASE("instances are pairwise disjoint and areas sum to the union") {
  const Scene scene = neurometry::generate_scene(disk_config(7, 6));
  REQUIRE(scene.instances.size() == 6);
  BinaryMask unioned(scene.image.width, scene.image.height);
  std::int64_t sum = 0;
  for (const auto& inst : scene.instances) {
    CHECK(neurometry::area(inst.mask) > 0);
    CHECK(inst.bbox == neurometry::bounding_box(inst.mask));
    for (std::size_t i = 0; i < unioned.bits.size(); ++i) {
      CHECK(!(unioned.bits[i] && inst.mask.bits[i]));
      unioned.bits[i] |= inst.mask.bits[i];
    }
    sum += neurometry::area(inst.mask);
  }
  CHECK(sum == neurometry::area(unioned));
  CHECK(scene.instances.front().id == 1);
  CHECK(scene.instances.back().id == 6);
}

TEST_CASE("an impossible packing reports the achieved count") {
  SceneConfig cfg;
  cfg.width = 48;
  cfg.height = 48;
  cfg.n_cells = 60;
  cfg.soma_radius_min = 10;
  cfg.soma_radius_max = 12;
  cfg.neurites_min = cfg.neurites_max = 0;
  CHECK_THROWS_WITH_AS(neurometry::generate_scene(cfg),
                       doctest::Contains("canvas too small"),
                       neurometry::Error);
}

TEST_CASE("config validation names the offending field") {
  SceneConfig cfg;
  cfg.width = 8;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("width"),
                       neurometry::InvalidArgument);
  cfg = SceneConfig{};
  cfg.foreground_max = 300;
  CHECK_THROWS_WITH_AS(cfg.validate(), doctest::Contains("foreground"),
                       neurometry::InvalidArgument);
  PerturbSpec both;
  both.dilate_px = 1;
  both.erode_px = 1;
  CHECK_THROWS_WITH_AS(both.validate(), doctest::Contains("dilate"),
                       neurometry::InvalidArgument);
  PerturbSpec prob;
  prob.drop_prob = 1.5;
  CHECK_THROWS_WITH_AS(prob.validate(), doctest::Contains("drop_prob"),
                       neurometry::InvalidArgument);
}

TEST_CASE("identity perturbation reproduces ground truth and scores PQ 1") {
  const Scene scene = neurometry::generate_scene(disk_config(11));
  PerturbSpec spec;  // all zeros
  const auto pred = neurometry::perturb(scene.instances, spec,
                                        scene.image.width, scene.image.height);
  REQUIRE(pred.size() == scene.instances.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    CHECK(pred[i].mask == scene.instances[i].mask);
  }
  const auto match = neurometry::match_instances(scene.instances, pred, 0.5);
  const auto metrics = neurometry::segmentation_metrics(match);
  CHECK(metrics.pq == 1.0);
}

TEST_CASE("drop probability one empties the prediction set") {
  const Scene scene = neurometry::generate_scene(disk_config(12));
  PerturbSpec spec;
  spec.drop_prob = 1.0;
  CHECK(neurometry::perturb(scene.instances, spec, scene.image.width,
                            scene.image.height)
            .empty());
}

TEST_CASE("erosion keeps predictions inside ground truth with exact IoU") {
  const Scene scene = neurometry::generate_scene(disk_config(13));
  PerturbSpec spec;
  spec.erode_px = 1;
  const auto pred = neurometry::perturb(scene.instances, spec,
                                        scene.image.width, scene.image.height);
  REQUIRE(pred.size() == scene.instances.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    const auto& gt_mask = scene.instances[i].mask;
    const auto& pr_mask = pred[i].mask;
    for (std::size_t k = 0; k < gt_mask.bits.size(); ++k) {
      CHECK(pr_mask.bits[k] <= gt_mask.bits[k]);
    }
    const double expect = static_cast<double>(neurometry::area(pr_mask)) /
                          static_cast<double>(neurometry::area(gt_mask));
    CHECK(neurometry::iou(gt_mask, pr_mask) ==
          doctest::Approx(expect).epsilon(1e-12));
    CHECK(neurometry::iou(gt_mask, pr_mask) > 0.5);
    CHECK(neurometry::iou(gt_mask, pr_mask) < 1.0);
  }
}

TEST_CASE("deeper erosion monotonically lowers SQ") {
  const Scene scene = neurometry::generate_scene(disk_config(14));
  double prev_sq = 2.0;
  for (const int radius : {0, 1, 2, 3}) {
    PerturbSpec spec;
    spec.erode_px = radius;
    const auto pred = neurometry::perturb(
        scene.instances, spec, scene.image.width, scene.image.height);
    const auto metrics = neurometry::segmentation_metrics(
        neurometry::match_instances(scene.instances, pred, 0.5));
    CHECK(metrics.rq == 1.0);
    CHECK(metrics.sq < prev_sq);
    prev_sq = metrics.sq;
  }
}

TEST_CASE("splitting replaces a cell with its two halves") {
  const Scene scene = neurometry::generate_scene(disk_config(15, 1));
  PerturbSpec spec;
  spec.split_prob = 1.0;
  const auto pred = neurometry::perturb(scene.instances, spec,
                                        scene.image.width, scene.image.height);
  REQUIRE(pred.size() == 2);
  BinaryMask merged(scene.image.width, scene.image.height);
  for (const auto& inst : pred) {
    for (std::size_t k = 0; k < merged.bits.size(); ++k) {
      CHECK(!(merged.bits[k] && inst.mask.bits[k]));
      merged.bits[k] |= inst.mask.bits[k];
    }
  }
  CHECK(merged == scene.instances[0].mask);
  CHECK(pred[0].id == 1);
  CHECK(pred[1].id == 2);
}

TEST_CASE("spurious blobs are appended after real cells") {
  const Scene scene = neurometry::generate_scene(disk_config(16, 2));
  PerturbSpec spec;
  spec.spurious_count = 3;
  const auto pred = neurometry::perturb(scene.instances, spec,
                                        scene.image.width, scene.image.height);
  CHECK(pred.size() == 5);
  for (std::size_t i = 0; i < pred.size(); ++i) {
    CHECK(pred[i].id == static_cast<int>(i) + 1);
    CHECK(neurometry::area(pred[i].mask) > 0);
  }
}

TEST_CASE("perturbation is deterministic in its seed") {
  const Scene scene = neurometry::generate_scene(disk_config(17));
  PerturbSpec spec;
  spec.erode_px = 1;
  spec.spurious_count = 2;
  spec.seed = 5;
  const auto a = neurometry::perturb(scene.instances, spec, 200, 200);
  const auto b = neurometry::perturb(scene.instances, spec, 200, 200);
  CHECK(a == b);
}
