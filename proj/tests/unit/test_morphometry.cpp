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

#include "neurometry/morphometry.hpp"
#include "neurometry/rng.hpp"
#include "neurometry/synth.hpp"
#include "support/oracles.hpp"

using neurometry::BinaryMask;
using neurometry::GrayImage;
using neurometry::Instance;
using neurometry::Measurements;
using neurometry::SplitMix64;

namespace {

GrayImage constant_image(int w, int h, std::uint8_t v) {
  GrayImage img;
  img.width = w;
  img.height = h;
  img.pixels.assign(static_cast<std::size_t>(w) * h, v);
  return img;
}

}  // namespace

TEST_CASE("solid rectangle under constant intensity") {
  BinaryMask mask(8, 8);
  for (int r = 2; r < 7; ++r) {
    for (int c = 1; c < 4; ++c) mask.set(r, c);
  }
  const auto inst = neurometry::make_instance(1, mask);
  const Measurements m =
      neurometry::measure_instance(inst, constant_image(8, 8, 100));
  CHECK(m.length == 5);
  CHECK(m.width == 3);
  CHECK(m.area == 15);
  CHECK(m.min_intensity == 100);
  CHECK(m.mean_intensity == 100.0);
  CHECK(m.max_intensity == 100);
}

TEST_CASE("four-pixel mask averages exactly") {
  BinaryMask mask(4, 4);
  GrayImage img = constant_image(4, 4, 0);
  mask.set(0, 0);
  img.pixels[0] = 10;
  mask.set(0, 1);
  img.pixels[1] = 20;
  mask.set(1, 0);
  img.pixels[4] = 30;
  mask.set(1, 1);
  img.pixels[5] = 40;
  const Measurements m =
      neurometry::measure_instance(neurometry::make_instance(1, mask), img);
  CHECK(m.min_intensity == 10);
  CHECK(m.mean_intensity == 25.0);
  CHECK(m.max_intensity == 40);
}

TEST_CASE("L-shaped mask takes bbox length and width") {
  BinaryMask mask(4, 4);
  mask.set(0, 0);
  mask.set(1, 0);
  mask.set(2, 0);
  mask.set(2, 1);
  const Measurements m = neurometry::measure_instance(
      neurometry::make_instance(1, mask), constant_image(4, 4, 50));
  CHECK(m.length == 3);
  CHECK(m.width == 2);
  CHECK(m.area == 4);
}

TEST_CASE("dimension mismatch and empty masks are errors") {
  BinaryMask mask(4, 4);
  mask.set(0, 0);
  const auto inst = neurometry::make_instance(1, mask);
  CHECK_THROWS_AS(
      neurometry::measure_instance(inst, constant_image(5, 4, 1)),
      neurometry::InvalidArgument);
  CHECK_THROWS_AS(neurometry::make_instance(1, BinaryMask(4, 4)),
                  neurometry::InvalidArgument);
}

TEST_CASE("measure_instance matches the enumeration oracle exactly") {
  SplitMix64 rng(303);
  for (int trial = 0; trial < 50; ++trial) {
    const int w = static_cast<int>(rng.next_int(2, 24));
    const int h = static_cast<int>(rng.next_int(2, 24));
    BinaryMask mask = testsupport::random_mask(rng, w, h, 0.3);
    if (neurometry::area(mask) == 0) mask.set(0, 0);
    const GrayImage img = testsupport::random_image(rng, w, h);
    const Measurements got =
        neurometry::measure_instance(neurometry::make_instance(1, mask), img);
    const Measurements want = testsupport::measure_oracle(mask, img);
    REQUIRE(got == want);
    CHECK(got.min_intensity <= got.mean_intensity);
    CHECK(got.mean_intensity <= got.max_intensity);
    CHECK(got.area <= static_cast<std::int64_t>(got.length) * got.width);
  }
}

TEST_CASE("translating mask and image together changes nothing") {
  SplitMix64 rng(304);
  BinaryMask mask(20, 20);
  for (int r = 3; r < 8; ++r) {
    for (int c = 4; c < 7; ++c) {
      if (rng.next_double() < 0.8) mask.set(r, c);
    }
  }
  GrayImage img = testsupport::random_image(rng, 20, 20);
  const auto base =
      neurometry::measure_instance(neurometry::make_instance(1, mask), img);

  const int dx = 5, dy = 7;
  const BinaryMask shifted_mask = testsupport::shift_mask(mask, dx, dy);
  GrayImage shifted_img = constant_image(20, 20, 0);
  for (int r = 0; r < 20; ++r) {
    for (int c = 0; c < 20; ++c) {
      const int nr = r + dy, nc = c + dx;
      if (nr < 20 && nc < 20) {
        shifted_img.pixels[static_cast<std::size_t>(nr) * 20 + nc] =
            img.at(r, c);
      }
    }
  }
  const auto moved = neurometry::measure_instance(
      neurometry::make_instance(1, shifted_mask), shifted_img);
  CHECK(moved == base);
}

TEST_CASE("monotone intensity maps keep the geometry fields") {
  SplitMix64 rng(305);
  BinaryMask mask = testsupport::random_mask(rng, 10, 10, 0.4);
  if (neurometry::area(mask) == 0) mask.set(2, 2);
  const GrayImage img = testsupport::random_image(rng, 10, 10);
  GrayImage brighter = img;
  for (auto& p : brighter.pixels) {
    p = static_cast<std::uint8_t>(std::min(255, p / 2 + 100));
  }
  const auto inst = neurometry::make_instance(1, mask);
  const auto a = neurometry::measure_instance(inst, img);
  const auto b = neurometry::measure_instance(inst, brighter);
  CHECK(a.length == b.length);
  CHECK(a.width == b.width);
  CHECK(a.area == b.area);
}

TEST_CASE("measure_all on a generated scene composes per-instance results") {
  neurometry::SceneConfig cfg;
  cfg.n_cells = 5;
  cfg.seed = 606;
  const auto scene = neurometry::generate_scene(cfg);
  const auto rows = neurometry::measure_all(scene.instances, scene.image);
  REQUIRE(rows.size() == scene.instances.size());
  for (const auto& inst : scene.instances) {
    const auto it =
        std::find_if(rows.begin(), rows.end(),
                     [&](const auto& row) { return row.first == inst.id; });
    REQUIRE(it != rows.end());
    CHECK(it->second == neurometry::measure_instance(inst, scene.image));
  }
}

TEST_CASE("measure_all orders by id and attaches ids to failures") {
  const GrayImage img = constant_image(8, 8, 9);
  BinaryMask m1(8, 8), m2(8, 8);
  m1.set(0, 0);
  m2.set(5, 5);
  std::vector<Instance> instances = {neurometry::make_instance(7, m2),
                                     neurometry::make_instance(2, m1)};
  const auto rows = neurometry::measure_all(instances, img);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].first == 2);
  CHECK(rows[1].first == 7);
  CHECK(rows[0].second.area == 1);
  CHECK(rows[1].second.area == 1);

  CHECK(neurometry::measure_all({}, img).empty());

  std::vector<Instance> bad = {neurometry::make_instance(9, m1)};
  bad[0].mask = BinaryMask(4, 4);  // wrong canvas
  bad[0].mask.set(0, 0);
  CHECK_THROWS_WITH_AS(neurometry::measure_all(bad, img),
                       doctest::Contains("instance 9"),
                       neurometry::InvalidArgument);
}
