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

#include <algorithm>
#include <set>
#include <vector>

#include "neurometry/image.hpp"
#include "neurometry/rng.hpp"
#include "support/oracles.hpp"

using neurometry::GrayImage;
using neurometry::RawImage;
using neurometry::ResizeMode;
using neurometry::SplitMix64;

namespace {

RawImage raw(int w, int h, int depth, std::vector<std::uint16_t> samples) {
  RawImage img;
  img.width = w;
  img.height = h;
  img.bit_depth = depth;
  img.samples = std::move(samples);
  return img;
}

GrayImage gray(int w, int h, std::vector<std::uint8_t> pixels) {
  GrayImage img;
  img.width = w;
  img.height = h;
  img.pixels = std::move(pixels);
  return img;
}

}  // namespace

TEST_CASE("normalize maps a 16-bit range onto 0..255 with half-away rounding") {
  // (600-100)/1000 * 255 = 127.5, which rounds away from zero to 128.
  const auto out = neurometry::normalize_to_u8(raw(3, 1, 16, {100, 600, 1100}));
  CHECK(out.pixels == std::vector<std::uint8_t>{0, 128, 255});
}

TEST_CASE("normalize is the identity on full-range 8-bit input") {
  const std::vector<std::uint8_t> px = {0, 17, 99, 201, 255, 128};
  const auto out = neurometry::normalize_to_u8(raw(3, 2, 8, {0, 17, 99, 201, 255, 128}));
  CHECK(out.pixels == px);
}

TEST_CASE("normalize sends constant images to zero") {
  const auto out = neurometry::normalize_to_u8(raw(2, 2, 8, {7, 7, 7, 7}));
  CHECK(out.pixels == std::vector<std::uint8_t>{0, 0, 0, 0});
}

TEST_CASE("normalize rejects empty input") {
  CHECK_THROWS_AS(neurometry::normalize_to_u8(RawImage{}),
                  neurometry::InvalidArgument);
}

TEST_CASE("normalize is idempotent once 0 and 255 are both present") {
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    RawImage img = raw(8, 8, 8, {});
    img.samples.resize(64);
    for (auto& s : img.samples) {
      s = static_cast<std::uint16_t>(rng.next_int(0, 255));
    }
    img.samples[3] = 0;
    img.samples[40] = 255;
    const auto once = neurometry::normalize_to_u8(img);
    for (std::size_t i = 0; i < img.samples.size(); ++i) {
      CHECK(once.pixels[i] == img.samples[i]);
    }
  }
}

TEST_CASE("normalize preserves intensity ordering") {
  SplitMix64 rng(12);
  RawImage img = raw(16, 4, 16, {});
  img.samples.resize(64);
  for (auto& s : img.samples) {
    s = static_cast<std::uint16_t>(rng.next_int(0, 40000));
  }
  const auto out = neurometry::normalize_to_u8(img);
  for (std::size_t i = 0; i < img.samples.size(); ++i) {
    for (std::size_t j = 0; j < img.samples.size(); ++j) {
      if (img.samples[i] <= img.samples[j]) {
        CHECK(out.pixels[i] <= out.pixels[j]);
      }
    }
  }
}

TEST_CASE("resize to own size is exact identity in both modes") {
  SplitMix64 rng(13);
  const auto img = testsupport::random_image(rng, 9, 5);
  CHECK(neurometry::resize(img, 9, 5, ResizeMode::kBilinear) == img);
  CHECK(neurometry::resize(img, 9, 5, ResizeMode::kNearest) == img);
}

TEST_CASE("bilinear upscale of a 2-pixel gradient hits the derived values") {
  // Centers land at source offsets -0.25, 0.25, 0.75, 1.25; the clamped
  // interpolation gives 0, 63.75->64, 191.25->191, 255.
  const auto out =
      neurometry::resize(gray(2, 1, {0, 255}), 4, 1, ResizeMode::kBilinear);
  CHECK(out.pixels == std::vector<std::uint8_t>{0, 64, 191, 255});
}

TEST_CASE("nearest upscale replicates pixels and invents no values") {
  const auto out =
      neurometry::resize(gray(2, 2, {0, 1, 1, 0}), 4, 4, ResizeMode::kNearest);
  CHECK(out.pixels == std::vector<std::uint8_t>{0, 0, 1, 1, 0, 0, 1, 1,
                                                1, 1, 0, 0, 1, 1, 0, 0});
}

TEST_CASE("nearest resize output values come from the input value set") {
  SplitMix64 rng(14);
  for (int trial = 0; trial < 10; ++trial) {
    const int w = static_cast<int>(rng.next_int(1, 12));
    const int h = static_cast<int>(rng.next_int(1, 12));
    const auto img = testsupport::random_image(rng, w, h);
    const std::set<std::uint8_t> in_values(img.pixels.begin(),
                                           img.pixels.end());
    const int ow = static_cast<int>(rng.next_int(1, 20));
    const int oh = static_cast<int>(rng.next_int(1, 20));
    const auto out = neurometry::resize(img, ow, oh, ResizeMode::kNearest);
    for (const auto v : out.pixels) {
      CHECK(in_values.count(v) == 1);
    }
  }
}

TEST_CASE("resize rejects zero target dimensions") {
  const auto img = gray(2, 2, {1, 2, 3, 4});
  CHECK_THROWS_AS(neurometry::resize(img, 0, 4, ResizeMode::kNearest),
                  neurometry::InvalidArgument);
  CHECK_THROWS_AS(neurometry::resize(img, 4, 0, ResizeMode::kBilinear),
                  neurometry::InvalidArgument);
}
