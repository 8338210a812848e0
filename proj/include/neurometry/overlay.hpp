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
#ifndef NEUROMETRY_OVERLAY_HPP_
#define NEUROMETRY_OVERLAY_HPP_

#include <set>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/image.hpp"
#include "neurometry/image_io.hpp"
#include "neurometry/mask.hpp"
#include "neurometry/matching.hpp"

namespace neurometry {

/// Visual comparison raster: grayscale base, matched-pair boundaries green,
/// missed ground truth (FN) blue, spurious predictions (FP) red. Green is
/// painted last so a contested pixel shows the match.
inline RgbImage render_overlay(const GrayImage& img, const MatchResult& m,
                               const std::vector<Instance>& gt,
                               const std::vector<Instance>& pred) {
  RgbImage out;
  out.width = img.width;
  out.height = img.height;
  out.pixels.resize(img.pixels.size() * 3);
  for (std::size_t i = 0; i < img.pixels.size(); ++i) {
    const std::uint8_t g = img.pixels[i];
    out.pixels[3 * i] = g;
    out.pixels[3 * i + 1] = g;
    out.pixels[3 * i + 2] = g;
  }

  std::set<int> matched_gt, matched_pred;
  for (const auto& p : m.pairs) {
    matched_gt.insert(p.gt_id);
    matched_pred.insert(p.pred_id);
  }

  auto paint = [&](const Instance& inst, std::uint8_t r, std::uint8_t g,
                   std::uint8_t b) {
    if (inst.mask.width != img.width || inst.mask.height != img.height) {
      throw InvalidArgument("render_overlay: mask/image dimensions differ");
    }
    const BinaryMask edge = boundary(inst.mask);
    for (int row = 0; row < edge.height; ++row) {
      for (int col = 0; col < edge.width; ++col) {
        if (edge.at(row, col)) out.set(row, col, r, g, b);
      }
    }
  };

  for (const auto& inst : gt) {
    if (!matched_gt.count(inst.id)) paint(inst, 0, 0, 255);  // FN: blue
  }
  for (const auto& inst : pred) {
    if (!matched_pred.count(inst.id)) paint(inst, 255, 0, 0);  // FP: red
  }
  for (const auto& inst : gt) {
    if (matched_gt.count(inst.id)) paint(inst, 0, 255, 0);
  }
  for (const auto& inst : pred) {
    if (matched_pred.count(inst.id)) paint(inst, 0, 255, 0);
  }
  return out;
}

}  // namespace neurometry

#endif  // NEUROMETRY_OVERLAY_HPP_
