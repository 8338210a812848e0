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
#ifndef NEUROMETRY_MORPHOMETRY_HPP_
#define NEUROMETRY_MORPHOMETRY_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "neurometry/error.hpp"
#include "neurometry/image.hpp"
#include "neurometry/mask.hpp"

namespace neurometry {

/// The six per-cell quantities: bbox height is the cell length and bbox
/// width the cell width (the axis-aligned convention, applied even to
/// diagonal neurites); area is the foreground pixel count; intensity stats
/// are taken over exactly the foreground pixels of the grayscale image.
struct Measurements {
  int length = 0;             // bbox height, pixels
  int width = 0;              // bbox width, pixels
  std::int64_t area = 0;      // foreground pixels
  int min_intensity = 0;      // [0,255]
  double mean_intensity = 0;  // exact rational mean, kept at full precision
  int max_intensity = 0;      // [0,255]

  bool operator==(const Measurements&) const = default;
};

inline Measurements measure_instance(const Instance& inst,
                                     const GrayImage& img) {
  if (inst.mask.width != img.width || inst.mask.height != img.height) {
    throw InvalidArgument("measure_instance: mask is " +
                          std::to_string(inst.mask.width) + "x" +
                          std::to_string(inst.mask.height) + " but image is " +
                          std::to_string(img.width) + "x" +
                          std::to_string(img.height));
  }
  const BBox& box = inst.bbox;
  Measurements m;
  m.length = box.h;
  m.width = box.w;

  int mn = 256, mx = -1;
  std::uint64_t sum = 0;
  std::int64_t count = 0;
  for (int r = box.y; r < box.y + box.h; ++r) {
    for (int c = box.x; c < box.x + box.w; ++c) {
      if (!inst.mask.at(r, c)) continue;
      const int v = img.at(r, c);
      mn = std::min(mn, v);
      mx = std::max(mx, v);
      sum += static_cast<std::uint64_t>(v);
      ++count;
    }
  }
  if (count == 0) {
    throw InvalidArgument("measure_instance: empty mask");
  }
  m.area = count;
  m.min_intensity = mn;
  m.max_intensity = mx;
  m.mean_intensity = static_cast<double>(sum) / static_cast<double>(count);
  return m;
}

/// One record per instance, ordered by id. Failures carry the instance id.
inline std::vector<std::pair<int, Measurements>> measure_all(
    std::vector<Instance> instances, const GrayImage& img) {
  std::sort(instances.begin(), instances.end(),
            [](const Instance& a, const Instance& b) { return a.id < b.id; });
  std::vector<std::pair<int, Measurements>> out;
  out.reserve(instances.size());
  for (const auto& inst : instances) {
    try {
      out.emplace_back(inst.id, measure_instance(inst, img));
    } catch (const Error& e) {
      throw InvalidArgument("instance " + std::to_string(inst.id) + ": " +
                            e.what());
    }
  }
  return out;
}

}  // namespace neurometry

#endif  // NEUROMETRY_MORPHOMETRY_HPP_
