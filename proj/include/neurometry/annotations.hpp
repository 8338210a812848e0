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
#ifndef NEUROMETRY_ANNOTATIONS_HPP_
#define NEUROMETRY_ANNOTATIONS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "neurometry/error.hpp"
#include "neurometry/mask.hpp"

namespace neurometry {

struct Point {
  double x = 0.0;
  double y = 0.0;

  bool operator==(const Point&) const = default;
};

using Ring = std::vector<Point>;  // closed implicitly: last connects to first

/// One annotated object as a set of closed polygons in image coordinates
/// (x right, y down, origin at the top-left pixel corner).
struct PolygonInstance {
  int id = 0;
  std::string class_name;
  std::vector<Ring> rings;

  bool operator==(const PolygonInstance&) const = default;
};

struct AnnotationSet {
  int image_width = 0;
  int image_height = 0;
  std::vector<PolygonInstance> instances;

  bool operator==(const AnnotationSet&) const = default;
};

namespace detail {

inline void check_vertex(double v, std::size_t index) {
  if (!std::isfinite(v) || v < -1.0) {
    throw ParseError("instance " + std::to_string(index) +
                     ": vertex coordinate " + std::to_string(v) +
                     " is not finite or < -1");
  }
}

/// Reads one ring from a [[x,y],...] array, dropping degenerate (<3 vertex)
/// rings. Returns false if the ring was dropped.
inline bool read_ring(const nlohmann::json& jring, std::size_t index,
                      Ring& out) {
  if (!jring.is_array()) {
    throw ParseError("instance " + std::to_string(index) +
                     ": ring is not an array");
  }
  Ring ring;
  for (const auto& jv : jring) {
    if (!jv.is_array() || jv.size() != 2 || !jv[0].is_number() ||
        !jv[1].is_number()) {
      throw ParseError("instance " + std::to_string(index) +
                       ": vertex is not a [x,y] number pair");
    }
    Point p{jv[0].get<double>(), jv[1].get<double>()};
    check_vertex(p.x, index);
    check_vertex(p.y, index);
    ring.push_back(p);
  }
  if (ring.size() < 3) return false;
  out = std::move(ring);
  return true;
}

}  // namespace detail

/// Parses the canonical annotation schema
///   {"image": {"width": W, "height": H},
///    "instances": [{"id": 1, "class": "neuron", "rings": [[[x,y],...]]}]}
/// or the V7 Darwin export subset
///   {"image": {...}, "annotations": [{"name": "...",
///    "polygon": {"path": [{"x":..,"y":..},...]}}]}.
/// Darwin annotations get sequential ids starting at 1.
inline AnnotationSet parse_annotations(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ParseError("annotation document is not a JSON object");
  }
  if (!doc.contains("image") || !doc["image"].is_object() ||
      !doc["image"].contains("width") || !doc["image"].contains("height")) {
    throw ParseError("missing required key: image.width / image.height");
  }
  AnnotationSet set;
  set.image_width = doc["image"]["width"].get<int>();
  set.image_height = doc["image"]["height"].get<int>();
  if (set.image_width < 1 || set.image_height < 1) {
    throw ParseError("image dimensions must be >= 1");
  }

  const bool canonical = doc.contains("instances");
  const bool darwin = doc.contains("annotations");
  if (!canonical && !darwin) {
    throw ParseError("missing required key: instances (or annotations)");
  }

  std::set<int> seen_ids;
  if (canonical) {
    const auto& arr = doc["instances"];
    if (!arr.is_array()) throw ParseError("instances is not an array");
    for (std::size_t i = 0; i < arr.size(); ++i) {
      const auto& j = arr[i];
      PolygonInstance inst;
      if (!j.contains("id") || !j["id"].is_number_integer()) {
        throw ParseError("instance " + std::to_string(i) +
                         ": missing or non-integer key 'id'");
      }
      inst.id = j["id"].get<int>();
      inst.class_name = j.value("class", std::string("neuron"));
      if (!j.contains("rings") || !j["rings"].is_array()) {
        throw ParseError("instance " + std::to_string(i) +
                         ": missing key 'rings'");
      }
      for (const auto& jring : j["rings"]) {
        Ring ring;
        if (detail::read_ring(jring, i, ring)) {
          inst.rings.push_back(std::move(ring));
        }
      }
      if (inst.rings.empty()) {
        throw ParseError("instance " + std::to_string(i) +
                         ": rejected, no ring has >= 3 vertices");
      }
      if (!seen_ids.insert(inst.id).second) {
        throw ParseError("instance " + std::to_string(i) + ": duplicate id " +
                         std::to_string(inst.id));
      }
      set.instances.push_back(std::move(inst));
    }
    return set;
  }

  const auto& arr = doc["annotations"];
  if (!arr.is_array()) throw ParseError("annotations is not an array");
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const auto& j = arr[i];
    if (!j.contains("polygon") || !j["polygon"].is_object() ||
        !j["polygon"].contains("path")) {
      throw ParseError("instance " + std::to_string(i) +
                       ": missing key 'polygon.path'");
    }
    PolygonInstance inst;
    inst.id = static_cast<int>(i) + 1;
    inst.class_name = j.value("name", std::string("neuron"));
    Ring ring;
    for (const auto& jv : j["polygon"]["path"]) {
      if (!jv.is_object() || !jv.contains("x") || !jv.contains("y")) {
        throw ParseError("instance " + std::to_string(i) +
                         ": path entry is not an {x,y} object");
      }
      Point p{jv["x"].get<double>(), jv["y"].get<double>()};
      detail::check_vertex(p.x, i);
      detail::check_vertex(p.y, i);
      ring.push_back(p);
    }
    if (ring.size() < 3) {
      throw ParseError("instance " + std::to_string(i) +
                       ": rejected, no ring has >= 3 vertices");
    }
    inst.rings.push_back(std::move(ring));
    set.instances.push_back(std::move(inst));
  }
  return set;
}

/// Canonical-schema writer; parse_annotations(serialize_annotations(s)) == s.
inline std::string serialize_annotations(const AnnotationSet& set) {
  nlohmann::ordered_json doc;
  doc["image"] = {{"width", set.image_width}, {"height", set.image_height}};
  doc["instances"] = nlohmann::ordered_json::array();
  for (const auto& inst : set.instances) {
    nlohmann::ordered_json j;
    j["id"] = inst.id;
    j["class"] = inst.class_name;
    j["rings"] = nlohmann::ordered_json::array();
    for (const auto& ring : inst.rings) {
      nlohmann::ordered_json jring = nlohmann::ordered_json::array();
      for (const auto& p : ring) {
        jring.push_back({p.x, p.y});
      }
      j["rings"].push_back(std::move(jring));
    }
    doc["instances"].push_back(std::move(j));
  }
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Rasterization: pixel (col,row) is foreground iff its center
// (col+0.5, row+0.5) lies inside any ring under the nonzero-winding rule.
// Scanline implementation; the per-pixel winding test lives in the tests as
// the independent oracle.
// ---------------------------------------------------------------------------

namespace detail {

struct Crossing {
  double x;
  int dir;  // +1 edge crosses downward, -1 upward
};

inline void rasterize_ring(const Ring& ring, BinaryMask& out) {
  const int w = out.width, h = out.height;
  double min_y = ring[0].y, max_y = ring[0].y;
  for (const auto& p : ring) {
    min_y = std::min(min_y, p.y);
    max_y = std::max(max_y, p.y);
  }
  const int r0 = std::max(0, static_cast<int>(std::floor(min_y - 0.5)));
  const int r1 = std::min(h - 1, static_cast<int>(std::ceil(max_y)));

  std::vector<Crossing> xs;
  for (int row = r0; row <= r1; ++row) {
    const double y = row + 0.5;
    xs.clear();
    for (std::size_t i = 0; i < ring.size(); ++i) {
      const Point& p = ring[i];
      const Point& q = ring[(i + 1) % ring.size()];
      if (p.y <= y && y < q.y) {
        xs.push_back({p.x + (y - p.y) * (q.x - p.x) / (q.y - p.y), +1});
      } else if (q.y <= y && y < p.y) {
        xs.push_back({q.x + (y - q.y) * (p.x - q.x) / (p.y - q.y), -1});
      }
    }
    if (xs.empty()) continue;
    std::sort(xs.begin(), xs.end(),
              [](const Crossing& a, const Crossing& b) { return a.x < b.x; });
    // Net winding past the last crossing is zero for a closed ring, so only
    // spans between consecutive crossings can be inside.
    int wn = 0;
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      wn += xs[i].dir;
      if (wn == 0) continue;
      const double xa = xs[i].x;
      const double xb = xs[i + 1].x;
      // Pixel centers c+0.5 in [xa, xb).
      int c0 = static_cast<int>(std::ceil(xa - 0.5));
      int c1 = static_cast<int>(std::ceil(xb - 0.5)) - 1;
      c0 = std::max(c0, 0);
      c1 = std::min(c1, w - 1);
      for (int c = c0; c <= c1; ++c) {
        out.bits[static_cast<std::size_t>(row) * w + c] = 1;
      }
    }
  }
}

}  // namespace detail

/// Fills a canvas-sized mask from a polygon instance; rings are unioned and
/// clipped to the canvas.
inline BinaryMask rasterize(const PolygonInstance& inst, int width,
                            int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("rasterize: canvas dimensions must be >= 1");
  }
  BinaryMask mask(width, height);
  for (const auto& ring : inst.rings) {
    if (ring.size() >= 3) detail::rasterize_ring(ring, mask);
  }
  return mask;
}

// ---------------------------------------------------------------------------
// Run-length encoding: row-major (value, length) runs.
// ---------------------------------------------------------------------------

using RlePairs = std::vector<std::pair<int, std::int64_t>>;

inline BinaryMask decode_rle(const RlePairs& runs, int width, int height) {
  if (width < 1 || height < 1) {
    throw InvalidArgument("decode_rle: canvas dimensions must be >= 1");
  }
  const std::int64_t total = static_cast<std::int64_t>(width) * height;
  std::int64_t sum = 0;
  for (const auto& [value, length] : runs) {
    if (value != 0 && value != 1) {
      throw ParseError("decode_rle: run value must be 0 or 1, got " +
                       std::to_string(value));
    }
    if (length < 0) {
      throw ParseError("decode_rle: negative run length");
    }
    sum += length;
  }
  if (sum != total) {
    throw ParseError("decode_rle: run lengths sum to " + std::to_string(sum) +
                     ", expected " + std::to_string(total));
  }
  BinaryMask mask(width, height);
  std::size_t i = 0;
  for (const auto& [value, length] : runs) {
    for (std::int64_t k = 0; k < length; ++k) {
      mask.bits[i++] = static_cast<std::uint8_t>(value);
    }
  }
  return mask;
}

inline RlePairs encode_rle(const BinaryMask& mask) {
  RlePairs runs;
  if (mask.bits.empty()) return runs;
  int value = mask.bits[0];
  std::int64_t length = 0;
  for (const auto b : mask.bits) {
    if (b == value) {
      ++length;
    } else {
      runs.emplace_back(value, length);
      value = b;
      length = 1;
    }
  }
  runs.emplace_back(value, length);
  return runs;
}

/// RLE JSON: {"width": W, "height": H, "runs": [[value, length], ...]}.
inline BinaryMask parse_rle_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.contains("width") || !doc.contains("height") ||
      !doc.contains("runs")) {
    throw ParseError("RLE document needs keys width, height, runs");
  }
  RlePairs runs;
  for (const auto& j : doc["runs"]) {
    if (!j.is_array() || j.size() != 2) {
      throw ParseError("RLE run is not a [value, length] pair");
    }
    runs.emplace_back(j[0].get<int>(), j[1].get<std::int64_t>());
  }
  return decode_rle(runs, doc["width"].get<int>(), doc["height"].get<int>());
}

inline std::string serialize_rle_json(const BinaryMask& mask) {
  nlohmann::ordered_json doc;
  doc["width"] = mask.width;
  doc["height"] = mask.height;
  doc["runs"] = nlohmann::ordered_json::array();
  for (const auto& [value, length] : encode_rle(mask)) {
    doc["runs"].push_back({value, length});
  }
  return doc.dump() + "\n";
}

// ---------------------------------------------------------------------------
// Mask -> polygon rings along pixel edges. Rasterizing the traced rings
// reproduces the mask exactly for hole-free regions (pixel centers are 0.5
// away from every traced edge). Holes get filled back in, matching the
// union-of-rings fill rule.
// ---------------------------------------------------------------------------

namespace detail {

// Directions: 0 = east, 1 = south, 2 = west, 3 = north (clockwise order).
constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

}  // namespace detail

inline std::vector<Ring> trace_rings(const BinaryMask& mask) {
  const int w = mask.width, h = mask.height;
  // Directed boundary edges keyed by start corner: corner (x,y) has index
  // y*(w+1)+x. edge_dir[key] holds up to two outgoing directions (pinch
  // corners on checkerboard configurations have two).
  std::map<std::int64_t, std::vector<int>> outgoing;
  auto corner_key = [w](int x, int y) {
    return static_cast<std::int64_t>(y) * (w + 1) + x;
  };
  auto fg = [&](int r, int c) {
    return r >= 0 && r < h && c >= 0 && c < w && mask.at(r, c);
  };

  // Exposed sides, oriented so each pixel's own loop runs TL->TR->BR->BL.
  std::vector<std::tuple<int, int, int>> edges;  // (corner_x, corner_y, dir)
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      if (!mask.at(r, c)) continue;
      if (!fg(r - 1, c)) edges.emplace_back(c, r, 0);          // top, east
      if (!fg(r, c + 1)) edges.emplace_back(c + 1, r, 1);      // right, south
      if (!fg(r + 1, c)) edges.emplace_back(c + 1, r + 1, 2);  // bottom, west
      if (!fg(r, c - 1)) edges.emplace_back(c, r + 1, 3);      // left, north
    }
  }
  std::map<std::int64_t, std::vector<std::size_t>> by_start;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    by_start[corner_key(std::get<0>(edges[i]), std::get<1>(edges[i]))]
        .push_back(i);
  }

  std::vector<std::uint8_t> used(edges.size(), 0);
  std::vector<Ring> rings;
  for (std::size_t start = 0; start < edges.size(); ++start) {
    if (used[start]) continue;
    Ring raw;
    std::size_t e = start;
    for (;;) {
      used[e] = 1;
      const auto [x, y, dir] = edges[e];
      raw.push_back(Point{static_cast<double>(x), static_cast<double>(y)});
      const int nx = x + detail::kDx[dir];
      const int ny = y + detail::kDy[dir];
      if (nx == std::get<0>(edges[start]) && ny == std::get<1>(edges[start])) {
        break;
      }
      const auto& options = by_start[corner_key(nx, ny)];
      // Prefer the sharpest right turn so pinch corners stay two simple
      // loops instead of one self-touching loop.
      std::size_t next = edges.size();
      for (const int want : {(dir + 1) % 4, dir, (dir + 3) % 4}) {
        for (const std::size_t cand : options) {
          if (!used[cand] && std::get<2>(edges[cand]) == want) {
            next = cand;
            break;
          }
        }
        if (next != edges.size()) break;
      }
      if (next == edges.size()) {
        throw Error("trace_rings: open boundary chain (corrupt mask state)");
      }
      e = next;
    }
    // Merge collinear runs.
    Ring ring;
    const std::size_t n = raw.size();
    for (std::size_t i = 0; i < n; ++i) {
      const Point& prev = raw[(i + n - 1) % n];
      const Point& cur = raw[i];
      const Point& next = raw[(i + 1) % n];
      const bool collinear = (cur.x - prev.x) * (next.y - cur.y) ==
                             (cur.y - prev.y) * (next.x - cur.x);
      if (!collinear) ring.push_back(cur);
    }
    if (ring.size() >= 3) rings.push_back(std::move(ring));
  }
  return rings;
}

/// Canonical-schema instances for a list of mask instances (fixture export).
inline AnnotationSet to_annotation_set(const std::vector<Instance>& instances,
                                       int width, int height,
                                       const std::string& class_name = "neuron") {
  AnnotationSet set;
  set.image_width = width;
  set.image_height = height;
  for (const auto& inst : instances) {
    PolygonInstance poly;
    poly.id = inst.id;
    poly.class_name = class_name;
    poly.rings = trace_rings(inst.mask);
    set.instances.push_back(std::move(poly));
  }
  return set;
}

}  // namespace neurometry

#endif  // NEUROMETRY_ANNOTATIONS_HPP_
