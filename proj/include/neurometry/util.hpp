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
#ifndef NEUROMETRY_UTIL_HPP_
#define NEUROMETRY_UTIL_HPP_

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <string>

namespace neurometry {

/// Rounds half away from zero. Used everywhere a real value becomes an
/// integer sample so that independent implementations agree bit-exactly.
inline double round_half_away(double x) {
  return x < 0.0 ? std::ceil(x - 0.5) : std::floor(x + 0.5);
}

inline std::uint8_t round_to_u8(double x) {
  double r = round_half_away(x);
  if (r < 0.0) r = 0.0;
  if (r > 255.0) r = 255.0;
  return static_cast<std::uint8_t>(r);
}

/// Fixed-point decimal formatting with the C locale, independent of any
/// global locale state. Reports use two decimals for percent values.
inline std::string format_fixed(double value, int decimals) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", decimals, value);
  return std::string(buf);
}

inline std::string format_percent(double ratio) {
  return format_fixed(ratio * 100.0, 2);
}

}  // namespace neurometry

#endif  // NEUROMETRY_UTIL_HPP_
