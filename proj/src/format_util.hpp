// Copyright 2026 The crosseval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Formatting helpers shared by the serializers. Internal to src/.

#ifndef CROSSEVAL_FORMAT_UTIL_HPP_
#define CROSSEVAL_FORMAT_UTIL_HPP_

#include <charconv>
#include <cmath>
#include <cstdio>
#include <string>

namespace crosseval::detail {

/// Shortest decimal form that parses back to exactly `value`.
inline std::string shortest(double value) {
  char buf[32];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

/// Fixed-point with `digits` decimals, e.g. fixed(0.25, 6) -> "0.250000".
inline std::string fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

/// Two decimals, rounding half away from zero. A tiny epsilon first
/// absorbs binary representation error so that a value meant as .xx5
/// (e.g. (0.95 + 0.40) / 2) rounds up even when the nearest double sits
/// just below the midpoint.
inline std::string fixed2_half_away(double value) {
  const double magnitude =
      std::floor(std::abs(value) * 100.0 + 0.5 + 1e-9) / 100.0;
  return fixed(value < 0.0 && magnitude > 0.0 ? -magnitude : magnitude, 2);
}

/// RFC-4180 field: quoted (with doubled inner quotes) only when the
/// value contains a comma or a quote.
inline std::string csv_quote(const std::string& value) {
  if (value.find_first_of(",\"") == std::string::npos) return value;
  std::string quoted = "\"";
  for (char c : value) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  quoted += '"';
  return quoted;
}

}  // namespace crosseval::detail

#endif  // CROSSEVAL_FORMAT_UTIL_HPP_
