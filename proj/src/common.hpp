// Copyright 2026 The gazecut Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace gazecut {

/// Integer cost used for data terms, pairwise terms, capacities and energies.
using Cost = std::int64_t;

/// Capacity that no minimum cut may cross. Large enough that sums of all
/// finite capacities at Tsukuba scale stay far below it.
inline constexpr Cost kUncuttable = Cost{1} << 62;

/// Saturating addition, used where uncuttable terms may accumulate.
constexpr Cost saturating_add(Cost a, Cost b) {
  if (a >= kUncuttable || b >= kUncuttable) return kUncuttable;
  const Cost s = a + b;
  return s >= kUncuttable ? kUncuttable : s;
}

/// Halving with round-half-away-from-zero, shared by every coordinate
/// transform: 17 -> 9, -17 -> -9, 16 -> 8.
constexpr int halve_away(int v) {
  return v >= 0 ? (v + 1) / 2 : -((-v + 1) / 2);
}

enum class ErrorKind {
  io,        // missing or unreadable file
  format,    // malformed file content
  config,    // invalid parameters or cuboid
  geometry,  // coordinate outside an image
  solver,    // infeasible problem or iteration cap
  internal,  // broken invariant
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace gazecut
