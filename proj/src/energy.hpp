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
#include <functional>
#include <span>
#include <vector>

#include "common.hpp"
#include "geometry.hpp"
#include "imaging.hpp"

namespace gazecut {

struct EnergyParams {
  Cost penalty = 14;    // per unit of depth difference between neighbors
  Cost inhibit = 1023;  // per unit beyond a difference of one
  bool hard_inhibit = false;

  /// Inhibit as used in graph capacities.
  Cost effective_inhibit() const { return hard_inhibit ? kUncuttable : inhibit; }
};

/// One depth label per site of a width x height site grid.
struct Labeling {
  int width = 0;
  int height = 0;
  int labels = 0;
  std::vector<int> label;  // row-major, k in [0, labels)

  Labeling() = default;
  Labeling(int w, int h, int m, int fill = 0)
      : width(w), height(h), labels(m), label(static_cast<std::size_t>(w) * h, fill) {}

  int at(int x, int y) const { return label[static_cast<std::size_t>(y) * width + x]; }
  int& at(int x, int y) { return label[static_cast<std::size_t>(y) * width + x]; }
  int sites() const { return width * height; }

  friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Data term of every (site, label): index ((y * width) + x) * labels + k.
struct CostVolume {
  int width = 0;
  int height = 0;
  int labels = 0;
  std::vector<Cost> cost;

  CostVolume() = default;
  CostVolume(int w, int h, int m)
      : width(w), height(h), labels(m), cost(static_cast<std::size_t>(w) * h * m, 0) {}

  Cost at(int x, int y, int k) const { return cost[index(x, y, k)]; }
  Cost& at(int x, int y, int k) { return cost[index(x, y, k)]; }
  std::size_t index(int x, int y, int k) const {
    return (static_cast<std::size_t>(y) * width + x) * labels + k;
  }
  std::span<const Cost> site(int x, int y) const {
    return {cost.data() + index(x, y, 0), static_cast<std::size_t>(labels)};
  }
};

/// Sum of absolute RGB differences, in [0, 765].
Cost data_term(const std::uint8_t* left_rgb, const std::uint8_t* right_rgb);

/// penalty * |i - j| + inhibit * (|i - j| - 1) for |i - j| > 1.
/// In hard-inhibit mode differences above one cost kUncuttable.
Cost pairwise_term(int i, int j, const EnergyParams& params);

/// Non-negative second difference h(i+1) - 2h(i) + h(i-1) at every interior
/// point of [-(m-1), m-1].
bool verify_convexity(const std::function<Cost(int)>& h, int labels);

/// Data terms for every cross point of the cuboid. Out-of-image columns take
/// the nearest in-image column. Rows are split across `threads` workers.
CostVolume build_cost_volume(const Cuboid& cuboid, const StereoPair& pair, int threads = 1);

/// Sum of data terms plus pairwise terms over 4-connected site pairs.
/// Saturates at kUncuttable. Throws config error on a label out of range or
/// a shape mismatch.
Cost total_energy(const Labeling& labeling, const CostVolume& volume, const EnergyParams& params);
Cost total_energy(const Labeling& labeling, const Cuboid& cuboid, const StereoPair& pair,
                  const EnergyParams& params);

}  // namespace gazecut
