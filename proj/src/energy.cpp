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

#include "energy.hpp"

#include <algorithm>
#include <cstdlib>
#include <thread>

namespace gazecut {

Cost data_term(const std::uint8_t* left_rgb, const std::uint8_t* right_rgb) {
  return std::abs(int{left_rgb[0]} - int{right_rgb[0]}) +
         std::abs(int{left_rgb[1]} - int{right_rgb[1]}) +
         std::abs(int{left_rgb[2]} - int{right_rgb[2]});
}

Cost pairwise_term(int i, int j, const EnergyParams& params) {
  const Cost diff = std::abs(i - j);
  if (diff <= 1) return params.penalty * diff;
  if (params.hard_inhibit) return kUncuttable;
  return params.penalty * diff + params.inhibit * (diff - 1);
}

bool verify_convexity(const std::function<Cost(int)>& h, int labels) {
  for (int i = -(labels - 1) + 1; i <= labels - 2; ++i) {
    if (h(i + 1) - 2 * h(i) + h(i - 1) < 0) return false;
  }
  return true;
}

CostVolume build_cost_volume(const Cuboid& cuboid, const StereoPair& pair, int threads) {
  if (pair.left.width != cuboid.image_width || pair.right.width != cuboid.image_width ||
      pair.left.height != cuboid.image_height || pair.right.height != cuboid.image_height) {
    throw Error(ErrorKind::config, "cuboid does not match the image dimensions");
  }
  CostVolume volume(cuboid.gaze_extent, cuboid.row_extent, cuboid.labels());
  const int w = cuboid.image_width;
  auto rows = [&](int y_begin, int y_end) {
    for (int sy = y_begin; sy < y_end; ++sy) {
      for (int sx = 0; sx < volume.width; ++sx) {
        for (int k = 0; k < volume.labels; ++k) {
          const CrossPoint p = cuboid.cross_point(sx, sy, k);
          const int xl = std::clamp(p.x_left, 0, w - 1);
          const int xr = std::clamp(p.x_right, 0, w - 1);
          volume.at(sx, sy, k) = data_term(pair.left.at(xl, p.y), pair.right.at(xr, p.y));
        }
      }
    }
  };
  threads = std::clamp(threads, 1, std::max(1, volume.height));
  if (threads == 1) {
    rows(0, volume.height);
    return volume;
  }
  std::vector<std::jthread> workers;
  const int chunk = (volume.height + threads - 1) / threads;
  for (int t = 0; t < threads; ++t) {
    const int begin = t * chunk;
    const int end = std::min(volume.height, begin + chunk);
    if (begin < end) workers.emplace_back(rows, begin, end);
  }
  return volume;
}

Cost total_energy(const Labeling& labeling, const CostVolume& volume, const EnergyParams& params) {
  if (labeling.width != volume.width || labeling.height != volume.height ||
      labeling.labels != volume.labels) {
    throw Error(ErrorKind::config, "labeling does not match the cost volume");
  }
  Cost energy = 0;
  for (int y = 0; y < labeling.height; ++y) {
    for (int x = 0; x < labeling.width; ++x) {
      const int k = labeling.at(x, y);
      if (k < 0 || k >= labeling.labels) {
        throw Error(ErrorKind::config, "label out of range");
      }
      energy = saturating_add(energy, volume.at(x, y, k));
      if (x + 1 < labeling.width) {
        energy = saturating_add(energy, pairwise_term(k, labeling.at(x + 1, y), params));
      }
      if (y + 1 < labeling.height) {
        energy = saturating_add(energy, pairwise_term(k, labeling.at(x, y + 1), params));
      }
    }
  }
  return energy;
}

Cost total_energy(const Labeling& labeling, const Cuboid& cuboid, const StereoPair& pair,
                  const EnergyParams& params) {
  return total_energy(labeling, build_cost_volume(cuboid, pair), params);
}

}  // namespace gazecut
