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

#include "scene.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

namespace gazecut::testing {

namespace {

std::uint64_t mix(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Texture of surface `id` at right-image position (x, y); 2x2 cells keep
// some spatial correlation.
void texel(std::uint64_t seed, int id, int x, int y, std::uint8_t* rgb) {
  const std::uint64_t h = mix(seed ^ mix(static_cast<std::uint64_t>(id) << 40 ^
                                         static_cast<std::uint64_t>(x >> 1) << 20 ^
                                         static_cast<std::uint64_t>(y >> 1)));
  rgb[0] = static_cast<std::uint8_t>(h);
  rgb[1] = static_cast<std::uint8_t>(h >> 8);
  rgb[2] = static_cast<std::uint8_t>(h >> 16);
}

bool covers(const Layer& l, int x, int y) {
  return x >= l.x0 && x < l.x1 && y >= l.y0 && y < l.y1;
}

}  // namespace

Scene make_scene(const SceneSpec& spec) {
  const int w = spec.width;
  const int h = spec.height;
  Scene s;
  s.pair.left = {w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h * 3)};
  s.pair.right = s.pair.left;
  s.ground_truth = {w, h, std::vector<std::uint8_t>(static_cast<std::size_t>(w) * h)};

  // Surface visible from a view: nearest layer whose rectangle, shifted by
  // its disparity for the left view, covers the pixel.
  auto visible = [&](int x, int y, bool left) -> int {
    int best = -1;
    int best_dis = spec.background_disparity;
    for (std::size_t i = 0; i < spec.layers.size(); ++i) {
      const Layer& l = spec.layers[i];
      const int xr = left ? x - l.disparity : x;
      if (covers(l, xr, y) && l.disparity > best_dis) {
        best = static_cast<int>(i);
        best_dis = l.disparity;
      }
    }
    return best;
  };

  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> noise(-spec.noise, spec.noise);
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int r = visible(x, y, false);
      const int dr = r < 0 ? spec.background_disparity : spec.layers[r].disparity;
      texel(spec.seed, r + 1, x, y, &s.pair.right.pixels[(static_cast<std::size_t>(y) * w + x) * 3]);
      s.ground_truth.at(x, y) = static_cast<std::uint8_t>(dr * spec.gt_scale);

      const int l = visible(x, y, true);
      const int dl = l < 0 ? spec.background_disparity : spec.layers[l].disparity;
      std::uint8_t* px = &s.pair.left.pixels[(static_cast<std::size_t>(y) * w + x) * 3];
      texel(spec.seed, l + 1, x - dl, y, px);
      if (spec.noise > 0) {
        for (int c = 0; c < 3; ++c) px[c] = static_cast<std::uint8_t>(std::clamp(px[c] + noise(rng), 0, 255));
      }
    }
  }
  return s;
}

SceneSpec tsukuba_like_spec(std::uint64_t seed) {
  SceneSpec spec;
  spec.width = 384;
  spec.height = 288;
  spec.background_disparity = 11;
  spec.seed = seed;
  spec.noise = 6;
  spec.layers = {
      {20, 30, 150, 200, 15},
      {200, 40, 330, 150, 19},
      {90, 150, 260, 270, 23},
      {260, 180, 350, 260, 27},
      {40, 220, 110, 280, 25},
  };
  return spec;
}

SceneFiles write_scene_files(const std::string& dir, const SceneSpec& spec) {
  std::filesystem::create_directories(dir);
  const Scene s = make_scene(spec);
  SceneFiles f{dir + "/left.ppm", dir + "/right.ppm", dir + "/gt.pgm"};
  write_ppm(s.pair.left, f.left);
  write_ppm(s.pair.right, f.right);
  write_pgm(s.ground_truth, f.gt);
  return f;
}

}  // namespace gazecut::testing
