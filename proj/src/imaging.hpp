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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace gazecut {

struct RgbImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major RGB triples

  const std::uint8_t* at(int x, int y) const {
    return pixels.data() + (static_cast<std::size_t>(y) * width + x) * 3;
  }
};

struct GrayImage {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> pixels;  // row-major

  std::uint8_t at(int x, int y) const {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
  std::uint8_t& at(int x, int y) {
    return pixels[static_cast<std::size_t>(y) * width + x];
  }
};

struct StereoPair {
  RgbImage left;
  RgbImage right;

  int width() const { return right.width; }
  int height() const { return right.height; }
};

/// Site-grid map of ground-truth depth labels (cuboid-local, k = d - d_min).
struct GroundTruthDepth {
  int width = 0;   // gaze extent
  int height = 0;  // row extent
  std::vector<int> label;           // -1 where invalid
  int out_of_range = 0;             // valid GT pixels whose depth left the cuboid
  int collisions = 0;               // GT pixels shadowed by a nearer one on the same site

  bool valid(int g, int y) const { return label[index(g, y)] >= 0; }
  int at(int g, int y) const { return label[index(g, y)]; }
  std::size_t index(int g, int y) const {
    return static_cast<std::size_t>(y) * width + g;
  }
  int valid_count() const;
};

/// Evaluation mask options. Zero GT pixels are always excluded.
struct MaskRule {
  int border = 0;  // additionally exclude GT pixels within this many pixels of the image edge
};

RgbImage load_ppm(const std::filesystem::path& path);
GrayImage load_pgm(const std::filesystem::path& path);
RgbImage parse_ppm(const std::string& bytes);
GrayImage parse_pgm(const std::string& bytes);

/// Binary netpbm writers. Each comment line is emitted as "# <line>" after
/// the magic number.
void write_ppm(const RgbImage& image, const std::filesystem::path& path,
               const std::vector<std::string>& comments = {});
void write_pgm(const GrayImage& image, const std::filesystem::path& path,
               const std::vector<std::string>& comments = {});
std::string encode_ppm(const RgbImage& image, const std::vector<std::string>& comments = {});
std::string encode_pgm(const GrayImage& image, const std::vector<std::string>& comments = {});
std::string encode_pgm_ascii(const GrayImage& image);

StereoPair load_stereo_pair(const std::filesystem::path& left,
                            const std::filesystem::path& right);

/// Converts GT pixels (dis = value / scale, value 0 = no ground truth) into
/// per-site depth labels through the disparity -> (W,H,S) transform.
GroundTruthDepth ground_truth_to_depth(const GrayImage& gt, int scale, const Cuboid& cuboid,
                                       const MaskRule& mask = {});

struct Labeling;

/// Renders a labeling as a right-image disparity map (value = dis * scale).
/// Right-image pixels reached by no site stay 0; when several sites land on
/// one pixel the nearest wins. Throws config error if dis * scale > 255 or < 0.
GrayImage render_disparity(const Labeling& labeling, const Cuboid& cuboid, int scale);
void write_disparity_image(const Labeling& labeling, const Cuboid& cuboid, int scale,
                           const std::filesystem::path& path,
                           const std::vector<std::string>& comments = {});

/// Plain-text labeling: "# <comment>" lines, a "labeling W H M" line, then
/// one line of space-separated labels per site row. -1 marks a missing label.
std::string encode_labeling(const Labeling& labeling, const std::vector<std::string>& comments = {});
Labeling parse_labeling(const std::string& text);
void write_labeling(const Labeling& labeling, const std::filesystem::path& path,
                    const std::vector<std::string>& comments = {});

/// Ground-truth depth labels in labeling form (-1 where invalid).
Labeling ground_truth_labeling(const GroundTruthDepth& gt, int labels);

/// Writes text to a file; throws io error on failure.
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace gazecut
