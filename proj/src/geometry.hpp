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

#include <optional>

#include "common.hpp"

// Coordinate systems for rectified stereo:
//   pixel pair   (x_l, x_r, y)   one column in each image, shared row
//   gaze/depth   (g, d, y)       x_r + x_l = w-1+2g,  x_r - x_l = -(w-1)+2d
//   cuboid axes  (W, H, S)       W = g + offset1, H = y + offset2, S = d + offset3
//   disparity    (x, y, dis)     x = right-image column, dis = x_l - x_r
namespace gazecut {

struct CrossPoint {
  int x_left = 0;
  int x_right = 0;
  int y = 0;
  friend bool operator==(const CrossPoint&, const CrossPoint&) = default;
};

struct GazeDepth {
  int gaze = 0;   // -w/2 < g < w/2
  int depth = 0;  // 0 <= d < w/2
  int y = 0;
  friend bool operator==(const GazeDepth&, const GazeDepth&) = default;
};

struct Whs {
  int w = 0;  // left to right
  int h = 0;  // top to bottom
  int s = 0;  // front to back
  friend bool operator==(const Whs&, const Whs&) = default;
};

struct PixelDisparity {
  int x = 0;  // right-image column
  int y = 0;
  int dis = 0;
  friend bool operator==(const PixelDisparity&, const PixelDisparity&) = default;
};

struct Offsets {
  int offset1 = 0;
  int offset2 = 0;
  int offset3 = 0;
  int lw = 0;
  int rw = 0;
  int h = 0;
  friend bool operator==(const Offsets&, const Offsets&) = default;

  /// The six offsets agree with the gaze/depth congruences.
  bool consistent(int image_width) const;
  /// Derives offset1..3 from (lw, rw, h). Throws config error on a parity mismatch.
  static Offsets from_frame(int image_width, int lw, int rw, int h);
};

/// A box of cross points: gaze range x row range x depth-label range.
/// Sites are (g, y) pairs, labels are k = d - depth_min in [0, labels()).
struct Cuboid {
  int image_width = 0;
  int image_height = 0;
  int gaze_min = 0;
  int gaze_extent = 0;
  int row_min = 0;
  int row_extent = 0;
  int depth_min = 0;
  int depth_extent = 0;
  Offsets offsets;

  int labels() const { return depth_extent; }
  int sites() const { return gaze_extent * row_extent; }
  /// Number of 4-connected site pairs.
  long long neighbor_pairs() const {
    return static_cast<long long>(gaze_extent - 1) * row_extent +
           static_cast<long long>(gaze_extent) * (row_extent - 1);
  }

  /// Pixel pair of site (sx, sy) at label k. Columns may fall outside the
  /// image for cuboids wider than the in-image region.
  CrossPoint cross_point(int sx, int sy, int k) const {
    const int g = gaze_min + sx;
    const int d = depth_min + k;
    return {image_width - 1 + g - d, g + d, row_min + sy};
  }
  /// Disparity x_l - x_r of label k.
  int disparity_of_label(int k) const { return image_width - 1 - 2 * (depth_min + k); }

  /// Every cross point maps to in-image columns in both images.
  bool inside_image() const;
  /// Throws config error when ranges or offsets are invalid.
  void validate() const;
  /// Places the (W,H,S) origin at the cuboid center.
  void center_offsets();

  friend bool operator==(const Cuboid&, const Cuboid&) = default;
};

std::optional<GazeDepth> cross_from_pixels(int x_left, int x_right, int y, int width);

/// Throws geometry error if the pair leaves [0, width).
CrossPoint pixels_from_gaze_depth(const GazeDepth& coord, int width);

Whs whs_from_disparity(int x, int y, int dis, const Cuboid& cuboid);

/// Throws geometry error unless both x and x + dis lie in the image.
PixelDisparity disparity_from_whs(const Whs& whs, const Cuboid& cuboid);

GazeDepth gaze_depth_from_whs(const Whs& whs, const Cuboid& cuboid);
Whs whs_from_gaze_depth(const GazeDepth& coord, const Cuboid& cuboid);

/// Depth number whose cross points have disparity closest to `dis`.
int depth_of_disparity(int dis, int width);

/// Cuboid whose label axis covers [dis_min, dis_max] plus `margin` labels on
/// each side, over all image rows. With gaze_extent == 0 the gaze range is
/// trimmed so every cross point is inside both images; otherwise a centered
/// range of that many gaze lines is used.
Cuboid cuboid_from_disparity_range(int width, int height, int dis_min, int dis_max,
                                   int margin, int gaze_extent = 0);

}  // namespace gazecut
