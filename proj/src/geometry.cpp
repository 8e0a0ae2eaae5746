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

#include "geometry.hpp"

#include <algorithm>
#include <sstream>

namespace gazecut {

namespace {

bool in_columns(int x, int width) { return x >= 0 && x < width; }

[[noreturn]] void config_error(const std::string& msg) {
  throw Error(ErrorKind::config, "cuboid: " + msg);
}

}  // namespace

bool Offsets::consistent(int image_width) const {
  return rw == -offset1 - offset3 && lw == image_width - 1 - offset1 + offset3 &&
         h == -offset2;
}

Offsets Offsets::from_frame(int image_width, int lw, int rw, int h) {
  const int sum = lw + rw - (image_width - 1);
  if (sum % 2 != 0) {
    config_error("lw_offset + rw_offset must have the parity of width - 1");
  }
  Offsets o;
  o.lw = lw;
  o.rw = rw;
  o.h = h;
  o.offset1 = -sum / 2;
  o.offset3 = -(rw + o.offset1);
  o.offset2 = -h;
  return o;
}

bool Cuboid::inside_image() const {
  const int w = image_width;
  for (int g : {gaze_min, gaze_min + gaze_extent - 1}) {
    for (int d : {depth_min, depth_min + depth_extent - 1}) {
      if (!in_columns(g + d, w) || !in_columns(w - 1 + g - d, w)) return false;
    }
  }
  return true;
}

void Cuboid::validate() const {
  if (image_width < 1 || image_height < 1) config_error("empty image");
  if (gaze_extent < 1 || row_extent < 1 || depth_extent < 1) config_error("empty extent");
  if (row_min < 0 || row_min + row_extent > image_height) config_error("rows outside image");
  const int w = image_width;
  const int g_max = gaze_min + gaze_extent - 1;
  if (2 * gaze_min <= -w || 2 * g_max >= w) config_error("gaze range outside (-w/2, w/2)");
  const int d_max = depth_min + depth_extent - 1;
  if (depth_min < 0 || 2 * d_max >= w) config_error("depth range outside [0, w/2)");
  if (!offsets.consistent(w)) {
    std::ostringstream os;
    os << "inconsistent offsets (offset1=" << offsets.offset1 << " offset2=" << offsets.offset2
       << " offset3=" << offsets.offset3 << " lw=" << offsets.lw << " rw=" << offsets.rw
       << " h=" << offsets.h << ")";
    config_error(os.str());
  }
}

void Cuboid::center_offsets() {
  Offsets o;
  o.offset1 = -(gaze_min + gaze_extent / 2);
  o.offset2 = -(row_min + row_extent / 2);
  o.offset3 = -(depth_min + depth_extent / 2);
  o.rw = -o.offset1 - o.offset3;
  o.lw = image_width - 1 - o.offset1 + o.offset3;
  o.h = -o.offset2;
  offsets = o;
}

std::optional<GazeDepth> cross_from_pixels(int x_left, int x_right, int y, int width) {
  const int sum = x_right + x_left - (width - 1);
  if (sum % 2 != 0) return std::nullopt;
  const int d2 = x_right - x_left + (width - 1);
  const int d = d2 / 2;
  if (d < 0 || 2 * d >= width) return std::nullopt;
  return GazeDepth{sum / 2, d, y};
}

CrossPoint pixels_from_gaze_depth(const GazeDepth& coord, int width) {
  const CrossPoint p{width - 1 + coord.gaze - coord.depth, coord.gaze + coord.depth, coord.y};
  if (!in_columns(p.x_left, width) || !in_columns(p.x_right, width)) {
    std::ostringstream os;
    os << "gaze/depth (" << coord.gaze << ", " << coord.depth << ") leaves the image of width "
       << width;
    throw Error(ErrorKind::geometry, os.str());
  }
  return p;
}

Whs whs_from_disparity(int x, int y, int dis, const Cuboid& cuboid) {
  const Offsets& o = cuboid.offsets;
  return {x - halve_away(o.lw + o.rw) + halve_away(dis), y - o.h,
          halve_away(o.lw - o.rw) - halve_away(dis)};
}

PixelDisparity disparity_from_whs(const Whs& whs, const Cuboid& cuboid) {
  const Offsets& o = cuboid.offsets;
  const PixelDisparity p{o.rw + whs.s + whs.w, o.h + whs.h, o.lw - o.rw - 2 * whs.s};
  const int w = cuboid.image_width;
  if (!in_columns(p.x, w) || !in_columns(p.x + p.dis, w) || p.y < 0 ||
      p.y >= cuboid.image_height) {
    std::ostringstream os;
    os << "(W,H,S)=(" << whs.w << "," << whs.h << "," << whs.s << ") leaves the images";
    throw Error(ErrorKind::geometry, os.str());
  }
  return p;
}

GazeDepth gaze_depth_from_whs(const Whs& whs, const Cuboid& cuboid) {
  const Offsets& o = cuboid.offsets;
  return {whs.w - o.offset1, whs.s - o.offset3, whs.h - o.offset2};
}

Whs whs_from_gaze_depth(const GazeDepth& coord, const Cuboid& cuboid) {
  const Offsets& o = cuboid.offsets;
  return {coord.gaze + o.offset1, coord.y + o.offset2, coord.depth + o.offset3};
}

int depth_of_disparity(int dis, int width) { return halve_away(width - 1 - dis); }

Cuboid cuboid_from_disparity_range(int width, int height, int dis_min, int dis_max, int margin,
                                   int gaze_extent) {
  if (width < 1 || height < 1) config_error("empty image");
  if (dis_min < 0 || dis_min > dis_max || dis_max >= width) {
    config_error("disparity range must satisfy 0 <= dis_min <= dis_max < width");
  }
  if (margin < 0) config_error("negative margin");
  if (gaze_extent < 0) config_error("negative gaze extent");

  // Largest legal depth number: 2d < w.
  const int d_limit = (width - 1) / 2;
  int d_lo = depth_of_disparity(dis_max, width) - margin;
  int d_hi = depth_of_disparity(dis_min, width) + margin;
  if (d_hi - d_lo > d_limit) config_error("label band wider than the depth axis");
  if (d_hi > d_limit) {
    d_lo -= d_hi - d_limit;
    d_hi = d_limit;
  }
  if (d_lo < 0) {
    d_hi -= d_lo;
    d_lo = 0;
  }

  Cuboid c;
  c.image_width = width;
  c.image_height = height;
  c.row_min = 0;
  c.row_extent = height;
  c.depth_min = d_lo;
  c.depth_extent = d_hi - d_lo + 1;

  // Gaze lines with -w/2 < g < w/2.
  const int g_floor = -((width - 1) / 2);
  const int g_ceil = (width - 1) / 2;
  if (gaze_extent == 0) {
    const int lo = std::max({-d_lo, d_hi - (width - 1), g_floor});
    const int hi = std::min({d_lo, width - 1 - d_hi, g_ceil});
    if (hi < lo) config_error("no gaze line keeps the label band inside the image");
    c.gaze_min = lo;
    c.gaze_extent = hi - lo + 1;
  } else {
    c.gaze_min = -(gaze_extent / 2);
    c.gaze_extent = gaze_extent;
    if (c.gaze_min < g_floor || c.gaze_min + gaze_extent - 1 > g_ceil) {
      config_error("gaze extent exceeds the image");
    }
  }
  c.center_offsets();
  c.validate();
  return c;
}

}  // namespace gazecut
