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

#include "imaging.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "energy.hpp"

namespace gazecut {

namespace {

[[noreturn]] void format_error(const std::string& msg) {
  throw Error(ErrorKind::format, "netpbm: " + msg);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::io, "cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::filesystem::path& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::io, "short write to " + path.string());
}

class Cursor {
 public:
  explicit Cursor(const std::string& bytes) : bytes_(bytes) {}

  void skip_space_and_comments() {
    while (pos_ < bytes_.size()) {
      const char c = bytes_[pos_];
      if (c == '#') {
        while (pos_ < bytes_.size() && bytes_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  int number() {
    skip_space_and_comments();
    if (pos_ >= bytes_.size() || !std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      format_error("expected an unsigned integer");
    }
    long long v = 0;
    while (pos_ < bytes_.size() && std::isdigit(static_cast<unsigned char>(bytes_[pos_]))) {
      v = v * 10 + (bytes_[pos_++] - '0');
      if (v > (1 << 24)) format_error("value too large");
    }
    return static_cast<int>(v);
  }

  /// Consumes the single whitespace byte that ends a binary header.
  void end_header() {
    if (pos_ >= bytes_.size() || !std::isspace(static_cast<unsigned char>(bytes_[pos_]))) {
      format_error("missing whitespace after header");
    }
    ++pos_;
  }

  std::string_view rest() const { return std::string_view(bytes_).substr(pos_); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n) { pos_ += n; }

 private:
  const std::string& bytes_;
  std::size_t pos_ = 0;
};

struct Header {
  bool binary = false;
  int width = 0;
  int height = 0;
  int maxval = 0;
};

Header parse_header(Cursor& cur, const std::string& bytes, char ascii_magic, char binary_magic) {
  if (bytes.size() < 2 || bytes[0] != 'P') format_error("missing magic number");
  Header h;
  if (bytes[1] == binary_magic) {
    h.binary = true;
  } else if (bytes[1] != ascii_magic) {
    format_error(std::string("unexpected magic P") + bytes[1]);
  }
  cur.advance(2);
  h.width = cur.number();
  h.height = cur.number();
  h.maxval = cur.number();
  if (h.width < 1 || h.height < 1) format_error("empty image");
  if (h.maxval < 1 || h.maxval > 255) format_error("maxval must be in [1, 255]");
  return h;
}

std::vector<std::uint8_t> read_samples(Cursor& cur, const Header& h, std::size_t count) {
  std::vector<std::uint8_t> out(count);
  if (h.binary) {
    cur.end_header();
    const std::string_view payload = cur.rest();
    if (payload.size() < count) format_error("truncated payload");
    for (std::size_t i = 0; i < count; ++i) {
      out[i] = static_cast<std::uint8_t>(payload[i]);
      if (out[i] > h.maxval) format_error("sample exceeds maxval");
    }
    return out;
  }
  for (std::size_t i = 0; i < count; ++i) {
    cur.skip_space_and_comments();
    if (cur.rest().empty()) format_error("truncated payload");
    const int v = cur.number();
    if (v > h.maxval) format_error("sample exceeds maxval");
    out[i] = static_cast<std::uint8_t>(v);
  }
  return out;
}

std::string header_text(char magic, int w, int h, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << 'P' << magic << '\n';
  for (const auto& c : comments) os << "# " << c << '\n';
  os << w << ' ' << h << "\n255\n";
  return os.str();
}

}  // namespace

int GroundTruthDepth::valid_count() const {
  int n = 0;
  for (int v : label) n += v >= 0;
  return n;
}

RgbImage parse_ppm(const std::string& bytes) {
  Cursor cur(bytes);
  const Header h = parse_header(cur, bytes, '3', '6');
  if (h.maxval != 255) format_error("pixmap maxval must be 255");
  RgbImage img;
  img.width = h.width;
  img.height = h.height;
  img.pixels = read_samples(cur, h, static_cast<std::size_t>(h.width) * h.height * 3);
  return img;
}

GrayImage parse_pgm(const std::string& bytes) {
  Cursor cur(bytes);
  const Header h = parse_header(cur, bytes, '2', '5');
  GrayImage img;
  img.width = h.width;
  img.height = h.height;
  img.pixels = read_samples(cur, h, static_cast<std::size_t>(h.width) * h.height);
  return img;
}

RgbImage load_ppm(const std::filesystem::path& path) {
  try {
    return parse_ppm(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::format) throw;
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

GrayImage load_pgm(const std::filesystem::path& path) {
  try {
    return parse_pgm(read_file(path));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::format) throw;
    throw Error(ErrorKind::format, path.string() + ": " + e.what());
  }
}

std::string encode_ppm(const RgbImage& image, const std::vector<std::string>& comments) {
  std::string out = header_text('6', image.width, image.height, comments);
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

std::string encode_pgm(const GrayImage& image, const std::vector<std::string>& comments) {
  std::string out = header_text('5', image.width, image.height, comments);
  out.append(image.pixels.begin(), image.pixels.end());
  return out;
}

std::string encode_pgm_ascii(const GrayImage& image) {
  std::ostringstream os;
  os << "P2\n" << image.width << ' ' << image.height << "\n255\n";
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      os << int{image.at(x, y)} << (x + 1 < image.width ? ' ' : '\n');
    }
  }
  return os.str();
}

void write_ppm(const RgbImage& image, const std::filesystem::path& path,
               const std::vector<std::string>& comments) {
  write_file(path, encode_ppm(image, comments));
}

void write_pgm(const GrayImage& image, const std::filesystem::path& path,
               const std::vector<std::string>& comments) {
  write_file(path, encode_pgm(image, comments));
}

StereoPair load_stereo_pair(const std::filesystem::path& left, const std::filesystem::path& right) {
  StereoPair pair{load_ppm(left), load_ppm(right)};
  if (pair.left.width != pair.right.width || pair.left.height != pair.right.height) {
    throw Error(ErrorKind::format, "left and right images differ in size");
  }
  return pair;
}

GroundTruthDepth ground_truth_to_depth(const GrayImage& gt, int scale, const Cuboid& cuboid,
                                       const MaskRule& mask) {
  if (scale < 1) throw Error(ErrorKind::config, "ground-truth scale must be positive");
  if (gt.width != cuboid.image_width || gt.height != cuboid.image_height) {
    throw Error(ErrorKind::config, "ground truth does not match the image dimensions");
  }
  GroundTruthDepth out;
  out.width = cuboid.gaze_extent;
  out.height = cuboid.row_extent;
  out.label.assign(static_cast<std::size_t>(out.width) * out.height, -1);
  for (int y = 0; y < gt.height; ++y) {
    for (int x = 0; x < gt.width; ++x) {
      const int value = gt.at(x, y);
      if (value == 0) continue;
      if (x < mask.border || y < mask.border || x >= gt.width - mask.border ||
          y >= gt.height - mask.border) {
        continue;
      }
      // value / scale rounded half away from zero
      const int dis = (2 * value + scale) / (2 * scale);
      const GazeDepth gd = gaze_depth_from_whs(whs_from_disparity(x, y, dis, cuboid), cuboid);
      const int sx = gd.gaze - cuboid.gaze_min;
      const int sy = gd.y - cuboid.row_min;
      const int k = gd.depth - cuboid.depth_min;
      if (sx < 0 || sx >= out.width || sy < 0 || sy >= out.height) continue;
      if (k < 0 || k >= cuboid.labels()) {
        ++out.out_of_range;
        continue;
      }
      int& slot = out.label[out.index(sx, sy)];
      if (slot >= 0) {
        ++out.collisions;
        if (k >= slot) continue;
      }
      slot = k;
    }
  }
  return out;
}

GrayImage render_disparity(const Labeling& labeling, const Cuboid& cuboid, int scale) {
  if (scale < 1) throw Error(ErrorKind::config, "disparity scale must be positive");
  if (labeling.width != cuboid.gaze_extent || labeling.height != cuboid.row_extent) {
    throw Error(ErrorKind::config, "labeling does not cover the cuboid");
  }
  GrayImage img;
  img.width = cuboid.image_width;
  img.height = cuboid.image_height;
  img.pixels.assign(static_cast<std::size_t>(img.width) * img.height, 0);
  // Nearest label owns the pixel; track the owner's label.
  std::vector<int> owner(img.pixels.size(), -1);
  for (int sy = 0; sy < labeling.height; ++sy) {
    for (int sx = 0; sx < labeling.width; ++sx) {
      const int k = labeling.at(sx, sy);
      const Whs whs = whs_from_gaze_depth(
          {cuboid.gaze_min + sx, cuboid.depth_min + k, cuboid.row_min + sy}, cuboid);
      PixelDisparity p;
      try {
        p = disparity_from_whs(whs, cuboid);
      } catch (const Error&) {
        continue;  // cross point outside the images
      }
      const long long value = static_cast<long long>(p.dis) * scale;
      if (value < 0 || value > 255) {
        throw Error(ErrorKind::config,
                    "disparity " + std::to_string(p.dis) + " times scale " +
                        std::to_string(scale) + " does not fit in 8 bits");
      }
      const std::size_t idx = static_cast<std::size_t>(p.y) * img.width + p.x;
      if (owner[idx] >= 0 && owner[idx] <= k) continue;
      owner[idx] = k;
      img.pixels[idx] = static_cast<std::uint8_t>(value);
    }
  }
  return img;
}

void write_disparity_image(const Labeling& labeling, const Cuboid& cuboid, int scale,
                           const std::filesystem::path& path,
                           const std::vector<std::string>& comments) {
  write_pgm(render_disparity(labeling, cuboid, scale), path, comments);
}

std::string encode_labeling(const Labeling& labeling, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const std::string& c : comments) os << "# " << c << '\n';
  os << "labeling " << labeling.width << ' ' << labeling.height << ' ' << labeling.labels << '\n';
  for (int y = 0; y < labeling.height; ++y) {
    for (int x = 0; x < labeling.width; ++x) {
      os << labeling.at(x, y) << (x + 1 < labeling.width ? ' ' : '\n');
    }
  }
  return os.str();
}

Labeling parse_labeling(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line) && (line.empty() || line[0] == '#')) {
  }
  std::istringstream head(line);
  std::string tag;
  Labeling out;
  if (!(head >> tag >> out.width >> out.height >> out.labels) || tag != "labeling" ||
      out.width < 1 || out.height < 1 || out.labels < 1) {
    throw Error(ErrorKind::format, "labeling: bad header");
  }
  out.label.resize(static_cast<std::size_t>(out.width) * out.height);
  for (int& v : out.label) {
    if (!(in >> v)) throw Error(ErrorKind::format, "labeling: truncated body");
    if (v < -1 || v >= out.labels) throw Error(ErrorKind::format, "labeling: label out of range");
  }
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  write_file(path, text);
}

void write_labeling(const Labeling& labeling, const std::filesystem::path& path,
                    const std::vector<std::string>& comments) {
  write_file(path, encode_labeling(labeling, comments));
}

Labeling ground_truth_labeling(const GroundTruthDepth& gt, int labels) {
  Labeling out(gt.width, gt.height, labels);
  out.label = gt.label;
  return out;
}

}  // namespace gazecut
