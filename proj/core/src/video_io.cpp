// Copyright 2026 The S3Aug Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "s3aug/video_io.hpp"

#include <png.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <regex>

#include "s3aug/error.hpp"

namespace s3aug {
namespace fs = std::filesystem;

namespace {

[[noreturn]] void io_fail(const std::string& message) { throw Error(Stage::kIo, message); }

struct RawImage {
  std::uint32_t width = 0;
  std::uint32_t height = 0;
  int channels = 0;
  int bit_depth = 0;
  std::vector<std::uint8_t> bytes;  // row-major, PNG byte order
};

void on_png_warning(png_structp, png_const_charp) {}

// Only trivially destructible locals live across setjmp in these two helpers.
bool write_png_raw(const char* path, const std::uint8_t* bytes, std::uint32_t width,
                   std::uint32_t height, int bit_depth, int color_type, std::size_t row_bytes,
                   png_bytep* rows) {
  FILE* fp = std::fopen(path, "wb");
  if (!fp) return false;
  png_structp png = png_create_write_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                            on_png_warning);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_write_struct(&png, &info);
    std::fclose(fp);
    return false;
  }
  png_init_io(png, fp);
  png_set_compression_level(png, 6);
  png_set_IHDR(png, info, width, height, bit_depth, color_type, PNG_INTERLACE_NONE,
               PNG_COMPRESSION_TYPE_DEFAULT, PNG_FILTER_TYPE_DEFAULT);
  for (std::uint32_t y = 0; y < height; ++y) {
    rows[y] = const_cast<png_bytep>(bytes + y * row_bytes);
  }
  png_set_rows(png, info, rows);
  png_write_png(png, info, PNG_TRANSFORM_IDENTITY, nullptr);
  png_destroy_write_struct(&png, &info);
  return std::fclose(fp) == 0;
}

bool read_png_raw(const char* path, RawImage* out) {
  FILE* fp = std::fopen(path, "rb");
  if (!fp) return false;
  png_structp png = png_create_read_struct(PNG_LIBPNG_VER_STRING, nullptr, nullptr,
                                           on_png_warning);
  png_infop info = png ? png_create_info_struct(png) : nullptr;
  if (!png || !info) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return false;
  }
  if (setjmp(png_jmpbuf(png))) {
    png_destroy_read_struct(&png, &info, nullptr);
    std::fclose(fp);
    return false;
  }
  png_init_io(png, fp);
  png_read_png(png, info, PNG_TRANSFORM_EXPAND | PNG_TRANSFORM_PACKING, nullptr);
  out->width = png_get_image_width(png, info);
  out->height = png_get_image_height(png, info);
  out->channels = png_get_channels(png, info);
  out->bit_depth = png_get_bit_depth(png, info);
  const std::size_t row_bytes = png_get_rowbytes(png, info);
  png_bytepp rows = png_get_rows(png, info);
  out->bytes.resize(row_bytes * out->height);
  for (std::uint32_t y = 0; y < out->height; ++y) {
    std::memcpy(out->bytes.data() + y * row_bytes, rows[y], row_bytes);
  }
  png_destroy_read_struct(&png, &info, nullptr);
  std::fclose(fp);
  return true;
}

void write_png(const fs::path& path, const std::vector<std::uint8_t>& bytes,
               std::uint32_t width, std::uint32_t height, int bit_depth, int color_type,
               std::size_t row_bytes) {
  std::vector<png_bytep> rows(height);
  if (!write_png_raw(path.c_str(), bytes.data(), width, height, bit_depth, color_type,
                     row_bytes, rows.data())) {
    io_fail("failed to write PNG " + path.string());
  }
}

RawImage read_png(const fs::path& path) {
  RawImage image;
  if (!read_png_raw(path.c_str(), &image)) io_fail("failed to read PNG " + path.string());
  return image;
}

std::uint8_t quantize(float v) {
  const float clamped = std::clamp(v, 0.0f, 1.0f);
  return static_cast<std::uint8_t>(std::lround(clamped * 255.0f));
}

// Sorted frame_NNNN.png files; numbering must run 1..N without gaps.
std::vector<fs::path> list_frames(const fs::path& dir) {
  if (!fs::is_directory(dir)) io_fail("not a frame directory: " + dir.string());
  static const std::regex pattern(R"(frame_(\d+)\.png)");
  std::vector<std::pair<long, fs::path>> numbered;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    std::smatch m;
    if (std::regex_match(name, m, pattern)) numbered.emplace_back(std::stol(m[1]), entry.path());
  }
  std::sort(numbered.begin(), numbered.end());
  if (numbered.empty()) io_fail("no frame_*.png files in " + dir.string());
  std::vector<fs::path> paths;
  for (std::size_t i = 0; i < numbered.size(); ++i) {
    if (numbered[i].first != static_cast<long>(i + 1)) {
      io_fail("frame numbering gap in " + dir.string() + " at " + frame_file_name(i));
    }
    paths.push_back(numbered[i].second);
  }
  return paths;
}

void prepare_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) io_fail("cannot create directory " + dir.string() + ": " + ec.message());
  // Stale frames from an earlier, longer clip would be picked up on load.
  static const std::regex pattern(R"(frame_\d+\.png)");
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (std::regex_match(entry.path().filename().string(), pattern)) fs::remove(entry.path());
  }
}

void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

std::uint32_t get_u32(const unsigned char* b) {
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace

std::string frame_file_name(std::size_t t) {
  char name[32];
  std::snprintf(name, sizeof(name), "frame_%04zu.png", t + 1);
  return name;
}

void write_rgb_png(const fs::path& path, const Frame& frame) {
  const std::size_t h = frame.dim(1), w = frame.dim(2);
  std::vector<std::uint8_t> bytes(h * w * 3);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      for (std::size_t c = 0; c < 3; ++c) bytes[(y * w + x) * 3 + c] = quantize(frame(c, y, x));
    }
  }
  write_png(path, bytes, static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h), 8,
            PNG_COLOR_TYPE_RGB, w * 3);
}

Frame read_rgb_png(const fs::path& path) {
  const RawImage image = read_png(path);
  if (image.bit_depth != 8) io_fail(path.string() + ": expected an 8-bit PNG");
  const std::size_t h = image.height, w = image.width, n = image.channels;
  Frame frame({3, h, w});
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      const std::uint8_t* px = image.bytes.data() + (y * w + x) * n;
      for (std::size_t c = 0; c < 3; ++c) {
        // Gray (+alpha) replicates the gray value.
        const std::uint8_t v = n >= 3 ? px[c] : px[0];
        frame(c, y, x) = v / 255.0f;
      }
    }
  }
  return frame;
}

void write_gray16_png(const fs::path& path, const IdImage& image) {
  const std::size_t h = image.dim(0), w = image.dim(1);
  std::vector<std::uint8_t> bytes(h * w * 2);
  const auto values = image.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    bytes[2 * i] = static_cast<std::uint8_t>(values[i] >> 8);
    bytes[2 * i + 1] = static_cast<std::uint8_t>(values[i] & 0xff);
  }
  write_png(path, bytes, static_cast<std::uint32_t>(w), static_cast<std::uint32_t>(h), 16,
            PNG_COLOR_TYPE_GRAY, w * 2);
}

IdImage read_gray16_png(const fs::path& path) {
  const RawImage image = read_png(path);
  if (image.channels != 1) io_fail(path.string() + ": expected a single-channel PNG");
  const std::size_t h = image.height, w = image.width;
  IdImage out({h, w});
  auto values = out.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = image.bit_depth == 16
                    ? static_cast<std::uint16_t>((image.bytes[2 * i] << 8) | image.bytes[2 * i + 1])
                    : image.bytes[i];
  }
  return out;
}

void save_clip(const fs::path& dir, const VideoClip& clip) {
  prepare_dir(dir);
  for (std::size_t t = 0; t < clip.num_frames(); ++t) {
    write_rgb_png(dir / frame_file_name(t), clip.frame(t));
  }
}

VideoClip load_clip(const fs::path& dir) {
  const auto paths = list_frames(dir);
  VideoClip clip;
  for (std::size_t t = 0; t < paths.size(); ++t) {
    const Frame frame = read_rgb_png(paths[t]);
    if (t == 0) clip = VideoClip(paths.size(), frame.dim(1), frame.dim(2));
    if (frame.dim(1) != clip.height() || frame.dim(2) != clip.width()) {
      io_fail(paths[t].string() + ": frame size differs from the first frame");
    }
    clip.set_frame(t, frame);
  }
  return clip;
}

void save_id_video(const fs::path& dir, const Tensor<std::uint16_t, 3>& ids) {
  prepare_dir(dir);
  const std::size_t h = ids.dim(1), w = ids.dim(2);
  for (std::size_t t = 0; t < ids.dim(0); ++t) {
    IdImage frame({h, w});
    std::copy_n(ids.data() + t * h * w, h * w, frame.data());
    write_gray16_png(dir / frame_file_name(t), frame);
  }
}

Tensor<std::uint16_t, 3> load_id_video(const fs::path& dir) {
  const auto paths = list_frames(dir);
  Tensor<std::uint16_t, 3> ids;
  for (std::size_t t = 0; t < paths.size(); ++t) {
    const IdImage frame = read_gray16_png(paths[t]);
    if (t == 0) ids = Tensor<std::uint16_t, 3>({paths.size(), frame.dim(0), frame.dim(1)});
    if (frame.dim(0) != ids.dim(1) || frame.dim(1) != ids.dim(2)) {
      io_fail(paths[t].string() + ": frame size differs from the first frame");
    }
    std::copy_n(frame.data(), frame.size(), ids.data() + t * frame.size());
  }
  return ids;
}

LabelVideo load_label_video(const fs::path& dir) {
  const auto ids = load_id_video(dir);
  LabelVideo labels(ids.dim(0), ids.dim(1), ids.dim(2));
  std::copy_n(ids.data(), ids.size(), labels.data());
  return labels;
}

InstanceVideo load_instance_video(const fs::path& dir) {
  const auto ids = load_id_video(dir);
  InstanceVideo instances(ids.dim(0), ids.dim(1), ids.dim(2));
  std::copy_n(ids.data(), ids.size(), instances.data());
  return instances;
}

void save_feature_map(const fs::path& path, const FeatureMap& features) {
  std::ofstream out(path, std::ios::binary);
  if (!out) io_fail("cannot open " + path.string() + " for writing");
  out.write("S3FT", 4);
  for (std::size_t axis = 0; axis < 4; ++axis) {
    put_u32(out, static_cast<std::uint32_t>(features.dim(axis)));
  }
  for (float v : features.values()) put_u32(out, std::bit_cast<std::uint32_t>(v));
  if (!out) io_fail("failed writing " + path.string());
}

FeatureMap load_feature_map(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) io_fail("cannot open " + path.string());
  std::vector<unsigned char> bytes((std::istreambuf_iterator<char>(in)),
                                   std::istreambuf_iterator<char>());
  if (bytes.size() < 20 || std::memcmp(bytes.data(), "S3FT", 4) != 0) {
    io_fail(path.string() + ": missing S3FT header");
  }
  std::array<std::size_t, 4> dims{};
  for (std::size_t axis = 0; axis < 4; ++axis) dims[axis] = get_u32(bytes.data() + 4 + 4 * axis);
  FeatureMap features(dims[0], dims[1], dims[2], dims[3]);
  if (bytes.size() != 20 + 4 * features.size()) {
    io_fail(path.string() + ": payload size does not match header dims " + shape_string(dims));
  }
  auto values = features.values();
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = std::bit_cast<float>(get_u32(bytes.data() + 20 + 4 * i));
  }
  return features;
}

VideoClip quantize_clip(const VideoClip& clip) {
  VideoClip out = clip;
  for (float& v : out.values()) v = quantize(v) / 255.0f;
  return out;
}

}  // namespace s3aug
