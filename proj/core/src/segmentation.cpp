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

#include "s3aug/segmentation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>
#include <vector>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

[[noreturn]] void seg_fail(const std::string& message) {
  throw Error(Stage::kSegmentation, message);
}

}  // namespace

IdRemapTable::IdRemapTable(std::map<int, int> mapping) : mapping_(std::move(mapping)) {
  for (const auto& [native, canonical] : mapping_) {
    if (canonical < 0 || canonical > kMaxCategoryId) {
      seg_fail("id remap: native " + std::to_string(native) + " maps to " +
               std::to_string(canonical) + ", outside 0.." + std::to_string(kMaxCategoryId));
    }
  }
}

IdRemapTable IdRemapTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open id remap table " + path.string());
  std::map<int, int> mapping;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    int native, canonical;
    if (!(fields >> native)) continue;
    if (!(fields >> canonical)) {
      seg_fail("id remap line " + std::to_string(line_no) + ": expected two ids");
    }
    if (!mapping.emplace(native, canonical).second) {
      seg_fail("id remap: duplicate native id " + std::to_string(native));
    }
  }
  return IdRemapTable(std::move(mapping));
}

void IdRemapTable::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw Error(Stage::kIo, "cannot write " + path.string());
  for (const auto& [native, canonical] : mapping_) out << native << ' ' << canonical << '\n';
}

int IdRemapTable::remap(int native_id) const {
  auto it = mapping_.find(native_id);
  if (it == mapping_.end()) {
    seg_fail("id remap: native id " + std::to_string(native_id) + " not covered");
  }
  return it->second;
}

IdImage IdRemapTable::apply(const IdImage& native) const {
  IdImage out = native;
  for (auto& id : out.values()) id = static_cast<std::uint16_t>(remap(id));
  return out;
}

LabelVideo IdRemapTable::apply(const LabelVideo& native) const {
  LabelVideo out = native;
  for (auto& id : out.values()) id = static_cast<std::uint16_t>(remap(id));
  return out;
}

SegmentedVideo SegmentationBackend::segment_clip(const VideoClip& clip) const {
  SegmentedVideo out{LabelVideo(clip.num_frames(), clip.height(), clip.width()),
                     InstanceVideo(clip.num_frames(), clip.height(), clip.width())};
  for (std::size_t t = 0; t < clip.num_frames(); ++t) {
    FrameSegmentation seg;
    try {
      seg = segment_frame(t, clip.frame(t));
    } catch (const std::exception& e) {
      seg_fail("backend '" + name() + "' failed on frame " + std::to_string(t) + ": " + e.what());
    }
    const std::array<std::size_t, 2> expected{clip.height(), clip.width()};
    if (seg.labels.shape() != expected || seg.instances.shape() != expected) {
      seg_fail("backend '" + name() + "' returned label " + shape_string(seg.labels.shape()) +
               " / instance " + shape_string(seg.instances.shape()) + " for frame " +
               std::to_string(t) + ", expected " + shape_string(expected));
    }
    out.labels.set_frame(t, seg.labels);
    out.instances.set_frame(t, seg.instances);
  }
  return out;
}

SegmentedVideo segment_video(const SegmentationBackend& backend, const VideoClip& clip) {
  SegmentedVideo out = backend.segment_clip(clip);
  const auto errors = validate_aligned(clip, out.labels, out.instances);
  if (!errors.empty()) {
    std::string message = "backend '" + backend.name() + "' produced invalid output";
    for (const auto& e : errors) message += "; " + e;
    seg_fail(message);
  }
  return out;
}

PrecomputedSegmentation::PrecomputedSegmentation(LabelVideo labels, InstanceVideo instances,
                                                 std::optional<IdRemapTable> remap)
    : labels_(remap ? remap->apply(labels) : std::move(labels)),
      instances_(std::move(instances)) {
  if (labels_.shape() != instances_.shape()) {
    seg_fail("precomputed labels " + shape_string(labels_.shape()) + " and instances " +
             shape_string(instances_.shape()) + " differ in shape");
  }
}

FrameSegmentation PrecomputedSegmentation::segment_frame(std::size_t t, const Frame&) const {
  if (t >= labels_.num_frames()) {
    seg_fail("precomputed segmentation has " + std::to_string(labels_.num_frames()) +
             " frames, frame " + std::to_string(t) + " requested");
  }
  return {labels_.frame(t), instances_.frame(t)};
}

PaletteSegmentation::PaletteSegmentation(Palette palette, const CategoryTable& table)
    : palette_(std::move(palette)) {
  for (int id : thing_ids(table)) is_thing_[id] = true;
}

FrameSegmentation PaletteSegmentation::segment_frame(std::size_t, const Frame& frame) const {
  const std::size_t h = frame.dim(1), w = frame.dim(2);
  IdImage labels({h, w});
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) {
      Rgb8 rgb;
      for (std::size_t c = 0; c < 3; ++c) {
        rgb[c] = static_cast<std::uint8_t>(
            std::lround(std::clamp(frame(c, y, x), 0.0f, 1.0f) * 255.0f));
      }
      labels(y, x) = static_cast<std::uint16_t>(palette_.nearest(rgb));
    }
  }
  IdImage instances = label_instances(labels, is_thing_);
  return {std::move(labels), std::move(instances)};
}

IdImage label_instances(const IdImage& labels, const std::array<bool, kNumCategoryIds>& is_thing) {
  const std::size_t h = labels.dim(0), w = labels.dim(1);
  IdImage instances({h, w}, 0);
  std::uint16_t next = 0;
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  for (std::size_t y0 = 0; y0 < h; ++y0) {
    for (std::size_t x0 = 0; x0 < w; ++x0) {
      const auto id = labels(y0, x0);
      if (id >= kNumCategoryIds || !is_thing[id] || instances(y0, x0) != 0) continue;
      ++next;
      instances(y0, x0) = next;
      stack.assign(1, {y0, x0});
      while (!stack.empty()) {
        const auto [y, x] = stack.back();
        stack.pop_back();
        auto visit = [&](std::size_t ny, std::size_t nx) {
          if (labels(ny, nx) == id && instances(ny, nx) == 0) {
            instances(ny, nx) = next;
            stack.emplace_back(ny, nx);
          }
        };
        if (y > 0) visit(y - 1, x);
        if (y + 1 < h) visit(y + 1, x);
        if (x > 0) visit(y, x - 1);
        if (x + 1 < w) visit(y, x + 1);
      }
    }
  }
  return instances;
}

}  // namespace s3aug
