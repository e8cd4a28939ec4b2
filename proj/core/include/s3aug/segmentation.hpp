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

#ifndef S3AUG_SEGMENTATION_HPP_
#define S3AUG_SEGMENTATION_HPP_

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "s3aug/palette.hpp"
#include "s3aug/taxonomy.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

struct FrameSegmentation {
  IdImage labels;
  IdImage instances;
};

struct SegmentedVideo {
  LabelVideo labels;
  InstanceVideo instances;
};

// Backend-native class id -> canonical id (0..200).
class IdRemapTable {
 public:
  IdRemapTable() = default;
  explicit IdRemapTable(std::map<int, int> mapping);

  // Two-column text: "native_id canonical_id" per line, '#' comments allowed.
  static IdRemapTable load(const std::filesystem::path& path);
  void save(const std::filesystem::path& path) const;

  const std::map<int, int>& mapping() const { return mapping_; }

  // Throws Error(Stage::kSegmentation) on a native id the table does not cover.
  int remap(int native_id) const;
  IdImage apply(const IdImage& native) const;
  LabelVideo apply(const LabelVideo& native) const;

 private:
  std::map<int, int> mapping_;
};

class SegmentationBackend {
 public:
  virtual ~SegmentationBackend() = default;

  virtual std::string name() const = 0;

  // Whether segment_frame may be called concurrently.
  virtual bool reentrant() const { return true; }

  // Segments frame t (3 x H x W) of the clip being processed.
  virtual FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const = 0;

  // Whole-clip entry point. The default applies segment_frame frame by frame;
  // backends that work on directories override it.
  virtual SegmentedVideo segment_clip(const VideoClip& clip) const;
};

// Frame-wise segmentation with shape checks. Errors name the failing frame
// and are raised as Error(Stage::kSegmentation); the result passes
// validate_aligned.
SegmentedVideo segment_video(const SegmentationBackend& backend, const VideoClip& clip);

// Replays stored label / instance videos, optionally through a remap table.
class PrecomputedSegmentation final : public SegmentationBackend {
 public:
  PrecomputedSegmentation(LabelVideo labels, InstanceVideo instances,
                          std::optional<IdRemapTable> remap = std::nullopt);

  std::string name() const override { return "precomputed"; }
  FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const override;

 private:
  LabelVideo labels_;
  InstanceVideo instances_;
};

// Decodes colour-coded frames (such as synthetic scenes) with a palette:
// label = nearest palette colour, instances = 4-connected components of
// thing pixels numbered 1.. in raster order of first appearance.
class PaletteSegmentation final : public SegmentationBackend {
 public:
  PaletteSegmentation(Palette palette, const CategoryTable& table);

  std::string name() const override { return "palette"; }
  FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const override;

 private:
  Palette palette_;
  std::array<bool, kNumCategoryIds> is_thing_{};
};

// 4-connected components of pixels where `labels` is a thing id, numbered in
// raster order; pixels of different ids never join.
IdImage label_instances(const IdImage& labels, const std::array<bool, kNumCategoryIds>& is_thing);

}  // namespace s3aug

#endif  // S3AUG_SEGMENTATION_HPP_
