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

#ifndef S3AUG_VIDEO_HPP_
#define S3AUG_VIDEO_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "s3aug/tensor.hpp"

namespace s3aug {

using LabelId = std::uint16_t;

// One RGB frame, 3 x H x W, values in [0, 1].
using Frame = Tensor<float, 3>;
// Single-frame id image, H x W.
using IdImage = Tensor<std::uint16_t, 2>;
// Boolean image stored as 0/1 bytes, H x W.
using Mask2D = Tensor<std::uint8_t, 2>;

// T x 3 x H x W clip of normalized RGB frames.
class VideoClip : public Tensor<float, 4> {
 public:
  VideoClip() = default;
  VideoClip(std::size_t frames, std::size_t height, std::size_t width, float fill = 0.0f)
      : Tensor({frames, 3, height, width}, fill) {}

  std::size_t num_frames() const { return dim(0); }
  std::size_t height() const { return dim(2); }
  std::size_t width() const { return dim(3); }

  Frame frame(std::size_t t) const;
  void set_frame(std::size_t t, const Frame& frame);
};

// T x H x W per-pixel category ids in the canonical 0..200 space.
class LabelVideo : public Tensor<std::uint16_t, 3> {
 public:
  LabelVideo() = default;
  LabelVideo(std::size_t frames, std::size_t height, std::size_t width, LabelId fill = 0)
      : Tensor({frames, height, width}, fill) {}

  std::size_t num_frames() const { return dim(0); }
  std::size_t height() const { return dim(1); }
  std::size_t width() const { return dim(2); }

  IdImage frame(std::size_t t) const;
  void set_frame(std::size_t t, const IdImage& image);
};

// T x H x W per-frame instance ids. 0 means "no instance"; other ids need not
// be contiguous and are not associated across frames.
class InstanceVideo : public Tensor<std::uint16_t, 3> {
 public:
  InstanceVideo() = default;
  InstanceVideo(std::size_t frames, std::size_t height, std::size_t width)
      : Tensor({frames, height, width}, 0) {}

  std::size_t num_frames() const { return dim(0); }
  std::size_t height() const { return dim(1); }
  std::size_t width() const { return dim(2); }

  IdImage frame(std::size_t t) const;
  void set_frame(std::size_t t, const IdImage& image);

  // Largest instance id in frame t, i.e. N(t) when ids are contiguous.
  std::uint16_t max_instance(std::size_t t) const;
};

// T x C x H x W decoder features.
class FeatureMap : public Tensor<float, 4> {
 public:
  FeatureMap() = default;
  FeatureMap(std::size_t frames, std::size_t channels, std::size_t height, std::size_t width,
             float fill = 0.0f)
      : Tensor({frames, channels, height, width}, fill) {}

  std::size_t num_frames() const { return dim(0); }
  std::size_t channels() const { return dim(1); }
  std::size_t height() const { return dim(2); }
  std::size_t width() const { return dim(3); }
};

struct ClipSample {
  VideoClip clip;
  int action_label = 0;
  std::string source_id;
};

// Diagnostics for a (clip, labels, instances) triple. Empty means aligned:
// identical T x H x W, clip values in [0, 1], label ids in 0..200.
std::vector<std::string> validate_aligned(const VideoClip& clip, const LabelVideo& labels,
                                          const InstanceVideo& instances);

// Throws Error(Stage::kValidation) listing every diagnostic.
void require_aligned(const VideoClip& clip, const LabelVideo& labels,
                     const InstanceVideo& instances);

std::vector<std::string> validate_features(const FeatureMap& features);

// Checks action_label against [0, label_count).
std::vector<std::string> validate_sample(const ClipSample& sample, int label_count);

}  // namespace s3aug

#endif  // S3AUG_VIDEO_HPP_
