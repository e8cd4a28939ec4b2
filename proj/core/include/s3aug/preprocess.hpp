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

#ifndef S3AUG_PREPROCESS_HPP_
#define S3AUG_PREPROCESS_HPP_

#include <cstddef>
#include <vector>

#include "s3aug/config.hpp"
#include "s3aug/rng.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

inline constexpr std::size_t kMultiviewShortSide = 256;
inline constexpr std::size_t kMultiviewClips = 10;
inline constexpr std::size_t kMultiviewCrops = 3;

// Bilinear resize with half-pixel centres and edge clamping.
Frame resize_bilinear(const Frame& frame, std::size_t out_height, std::size_t out_width);

// Output size after scaling the shorter side to `short_side`, keeping the
// aspect ratio (longer side rounded to nearest).
std::pair<std::size_t, std::size_t> short_side_size(std::size_t height, std::size_t width,
                                                     std::size_t short_side);

// `count` sorted frame indices into a video of `num_frames` frames: without
// replacement when num_frames >= count, otherwise with replacement.
std::vector<std::size_t> sample_frame_indices(std::size_t num_frames, std::size_t count,
                                              Rng& rng);

// Training clip: sampled indices, short side resized to a uniform draw from
// cfg.short_side_min..cfg.short_side_max, random crop_size x crop_size crop.
VideoClip sample_training_clip(const VideoClip& video, const S3AugConfig& cfg, Rng& rng);

// Where a multiview crop starts along each axis.
struct ViewSpec {
  std::vector<std::size_t> frame_indices;
  std::size_t top = 0;
  std::size_t left = 0;
};

// 10 sampled clips x 3 crops at {start, centre, end} of the longer axis after
// resizing the short side to 256; the shorter axis is centre-cropped.
std::vector<ViewSpec> multiview_specs(const VideoClip& video, Rng& rng,
                                      std::size_t frames_per_clip = 16,
                                      std::size_t crop_size = 224);

std::vector<VideoClip> multiview_views(const VideoClip& video, Rng& rng,
                                       std::size_t frames_per_clip = 16,
                                       std::size_t crop_size = 224);

}  // namespace s3aug

#endif  // S3AUG_PREPROCESS_HPP_
