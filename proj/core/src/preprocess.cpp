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

#include "s3aug/preprocess.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

Frame crop(const Frame& frame, std::size_t top, std::size_t left, std::size_t size) {
  Frame out({3, size, size});
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t y = 0; y < size; ++y) {
      std::copy_n(&frame(c, top + y, left), size, &out(c, y, 0));
    }
  }
  return out;
}

void require_frames(const VideoClip& video) {
  if (video.num_frames() == 0 || video.height() == 0 || video.width() == 0) {
    throw Error(Stage::kInput, "video has no frames");
  }
}

}  // namespace

Frame resize_bilinear(const Frame& frame, std::size_t out_height, std::size_t out_width) {
  const std::size_t in_h = frame.dim(1), in_w = frame.dim(2);
  Frame out({3, out_height, out_width});
  const double sy = static_cast<double>(in_h) / out_height;
  const double sx = static_cast<double>(in_w) / out_width;

  std::vector<std::size_t> x0(out_width), x1(out_width);
  std::vector<float> fx(out_width);
  for (std::size_t x = 0; x < out_width; ++x) {
    const double src = std::clamp((x + 0.5) * sx - 0.5, 0.0, static_cast<double>(in_w - 1));
    x0[x] = static_cast<std::size_t>(src);
    x1[x] = std::min(x0[x] + 1, in_w - 1);
    fx[x] = static_cast<float>(src - x0[x]);
  }
  for (std::size_t y = 0; y < out_height; ++y) {
    const double src = std::clamp((y + 0.5) * sy - 0.5, 0.0, static_cast<double>(in_h - 1));
    const auto y0 = static_cast<std::size_t>(src);
    const std::size_t y1 = std::min(y0 + 1, in_h - 1);
    const auto fy = static_cast<float>(src - y0);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t x = 0; x < out_width; ++x) {
        const float top = frame(c, y0, x0[x]) * (1 - fx[x]) + frame(c, y0, x1[x]) * fx[x];
        const float bottom = frame(c, y1, x0[x]) * (1 - fx[x]) + frame(c, y1, x1[x]) * fx[x];
        out(c, y, x) = top * (1 - fy) + bottom * fy;
      }
    }
  }
  return out;
}

std::pair<std::size_t, std::size_t> short_side_size(std::size_t height, std::size_t width,
                                                     std::size_t short_side) {
  if (height <= width) {
    const auto w = static_cast<std::size_t>(
        std::lround(static_cast<double>(width) * short_side / height));
    return {short_side, std::max(w, short_side)};
  }
  const auto h = static_cast<std::size_t>(
      std::lround(static_cast<double>(height) * short_side / width));
  return {std::max(h, short_side), short_side};
}

std::vector<std::size_t> sample_frame_indices(std::size_t num_frames, std::size_t count,
                                              Rng& rng) {
  if (num_frames == 0) throw Error(Stage::kInput, "video has no frames");
  std::vector<std::size_t> indices;
  if (num_frames >= count) {
    // Partial Fisher-Yates: the first `count` slots are a uniform subset.
    std::vector<std::size_t> pool(num_frames);
    std::iota(pool.begin(), pool.end(), std::size_t{0});
    for (std::size_t i = 0; i < count; ++i) {
      std::swap(pool[i], pool[i + rng.uniform_index(num_frames - i)]);
    }
    indices.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(count));
  } else {
    for (std::size_t i = 0; i < count; ++i) indices.push_back(rng.uniform_index(num_frames));
  }
  std::sort(indices.begin(), indices.end());
  return indices;
}

VideoClip sample_training_clip(const VideoClip& video, const S3AugConfig& cfg, Rng& rng) {
  require_frames(video);
  const auto errors = cfg.validate();
  if (!errors.empty()) throw Error(Stage::kConfig, errors.front());

  const auto indices = sample_frame_indices(video.num_frames(), cfg.frames_per_clip, rng);
  const auto short_side = static_cast<std::size_t>(rng.uniform_int(
      static_cast<std::int64_t>(cfg.short_side_min), static_cast<std::int64_t>(cfg.short_side_max)));
  const auto [rh, rw] = short_side_size(video.height(), video.width(), short_side);
  const std::size_t top = rng.uniform_index(rh - cfg.crop_size + 1);
  const std::size_t left = rng.uniform_index(rw - cfg.crop_size + 1);

  VideoClip clip(indices.size(), cfg.crop_size, cfg.crop_size);
  std::map<std::size_t, Frame> cache;
  for (std::size_t i = 0; i < indices.size(); ++i) {
    auto it = cache.find(indices[i]);
    if (it == cache.end()) {
      it = cache.emplace(indices[i], crop(resize_bilinear(video.frame(indices[i]), rh, rw), top,
                                          left, cfg.crop_size))
               .first;
    }
    clip.set_frame(i, it->second);
  }
  return clip;
}

std::vector<ViewSpec> multiview_specs(const VideoClip& video, Rng& rng,
                                      std::size_t frames_per_clip, std::size_t crop_size) {
  require_frames(video);
  if (crop_size > kMultiviewShortSide) {
    throw Error(Stage::kConfig, "crop size exceeds the multiview short side");
  }
  const auto [rh, rw] = short_side_size(video.height(), video.width(), kMultiviewShortSide);
  std::vector<ViewSpec> specs;
  for (std::size_t clip = 0; clip < kMultiviewClips; ++clip) {
    const auto indices = sample_frame_indices(video.num_frames(), frames_per_clip, rng);
    for (std::size_t k = 0; k < kMultiviewCrops; ++k) {
      ViewSpec spec{indices, (rh - crop_size) / 2, (rw - crop_size) / 2};
      // start, centre, end along the longer axis
      if (rw >= rh) {
        spec.left = (rw - crop_size) * k / 2;
      } else {
        spec.top = (rh - crop_size) * k / 2;
      }
      specs.push_back(std::move(spec));
    }
  }
  return specs;
}

std::vector<VideoClip> multiview_views(const VideoClip& video, Rng& rng,
                                       std::size_t frames_per_clip, std::size_t crop_size) {
  const auto specs = multiview_specs(video, rng, frames_per_clip, crop_size);
  const auto [rh, rw] = short_side_size(video.height(), video.width(), kMultiviewShortSide);
  std::map<std::size_t, Frame> resized;
  std::vector<VideoClip> views;
  views.reserve(specs.size());
  for (const auto& spec : specs) {
    VideoClip view(spec.frame_indices.size(), crop_size, crop_size);
    for (std::size_t i = 0; i < spec.frame_indices.size(); ++i) {
      const std::size_t index = spec.frame_indices[i];
      auto it = resized.find(index);
      if (it == resized.end()) {
        it = resized.emplace(index, resize_bilinear(video.frame(index), rh, rw)).first;
      }
      view.set_frame(i, crop(it->second, spec.top, spec.left, crop_size));
    }
    views.push_back(std::move(view));
  }
  return views;
}

}  // namespace s3aug
