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

#include "s3aug/shift.hpp"

#include <algorithm>

#include "s3aug/error.hpp"

namespace s3aug {

ShiftConfig default_shift_widths(std::size_t channels) {
  return {channels / 8, channels / 8};
}

FeatureMap shift_features(const FeatureMap& features, const ShiftConfig& config) {
  const std::size_t frames = features.num_frames();
  const std::size_t channels = features.channels();
  const std::size_t backward = config.backward_channels;
  const std::size_t forward_end = backward + config.forward_channels;
  if (forward_end > channels) {
    throw Error(Stage::kTranslation, "shift bands " + std::to_string(backward) + " + " +
                                         std::to_string(config.forward_channels) +
                                         " exceed " + std::to_string(channels) + " channels");
  }
  if (config.is_identity()) return features;

  const std::size_t plane = features.height() * features.width();
  FeatureMap out(frames, channels, features.height(), features.width(), 0.0f);
  const float* src = features.data();
  float* dst = out.data();
  auto plane_at = [&](std::size_t t, std::size_t c) { return (t * channels + c) * plane; };

  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t c = 0; c < channels; ++c) {
      std::size_t source_t;
      if (c < backward) {
        if (t + 1 >= frames) continue;  // zero-filled
        source_t = t + 1;
      } else if (c < forward_end) {
        if (t == 0) continue;  // zero-filled
        source_t = t - 1;
      } else {
        source_t = t;
      }
      std::copy_n(src + plane_at(source_t, c), plane, dst + plane_at(t, c));
    }
  }
  return out;
}

}  // namespace s3aug
