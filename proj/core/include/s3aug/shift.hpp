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

#ifndef S3AUG_SHIFT_HPP_
#define S3AUG_SHIFT_HPP_

#include <cstddef>

#include "s3aug/video.hpp"

namespace s3aug {

// Channel bands of the temporal shift. Channels [0, backward) of frame t are
// read from frame t + 1, channels [backward, backward + forward) from frame
// t - 1, and the rest stay in place. Slots with no source frame are zero.
struct ShiftConfig {
  std::size_t backward_channels = 0;
  std::size_t forward_channels = 0;

  bool is_identity() const { return backward_channels == 0 && forward_channels == 0; }
  friend bool operator==(const ShiftConfig&, const ShiftConfig&) = default;
};

// floor(C / 8) channels in each direction.
ShiftConfig default_shift_widths(std::size_t channels);

// Throws Error(Stage::kTranslation) if the bands exceed the channel count.
FeatureMap shift_features(const FeatureMap& features, const ShiftConfig& config);

}  // namespace s3aug

#endif  // S3AUG_SHIFT_HPP_
