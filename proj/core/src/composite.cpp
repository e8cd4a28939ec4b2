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

#include "s3aug/composite.hpp"

#include <algorithm>

#include "s3aug/error.hpp"

namespace s3aug {

std::size_t PersonMask::count() const {
  return static_cast<std::size_t>(std::count(data_.begin(), data_.end(), std::uint8_t{1}));
}

PersonMask person_mask(const LabelVideo& original_labels, const CategoryTable& table,
                       int person_id) {
  if (!table.contains(person_id) || table.kind(person_id) != CategoryKind::kThing) {
    throw Error(Stage::kComposite,
                "person id " + std::to_string(person_id) + " is not a thing category");
  }
  PersonMask mask(original_labels.num_frames(), original_labels.height(),
                  original_labels.width());
  const auto labels = original_labels.values();
  auto bits = mask.values();
  for (std::size_t i = 0; i < labels.size(); ++i) bits[i] = labels[i] == person_id;
  return mask;
}

VideoClip paste_person(const VideoClip& original, const VideoClip& generated,
                       const PersonMask& mask) {
  const std::array<std::size_t, 3> frame_shape{original.num_frames(), original.height(),
                                               original.width()};
  if (original.shape() != generated.shape() || mask.shape() != frame_shape) {
    throw Error(Stage::kComposite, "original " + shape_string(original.shape()) +
                                       ", generated " + shape_string(generated.shape()) +
                                       " and mask " + shape_string(mask.shape()) +
                                       " are not aligned");
  }
  VideoClip out = generated;
  const std::size_t plane = original.height() * original.width();
  for (std::size_t t = 0; t < original.num_frames(); ++t) {
    const std::uint8_t* bits = mask.data() + t * plane;
    for (std::size_t c = 0; c < 3; ++c) {
      const std::size_t base = (t * 3 + c) * plane;
      for (std::size_t i = 0; i < plane; ++i) {
        if (bits[i]) out.data()[base + i] = original.data()[base + i];
      }
    }
  }
  return out;
}

}  // namespace s3aug
