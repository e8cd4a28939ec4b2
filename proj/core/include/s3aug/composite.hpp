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

#ifndef S3AUG_COMPOSITE_HPP_
#define S3AUG_COMPOSITE_HPP_

#include "s3aug/taxonomy.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

// T x H x W, 1 where the original label video marks the person category.
class PersonMask : public Tensor<std::uint8_t, 3> {
 public:
  PersonMask() = default;
  PersonMask(std::size_t frames, std::size_t height, std::size_t width)
      : Tensor({frames, height, width}, 0) {}

  std::size_t count() const;
};

// Built from the pre-sampling labels v_l1. Throws Error(Stage::kComposite)
// when person_id is not a thing in `table`.
PersonMask person_mask(const LabelVideo& original_labels, const CategoryTable& table,
                       int person_id = kPersonId);

// Hard composite: original pixels where the mask is set, generated pixels
// elsewhere. Throws Error(Stage::kComposite) on misaligned inputs.
VideoClip paste_person(const VideoClip& original, const VideoClip& generated,
                       const PersonMask& mask);

}  // namespace s3aug

#endif  // S3AUG_COMPOSITE_HPP_
