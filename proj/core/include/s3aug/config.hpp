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

#ifndef S3AUG_CONFIG_HPP_
#define S3AUG_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace s3aug {

enum class SamplingMode { kNone, kRandom, kSemantic };

std::string_view mode_name(SamplingMode mode);
SamplingMode parse_mode(std::string_view name);

struct S3AugConfig {
  double p = 0.2;
  SamplingMode sampling_mode = SamplingMode::kRandom;
  bool shift_enabled = true;
  bool person_paste_enabled = true;
  std::uint64_t global_seed = 0;
  std::size_t frames_per_clip = 16;
  std::size_t short_side_min = 256;
  std::size_t short_side_max = 320;
  std::size_t crop_size = 224;
  // Ablation switch: one Bernoulli draw per clip instead of per batch.
  bool per_sample_bernoulli = false;
  int person_id = 1;
  // Mock translation backend.
  std::size_t decoder_blocks = 3;
  double noise_amplitude = 0.05;

  // Empty when every invariant holds.
  std::vector<std::string> validate() const;

  friend bool operator==(const S3AugConfig&, const S3AugConfig&) = default;
};

// "key = value" lines; '#' starts a comment; unknown keys are errors.
// Keys not present keep the values already in `base`.
S3AugConfig parse_config(std::string_view text, S3AugConfig base = {});
S3AugConfig load_config(const std::filesystem::path& path, S3AugConfig base = {});
std::string config_to_text(const S3AugConfig& cfg);

}  // namespace s3aug

#endif  // S3AUG_CONFIG_HPP_
