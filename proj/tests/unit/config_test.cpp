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

#include "s3aug/config.hpp"

#include <gtest/gtest.h>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

Stage stage_of(std::string_view text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    return e.stage();
  }
  ADD_FAILURE() << "accepted: " << text;
  return Stage::kInput;
}

TEST(Config, Defaults) {
  const S3AugConfig cfg;
  EXPECT_DOUBLE_EQ(cfg.p, 0.2);
  EXPECT_EQ(cfg.sampling_mode, SamplingMode::kRandom);
  EXPECT_TRUE(cfg.shift_enabled);
  EXPECT_TRUE(cfg.person_paste_enabled);
  EXPECT_EQ(cfg.frames_per_clip, 16u);
  EXPECT_EQ(cfg.crop_size, 224u);
  EXPECT_FALSE(cfg.per_sample_bernoulli);
  EXPECT_TRUE(cfg.validate().empty());
}

TEST(Config, ParsesKeysCommentsAndWhitespace) {
  const auto cfg = parse_config(
      "# ablation\n"
      "p = 0.6\n"
      "  sampling_mode=semantic  # trailing comment\n"
      "shift_enabled = off\n"
      "person_paste_enabled = no\n"
      "global_seed = 18446744073709551615\n"
      "per_sample_bernoulli = true\n"
      "noise_amplitude = 0\n");
  EXPECT_DOUBLE_EQ(cfg.p, 0.6);
  EXPECT_EQ(cfg.sampling_mode, SamplingMode::kSemantic);
  EXPECT_FALSE(cfg.shift_enabled);
  EXPECT_FALSE(cfg.person_paste_enabled);
  EXPECT_EQ(cfg.global_seed, 18446744073709551615ULL);
  EXPECT_TRUE(cfg.per_sample_bernoulli);
  EXPECT_EQ(cfg.noise_amplitude, 0.0);
}

TEST(Config, BaseValuesSurviveUnsetKeys) {
  S3AugConfig base;
  base.global_seed = 77;
  const auto cfg = parse_config("p = 1\n", base);
  EXPECT_EQ(cfg.global_seed, 77u);
  EXPECT_EQ(cfg.p, 1.0);
}

TEST(Config, TextRoundTrip) {
  S3AugConfig cfg;
  cfg.p = 0.123456789012345;
  cfg.sampling_mode = SamplingMode::kNone;
  cfg.global_seed = 5;
  cfg.noise_amplitude = 0.07;
  EXPECT_EQ(parse_config(config_to_text(cfg)), cfg);
}

TEST(Config, RejectsBadInput) {
  EXPECT_EQ(stage_of("p = 1.5\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("p = lots\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("mystery = 1\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("sampling_mode = clever\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("shift_enabled = maybe\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("just words\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("crop_size = 300\n"), Stage::kConfig);
  EXPECT_EQ(stage_of("frames_per_clip = -3\n"), Stage::kConfig);
  EXPECT_THROW(load_config("/nonexistent/s3aug.cfg"), Error);
}

TEST(Config, ModeNames) {
  for (auto mode : {SamplingMode::kNone, SamplingMode::kRandom, SamplingMode::kSemantic}) {
    EXPECT_EQ(parse_mode(mode_name(mode)), mode);
  }
}

}  // namespace
}  // namespace s3aug
