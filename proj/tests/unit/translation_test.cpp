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

#include "s3aug/translation.hpp"

#include <gtest/gtest.h>

#include "s3aug/error.hpp"
#include "s3aug/scene.hpp"

namespace s3aug {
namespace {

std::vector<bool> changed_frames(const VideoClip& a, const VideoClip& b) {
  std::vector<bool> changed(a.num_frames(), false);
  for (std::size_t t = 0; t < a.num_frames(); ++t) changed[t] = !(a.frame(t) == b.frame(t));
  return changed;
}

MockDecoder::BlockHook perturb_frame(std::size_t block, std::size_t frame) {
  return [=](std::size_t b, FeatureMap& f) {
    if (b != block) return;
    for (std::size_t c = 0; c < f.channels(); ++c) {
      for (std::size_t y = 0; y < f.height(); ++y) {
        for (std::size_t x = 0; x < f.width(); ++x) f(frame, c, y, x) += 0.5f;
      }
    }
  };
}

class MockDecoderTest : public ::testing::Test {
 protected:
  Scene scene_ = generate_scene(11, 6, 32, 32);
  MockDecoder decoder_;
};

TEST_F(MockDecoderTest, OutputShapeAndRange) {
  const VideoClip out = decoder_.generate(scene_.labels, scene_.instances, true);
  EXPECT_EQ(out.shape(), scene_.clip.shape());
  for (float v : out.values()) {
    ASSERT_GE(v, 0.0f);
    ASSERT_LE(v, 1.0f);
  }
}

TEST_F(MockDecoderTest, LastBlockPerturbationReachesNeighboursOnlyWithShift) {
  const auto base_on = decoder_.generate(scene_.labels, scene_.instances, true);
  const auto hit_on = decoder_.generate(scene_.labels, scene_.instances, true, perturb_frame(3, 2));
  EXPECT_EQ(changed_frames(base_on, hit_on),
            (std::vector<bool>{false, true, true, true, false, false}));

  const auto base_off = decoder_.generate(scene_.labels, scene_.instances, false);
  const auto hit_off =
      decoder_.generate(scene_.labels, scene_.instances, false, perturb_frame(3, 2));
  EXPECT_EQ(changed_frames(base_off, hit_off),
            (std::vector<bool>{false, false, true, false, false, false}));
}

TEST_F(MockDecoderTest, FirstBlockPerturbationSpreadsFurther) {
  const auto base = decoder_.generate(scene_.labels, scene_.instances, true);
  const auto hit = decoder_.generate(scene_.labels, scene_.instances, true, perturb_frame(1, 2));
  const auto changed = changed_frames(base, hit);
  EXPECT_TRUE(changed[1] && changed[2] && changed[3]);
  const auto base_off = decoder_.generate(scene_.labels, scene_.instances, false);
  const auto hit_off =
      decoder_.generate(scene_.labels, scene_.instances, false, perturb_frame(1, 2));
  EXPECT_EQ(changed_frames(base_off, hit_off),
            (std::vector<bool>{false, false, true, false, false, false}));
}

TEST_F(MockDecoderTest, ZeroWidthShiftIsInert) {
  MockDecoderOptions options;
  options.shift_override = ShiftConfig{};
  const MockDecoder inert(Palette(), options);
  EXPECT_EQ(inert.generate(scene_.labels, scene_.instances, true),
            decoder_.generate(scene_.labels, scene_.instances, false));
  options.shift_override.reset();
  options.channels = 7;  // floor(7 / 8) = 0 shifted channels
  const MockDecoder narrow(Palette(), options);
  EXPECT_EQ(narrow.shift_config(), ShiftConfig{});
  EXPECT_EQ(narrow.generate(scene_.labels, scene_.instances, true),
            narrow.generate(scene_.labels, scene_.instances, false));
}

TEST_F(MockDecoderTest, SeededDeterminism) {
  EXPECT_EQ(mock_generate(scene_.labels, scene_.instances, 4, true),
            mock_generate(scene_.labels, scene_.instances, 4, true));
  EXPECT_NE(mock_generate(scene_.labels, scene_.instances, 4, true),
            mock_generate(scene_.labels, scene_.instances, 5, true));
}

TEST_F(MockDecoderTest, ShiftReducesFlickerOnStaticScene) {
  SceneRecipe recipe;
  recipe.background = 100;
  recipe.regions.push_back({160, 4, 4, 12, 10});
  recipe.shapes.push_back({kPersonId, ShapeForm::kRectangle, 20, 8, 6, 14, 0, 0});
  const Scene scene = generate_scene(0, 16, 32, 32, recipe);
  const Mask2D mask = static_background_mask(scene.labels);
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const double on = flicker_score(mock_generate(scene.labels, scene.instances, seed, true), mask);
    const double off =
        flicker_score(mock_generate(scene.labels, scene.instances, seed, false), mask);
    EXPECT_LE(on, off) << seed;
    EXPECT_GT(off, 0.0);
  }
}

TEST_F(MockDecoderTest, RejectsExcessiveShiftBands) {
  MockDecoderOptions options;
  options.shift_override = ShiftConfig{10, 10};
  EXPECT_THROW(MockDecoder(Palette(), options), Error);
}

TEST(Flicker, ConstantAndAlternatingClips) {
  const Mask2D all({4, 4}, 1);
  EXPECT_EQ(flicker_score(VideoClip(5, 4, 4, 0.3f), all), 0.0);
  VideoClip alternating(4, 4, 4);
  for (std::size_t t = 1; t < 4; t += 2) alternating.set_frame(t, Frame({3, 4, 4}, 1.0f));
  EXPECT_DOUBLE_EQ(flicker_score(alternating, all), 1.0);
}

TEST(Flicker, MaskSelectsPixels) {
  VideoClip clip(2, 1, 2);
  clip(1, 0, 0, 1) = 0.9f;
  Mask2D left({1, 2}, 0);
  left(0, 0) = 1;
  EXPECT_EQ(flicker_score(clip, left), 0.0);
  Mask2D right({1, 2}, 0);
  right(0, 1) = 1;
  EXPECT_NEAR(flicker_score(clip, right), 0.3, 1e-6);
}

TEST(Flicker, RejectsDegenerateInput) {
  EXPECT_THROW(flicker_score(VideoClip(1, 2, 2), Mask2D({2, 2}, 1)), Error);
  EXPECT_THROW(flicker_score(VideoClip(2, 2, 2), Mask2D({2, 3}, 1)), Error);
  EXPECT_THROW(flicker_score(VideoClip(2, 2, 2), Mask2D({2, 2}, 0)), Error);
}

TEST(Flicker, StaticBackgroundMaskExcludesThingsAndChanges) {
  LabelVideo labels(3, 1, 4, 100);
  labels(0, 0, 1) = kPersonId;
  labels(1, 0, 1) = kPersonId;
  labels(2, 0, 1) = kPersonId;
  labels(2, 0, 2) = 150;
  const Mask2D mask = static_background_mask(labels);
  EXPECT_EQ(mask(0, 0), 1);
  EXPECT_EQ(mask(0, 1), 0);
  EXPECT_EQ(mask(0, 2), 0);
  EXPECT_EQ(mask(0, 3), 1);
}

}  // namespace
}  // namespace s3aug
