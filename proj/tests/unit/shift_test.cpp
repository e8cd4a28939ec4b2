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

#include <gtest/gtest.h>

#include "s3aug/error.hpp"
#include "test_support.hpp"

namespace s3aug {
namespace {

// Element-wise reference: backward band reads frame t+1, forward band reads
// frame t-1, out-of-range reads are zero.
FeatureMap oracle_shift(const FeatureMap& in, std::size_t cb, std::size_t cf) {
  FeatureMap out(in.num_frames(), in.channels(), in.height(), in.width());
  const long frames = static_cast<long>(in.num_frames());
  for (long t = 0; t < frames; ++t) {
    for (std::size_t c = 0; c < in.channels(); ++c) {
      long src = t;
      if (c < cb) {
        src = t + 1;
      } else if (c < cb + cf) {
        src = t - 1;
      }
      for (std::size_t y = 0; y < in.height(); ++y) {
        for (std::size_t x = 0; x < in.width(); ++x) {
          out(t, c, y, x) = (src < 0 || src >= frames) ? 0.0f : in(src, c, y, x);
        }
      }
    }
  }
  return out;
}

TEST(Shift, WorkedExample) {
  FeatureMap f(3, 3, 1, 1);
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t c = 0; c < 3; ++c) f(t, c, 0, 0) = static_cast<float>(10 * t + c);
  }
  const FeatureMap out = shift_features(f, {1, 1});
  const float ch0[] = {10, 20, 0};
  const float ch1[] = {0, 1, 11};
  const float ch2[] = {2, 12, 22};
  for (std::size_t t = 0; t < 3; ++t) {
    EXPECT_EQ(out(t, 0, 0, 0), ch0[t]);
    EXPECT_EQ(out(t, 1, 0, 0), ch1[t]);
    EXPECT_EQ(out(t, 2, 0, 0), ch2[t]);
  }
}

TEST(Shift, MatchesOracleOnRandomMaps) {
  Rng rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t t = 1 + rng.uniform_index(5);
    const std::size_t c = 1 + rng.uniform_index(16);
    const std::size_t h = 1 + rng.uniform_index(4);
    const std::size_t w = 1 + rng.uniform_index(4);
    const std::size_t cb = rng.uniform_index(c + 1);
    const std::size_t cf = rng.uniform_index(c - cb + 1);
    const FeatureMap f = testing::random_features(rng, t, c, h, w);
    ASSERT_EQ(shift_features(f, {cb, cf}), oracle_shift(f, cb, cf))
        << "T=" << t << " C=" << c << " cb=" << cb << " cf=" << cf;
  }
}

TEST(Shift, ZeroWidthsAreIdentity) {
  Rng rng(2);
  const FeatureMap f = testing::random_features(rng, 4, 8, 3, 3);
  EXPECT_EQ(shift_features(f, {}), f);
  EXPECT_TRUE(ShiftConfig{}.is_identity());
}

TEST(Shift, SingleFrameZeroesShiftedBands) {
  Rng rng(3);
  const FeatureMap f = testing::random_features(rng, 1, 4, 2, 2);
  const FeatureMap out = shift_features(f, {1, 2});
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(out(0, c, i / 2, i % 2), 0.0f);
  }
  for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(out(0, 3, i / 2, i % 2), f(0, 3, i / 2, i % 2));
}

TEST(Shift, DefaultWidths) {
  EXPECT_EQ(default_shift_widths(64), (ShiftConfig{8, 8}));
  EXPECT_EQ(default_shift_widths(16), (ShiftConfig{2, 2}));
  EXPECT_EQ(default_shift_widths(8), (ShiftConfig{1, 1}));
  EXPECT_EQ(default_shift_widths(7), (ShiftConfig{0, 0}));
}

TEST(Shift, RejectsBandsWiderThanChannels) {
  const FeatureMap f(2, 4, 1, 1);
  EXPECT_NO_THROW(shift_features(f, {2, 2}));
  try {
    shift_features(f, {3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kTranslation);
  }
}

}  // namespace
}  // namespace s3aug
