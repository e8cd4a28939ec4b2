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

#ifndef S3AUG_TRANSLATION_HPP_
#define S3AUG_TRANSLATION_HPP_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "s3aug/palette.hpp"
#include "s3aug/shift.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

class TranslationBackend {
 public:
  virtual ~TranslationBackend() = default;
  virtual std::string name() const = 0;
  // Output is aligned with `labels` and has values in [0, 1].
  virtual VideoClip generate(const LabelVideo& labels, const InstanceVideo& instances,
                             bool shift_enabled) const = 0;
};

struct MockDecoderOptions {
  std::size_t blocks = 3;
  // Channels of every decoder feature map. The first default_shift_widths()
  // bands are the style channels that carry per-frame noise.
  std::size_t channels = 16;
  double noise_amplitude = 0.05;
  std::uint64_t seed = 0;
  // Replaces default_shift_widths(channels) when set.
  std::optional<ShiftConfig> shift_override;
};

// Deterministic stand-in for a label-to-image generator.
//
// Features are T x C x h x w. Channels [0, S) are zero-mean style channels,
// where S = backward + forward shift widths; the remaining channels except the
// last hold the palette colour of the label (R, G, B repeating) and the last
// channel marks instance boundaries. The decoder input z_0 is the label code
// at 1 / 2^L resolution plus a per-frame noise field keyed by (seed, t) on
// the style channels. Each block
//   1. smooths every channel with a separable [1 2 1] / 4 kernel,
//   2. adds the mean style value to every colour channel,
//   3. blends colour channels halfway back toward the label code,
//   4. resamples to the next resolution (2x; the last block lands on H x W),
// and is followed by shift_features when shifting is enabled. RGB is the mean
// of each colour group plus the style mean, clamped to [0, 1].
class MockDecoder final : public TranslationBackend {
 public:
  explicit MockDecoder(Palette palette = Palette(), MockDecoderOptions options = {});

  std::string name() const override { return "mock"; }

  VideoClip generate(const LabelVideo& labels, const InstanceVideo& instances,
                     bool shift_enabled) const override;

  // Called with each block's output z'_l (1-based block index) before the
  // shift; may modify the features in place.
  using BlockHook = std::function<void(std::size_t block, FeatureMap& features)>;
  VideoClip generate(const LabelVideo& labels, const InstanceVideo& instances,
                     bool shift_enabled, const BlockHook& hook) const;

  ShiftConfig shift_config() const;
  const MockDecoderOptions& options() const { return options_; }
  const Palette& palette() const { return palette_; }

 private:
  Palette palette_;
  MockDecoderOptions options_;
};

VideoClip mock_generate(const LabelVideo& labels, const InstanceVideo& instances,
                        std::uint64_t seed, bool shift_enabled,
                        MockDecoderOptions options = {});

// Mean absolute difference between consecutive frames over the masked pixels
// and all three channels. Throws Error(Stage::kInput) for T < 2, a mask of the
// wrong shape, or an empty mask.
double flicker_score(const VideoClip& clip, const Mask2D& static_mask);

// Pixels whose label never changes over time and is not a thing.
Mask2D static_background_mask(const LabelVideo& labels);

}  // namespace s3aug

#endif  // S3AUG_TRANSLATION_HPP_
