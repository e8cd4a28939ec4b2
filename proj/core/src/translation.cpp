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

#include <algorithm>
#include <cmath>

#include "s3aug/error.hpp"
#include "s3aug/rng.hpp"
#include "s3aug/taxonomy.hpp"

namespace s3aug {
namespace {

struct Layout {
  std::size_t style = 0;        // channels [0, style)
  std::size_t color_begin = 0;  // channels [color_begin, boundary)
  std::size_t boundary = 0;     // last channel
};

struct Size2 {
  std::size_t height;
  std::size_t width;
};

Size2 block_size(std::size_t height, std::size_t width, std::size_t level, std::size_t blocks) {
  const std::size_t div = std::size_t{1} << (blocks - level);
  return {(height + div - 1) / div, (width + div - 1) / div};
}

// Instance boundary indicator: a pixel whose 4-neighbourhood contains a
// different instance id, where at least one of the pair is an instance.
Tensor<float, 3> instance_boundaries(const InstanceVideo& instances) {
  const std::size_t frames = instances.num_frames(), h = instances.height(),
                    w = instances.width();
  Tensor<float, 3> edges({frames, h, w}, 0.0f);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t y = 0; y < h; ++y) {
      for (std::size_t x = 0; x < w; ++x) {
        const auto id = instances(t, y, x);
        auto differs = [&](std::size_t ny, std::size_t nx) {
          const auto other = instances(t, ny, nx);
          return other != id && (other != 0 || id != 0);
        };
        if ((y > 0 && differs(y - 1, x)) || (y + 1 < h && differs(y + 1, x)) ||
            (x > 0 && differs(y, x - 1)) || (x + 1 < w && differs(y, x + 1))) {
          edges(t, y, x) = 1.0f;
        }
      }
    }
  }
  return edges;
}

// Area-averaged label code at a block resolution: colour channels hold the
// palette colour of each label, the last channel the boundary fraction.
FeatureMap label_code(const LabelVideo& labels, const Tensor<float, 3>& edges,
                      const Palette& palette, const Layout& layout, std::size_t channels,
                      Size2 size) {
  const std::size_t frames = labels.num_frames(), h = labels.height(), w = labels.width();
  FeatureMap code(frames, channels, size.height, size.width, 0.0f);
  std::vector<double> acc(4);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t by = 0; by < size.height; ++by) {
      const std::size_t y0 = by * h / size.height;
      const std::size_t y1 = std::max(y0 + 1, (by + 1) * h / size.height);
      for (std::size_t bx = 0; bx < size.width; ++bx) {
        const std::size_t x0 = bx * w / size.width;
        const std::size_t x1 = std::max(x0 + 1, (bx + 1) * w / size.width);
        std::fill(acc.begin(), acc.end(), 0.0);
        for (std::size_t y = y0; y < y1; ++y) {
          for (std::size_t x = x0; x < x1; ++x) {
            const int id = std::min<int>(labels(t, y, x), kMaxCategoryId);
            for (std::size_t c = 0; c < 3; ++c) acc[c] += palette.channel(id, c);
            acc[3] += edges(t, y, x);
          }
        }
        const double n = static_cast<double>((y1 - y0) * (x1 - x0));
        for (std::size_t c = layout.color_begin; c < layout.boundary; ++c) {
          code(t, c, by, bx) = static_cast<float>(acc[(c - layout.color_begin) % 3] / n);
        }
        code(t, layout.boundary, by, bx) = static_cast<float>(acc[3] / n);
      }
    }
  }
  return code;
}

// Separable [1 2 1] / 4 smoothing with clamped edges, every channel.
FeatureMap smooth(const FeatureMap& in) {
  const std::size_t frames = in.num_frames(), channels = in.channels(), h = in.height(),
                    w = in.width();
  FeatureMap tmp(frames, channels, h, w), out(frames, channels, h, w);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t c = 0; c < channels; ++c) {
      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          const float l = in(t, c, y, x > 0 ? x - 1 : x);
          const float r = in(t, c, y, x + 1 < w ? x + 1 : x);
          tmp(t, c, y, x) = 0.25f * l + 0.5f * in(t, c, y, x) + 0.25f * r;
        }
      }
      for (std::size_t y = 0; y < h; ++y) {
        for (std::size_t x = 0; x < w; ++x) {
          const float u = tmp(t, c, y > 0 ? y - 1 : y, x);
          const float d = tmp(t, c, y + 1 < h ? y + 1 : y, x);
          out(t, c, y, x) = 0.25f * u + 0.5f * tmp(t, c, y, x) + 0.25f * d;
        }
      }
    }
  }
  return out;
}

FeatureMap resample_nearest(const FeatureMap& in, Size2 size) {
  const std::size_t frames = in.num_frames(), channels = in.channels();
  FeatureMap out(frames, channels, size.height, size.width);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t c = 0; c < channels; ++c) {
      for (std::size_t y = 0; y < size.height; ++y) {
        const std::size_t sy = y * in.height() / size.height;
        for (std::size_t x = 0; x < size.width; ++x) {
          out(t, c, y, x) = in(t, c, sy, x * in.width() / size.width);
        }
      }
    }
  }
  return out;
}

float style_mean(const FeatureMap& z, const Layout& layout, std::size_t t, std::size_t y,
                 std::size_t x) {
  if (layout.style == 0) return 0.0f;
  float s = 0.0f;
  for (std::size_t c = 0; c < layout.style; ++c) s += z(t, c, y, x);
  return s / static_cast<float>(layout.style);
}

}  // namespace

MockDecoder::MockDecoder(Palette palette, MockDecoderOptions options)
    : palette_(std::move(palette)), options_(options) {
  if (options_.blocks < 2) throw Error(Stage::kTranslation, "mock decoder needs >= 2 blocks");
  const auto widths = default_shift_widths(options_.channels);
  if (options_.channels < widths.backward_channels + widths.forward_channels + 4) {
    throw Error(Stage::kTranslation,
                "mock decoder needs room for 3 colour channels and a boundary channel");
  }
  if (options_.shift_override) {
    const auto& o = *options_.shift_override;
    if (o.backward_channels + o.forward_channels > options_.channels) {
      throw Error(Stage::kTranslation, "shift override exceeds the channel count");
    }
  }
}

ShiftConfig MockDecoder::shift_config() const {
  return options_.shift_override ? *options_.shift_override
                                 : default_shift_widths(options_.channels);
}

VideoClip MockDecoder::generate(const LabelVideo& labels, const InstanceVideo& instances,
                                bool shift_enabled) const {
  return generate(labels, instances, shift_enabled, nullptr);
}

VideoClip MockDecoder::generate(const LabelVideo& labels, const InstanceVideo& instances,
                                bool shift_enabled, const BlockHook& hook) const {
  if (labels.shape() != instances.shape()) {
    throw Error(Stage::kTranslation, "labels " + shape_string(labels.shape()) +
                                         " and instances " + shape_string(instances.shape()) +
                                         " are not aligned");
  }
  const std::size_t frames = labels.num_frames(), height = labels.height(),
                    width = labels.width();
  const std::size_t channels = options_.channels, blocks = options_.blocks;
  const auto widths = default_shift_widths(channels);
  Layout layout;
  layout.style = widths.backward_channels + widths.forward_channels;
  layout.color_begin = layout.style;
  layout.boundary = channels - 1;
  const ShiftConfig shift = shift_config();
  const auto edges = instance_boundaries(instances);

  // z_0: label code at the coarsest resolution plus the per-frame noise field
  // on the style channels.
  Size2 size = block_size(height, width, 0, blocks);
  FeatureMap z = label_code(labels, edges, palette_, layout, channels, size);
  for (std::size_t t = 0; t < frames; ++t) {
    Rng rng(mix_seed(options_.seed, t));
    for (std::size_t y = 0; y < size.height; ++y) {
      for (std::size_t x = 0; x < size.width; ++x) {
        const float n =
            static_cast<float>(options_.noise_amplitude * (2.0 * rng.uniform_real() - 1.0));
        for (std::size_t c = 0; c < layout.style; ++c) z(t, c, y, x) = n;
      }
    }
  }

  for (std::size_t block = 1; block <= blocks; ++block) {
    const FeatureMap code = label_code(labels, edges, palette_, layout, channels, size);
    FeatureMap next = smooth(z);
    for (std::size_t t = 0; t < frames; ++t) {
      for (std::size_t y = 0; y < size.height; ++y) {
        for (std::size_t x = 0; x < size.width; ++x) {
          const float style = style_mean(next, layout, t, y, x);
          for (std::size_t c = layout.color_begin; c < channels; ++c) {
            const float blended = 0.5f * (next(t, c, y, x) + code(t, c, y, x));
            next(t, c, y, x) = c == layout.boundary ? blended : blended + style;
          }
        }
      }
    }
    size = block_size(height, width, block, blocks);
    z = resample_nearest(next, size);
    if (hook) hook(block, z);
    if (shift_enabled) z = shift_features(z, shift);
  }

  VideoClip out(frames, height, width);
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        std::array<float, 3> sum{};
        std::array<int, 3> count{};
        for (std::size_t c = layout.color_begin; c < layout.boundary; ++c) {
          const std::size_t k = (c - layout.color_begin) % 3;
          sum[k] += z(t, c, y, x);
          ++count[k];
        }
        const float style = style_mean(z, layout, t, y, x);
        const float edge = z(t, layout.boundary, y, x);
        for (std::size_t k = 0; k < 3; ++k) {
          out(t, k, y, x) = std::clamp(sum[k] / count[k] + style - 0.25f * edge, 0.0f, 1.0f);
        }
      }
    }
  }
  return out;
}

VideoClip mock_generate(const LabelVideo& labels, const InstanceVideo& instances,
                        std::uint64_t seed, bool shift_enabled, MockDecoderOptions options) {
  options.seed = seed;
  return MockDecoder(Palette(), options).generate(labels, instances, shift_enabled);
}

double flicker_score(const VideoClip& clip, const Mask2D& static_mask) {
  if (clip.num_frames() < 2) throw Error(Stage::kInput, "flicker score needs T >= 2");
  const std::array<std::size_t, 2> expected{clip.height(), clip.width()};
  if (static_mask.shape() != expected) {
    throw Error(Stage::kInput, "mask " + shape_string(static_mask.shape()) +
                                   " does not match frame " + shape_string(expected));
  }
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t t = 0; t + 1 < clip.num_frames(); ++t) {
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t y = 0; y < clip.height(); ++y) {
        for (std::size_t x = 0; x < clip.width(); ++x) {
          if (!static_mask(y, x)) continue;
          total += std::fabs(static_cast<double>(clip(t + 1, c, y, x)) - clip(t, c, y, x));
          ++count;
        }
      }
    }
  }
  if (count == 0) throw Error(Stage::kInput, "flicker score mask selects no pixels");
  return total / static_cast<double>(count);
}

Mask2D static_background_mask(const LabelVideo& labels) {
  Mask2D mask({labels.height(), labels.width()}, 0);
  for (std::size_t y = 0; y < labels.height(); ++y) {
    for (std::size_t x = 0; x < labels.width(); ++x) {
      const auto first = labels(0, y, x);
      bool constant = first < kFirstThingId || first > kLastThingId;
      for (std::size_t t = 1; constant && t < labels.num_frames(); ++t) {
        constant = labels(t, y, x) == first;
      }
      mask(y, x) = constant;
    }
  }
  return mask;
}

}  // namespace s3aug
