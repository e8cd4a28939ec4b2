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

#include "s3aug/video.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "s3aug/error.hpp"
#include "s3aug/taxonomy.hpp"

namespace s3aug {

Frame VideoClip::frame(std::size_t t) const {
  Frame out({3, height(), width()});
  const std::size_t n = out.size();
  std::copy_n(data() + t * n, n, out.data());
  return out;
}

void VideoClip::set_frame(std::size_t t, const Frame& frame) {
  const std::size_t n = frame.size();
  std::copy_n(frame.data(), n, data() + t * n);
}

namespace {

template <typename Video>
IdImage copy_frame(const Video& video, std::size_t t) {
  IdImage out({video.height(), video.width()});
  const std::size_t n = out.size();
  std::copy_n(video.data() + t * n, n, out.data());
  return out;
}

template <typename Video>
void store_frame(Video& video, std::size_t t, const IdImage& image) {
  const std::size_t n = image.size();
  std::copy_n(image.data(), n, video.data() + t * n);
}

}  // namespace

IdImage LabelVideo::frame(std::size_t t) const { return copy_frame(*this, t); }
void LabelVideo::set_frame(std::size_t t, const IdImage& image) { store_frame(*this, t, image); }
IdImage InstanceVideo::frame(std::size_t t) const { return copy_frame(*this, t); }
void InstanceVideo::set_frame(std::size_t t, const IdImage& image) {
  store_frame(*this, t, image);
}

std::uint16_t InstanceVideo::max_instance(std::size_t t) const {
  const std::size_t n = height() * width();
  const auto* begin = data() + t * n;
  return n == 0 ? 0 : *std::max_element(begin, begin + n);
}

std::vector<std::string> validate_aligned(const VideoClip& clip, const LabelVideo& labels,
                                          const InstanceVideo& instances) {
  std::vector<std::string> errors;
  const auto& cs = clip.shape();
  if (cs[0] == 0 || cs[2] == 0 || cs[3] == 0) {
    errors.push_back("clip: empty dimension in shape " + shape_string(cs));
  }
  if (cs[1] != 3) {
    errors.push_back("clip: expected 3 channels, got " + std::to_string(cs[1]));
  }
  const std::array<std::size_t, 3> expected{cs[0], cs[2], cs[3]};
  if (labels.shape() != expected) {
    errors.push_back("labels: shape " + shape_string(labels.shape()) + " does not match clip " +
                     shape_string(expected));
  }
  if (instances.shape() != expected) {
    errors.push_back("instances: shape " + shape_string(instances.shape()) +
                     " does not match clip " + shape_string(expected));
  }

  const auto pixels = clip.values();
  for (std::size_t i = 0; i < pixels.size(); ++i) {
    const float v = pixels[i];
    if (!(v >= 0.0f && v <= 1.0f)) {
      std::ostringstream msg;
      msg << "clip: value " << v << " outside [0, 1] at flat index " << i;
      errors.push_back(msg.str());
      break;
    }
  }
  const auto ids = labels.values();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] > kMaxCategoryId) {
      errors.push_back("labels: id " + std::to_string(ids[i]) + " out of range 0.." +
                       std::to_string(kMaxCategoryId) + " at flat index " + std::to_string(i));
      break;
    }
  }
  return errors;
}

void require_aligned(const VideoClip& clip, const LabelVideo& labels,
                     const InstanceVideo& instances) {
  const auto errors = validate_aligned(clip, labels, instances);
  if (errors.empty()) return;
  std::string message = "misaligned inputs";
  for (const auto& e : errors) message += "; " + e;
  throw Error(Stage::kValidation, message);
}

std::vector<std::string> validate_features(const FeatureMap& features) {
  std::vector<std::string> errors;
  if (features.channels() == 0) errors.push_back("features: C must be >= 1");
  for (float v : features.values()) {
    if (!std::isfinite(v)) {
      errors.push_back("features: non-finite value");
      break;
    }
  }
  return errors;
}

std::vector<std::string> validate_sample(const ClipSample& sample, int label_count) {
  std::vector<std::string> errors;
  if (sample.action_label < 0 || sample.action_label >= label_count) {
    errors.push_back("sample '" + sample.source_id + "': action label " +
                     std::to_string(sample.action_label) + " outside 0.." +
                     std::to_string(label_count - 1));
  }
  const auto& cs = sample.clip.shape();
  if (cs[0] == 0 || cs[1] != 3 || cs[2] == 0 || cs[3] == 0) {
    errors.push_back("sample '" + sample.source_id + "': clip shape " + shape_string(cs));
  }
  for (const float v : sample.clip.values()) {
    if (!(v >= 0.0f && v <= 1.0f)) {
      errors.push_back("sample '" + sample.source_id + "': pixel value outside [0, 1]");
      break;
    }
  }
  return errors;
}

}  // namespace s3aug
