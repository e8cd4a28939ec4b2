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

#ifndef S3AUG_ADAPTER_HPP_
#define S3AUG_ADAPTER_HPP_

#include <filesystem>
#include <string>

#include "s3aug/segmentation.hpp"
#include "s3aug/translation.hpp"

namespace s3aug {

// File protocol for external neural backends. An adapter directory holds an
// executable named `run`, invoked as
//
//   run segment   <frames_dir> <out_dir>
//       frames_dir: frame_0001.png ... (8-bit RGB)
//       out_dir:    labels/ and instances/ (16-bit PNG per frame) and
//                   id_remap.txt (native id -> canonical id)
//
//   run translate <labels_dir> <instances_dir> <out_dir>
//       out_dir:    frame_0001.png ... (8-bit RGB)
//
// A non-zero exit status is reported as a failure of the calling stage.
// Requests are staged under a fresh scratch directory inside the adapter
// directory and removed afterwards.
class AdapterSegmentation final : public SegmentationBackend {
 public:
  explicit AdapterSegmentation(std::filesystem::path dir);

  std::string name() const override { return "adapter:" + dir_.string(); }
  bool reentrant() const override { return false; }
  FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const override;
  SegmentedVideo segment_clip(const VideoClip& clip) const override;

 private:
  std::filesystem::path dir_;
};

class AdapterTranslation final : public TranslationBackend {
 public:
  explicit AdapterTranslation(std::filesystem::path dir);

  std::string name() const override { return "adapter:" + dir_.string(); }
  // The shift flag is the plugin's concern; it is passed as the environment
  // variable S3AUG_SHIFT=0|1.
  VideoClip generate(const LabelVideo& labels, const InstanceVideo& instances,
                     bool shift_enabled) const override;

 private:
  std::filesystem::path dir_;
};

}  // namespace s3aug

#endif  // S3AUG_ADAPTER_HPP_
