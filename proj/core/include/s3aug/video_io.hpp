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

#ifndef S3AUG_VIDEO_IO_HPP_
#define S3AUG_VIDEO_IO_HPP_

#include <filesystem>
#include <string>

#include "s3aug/video.hpp"

namespace s3aug {

// File name of frame t (0-based) inside a frame directory: frame_0001.png ...
std::string frame_file_name(std::size_t t);

// Clip frames as 8-bit RGB PNGs. Values are clamped to [0, 1] and quantized
// with round(v * 255); loading yields k / 255.
void save_clip(const std::filesystem::path& dir, const VideoClip& clip);
VideoClip load_clip(const std::filesystem::path& dir);

// Label / instance videos as 16-bit grayscale PNGs, pixel value = id.
void save_id_video(const std::filesystem::path& dir, const Tensor<std::uint16_t, 3>& ids);
Tensor<std::uint16_t, 3> load_id_video(const std::filesystem::path& dir);
LabelVideo load_label_video(const std::filesystem::path& dir);
InstanceVideo load_instance_video(const std::filesystem::path& dir);

// Single PNG frames, used by the adapter protocol and tests.
void write_rgb_png(const std::filesystem::path& path, const Frame& frame);
Frame read_rgb_png(const std::filesystem::path& path);
void write_gray16_png(const std::filesystem::path& path, const IdImage& image);
IdImage read_gray16_png(const std::filesystem::path& path);

// Feature maps: "S3FT", four little-endian uint32 dims (T, C, H, W), then
// row-major little-endian float32 values.
void save_feature_map(const std::filesystem::path& path, const FeatureMap& features);
FeatureMap load_feature_map(const std::filesystem::path& path);

// Quantization applied by save_clip, exposed for round-trip checks.
VideoClip quantize_clip(const VideoClip& clip);

}  // namespace s3aug

#endif  // S3AUG_VIDEO_IO_HPP_
