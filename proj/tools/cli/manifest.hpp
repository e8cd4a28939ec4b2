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

#ifndef S3AUG_TOOLS_CLI_MANIFEST_HPP_
#define S3AUG_TOOLS_CLI_MANIFEST_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "s3aug/config.hpp"
#include "s3aug/sampling.hpp"

namespace s3aug::cli {

struct VideoRecord {
  std::string video_id;
  std::uint64_t video_seed = 0;
  bool has_map = false;
  CategoryMap category_map;
};

// Everything needed to replay a command: the command line inputs, the full
// config snapshot (seed included), per-video seeds and maps, and timings.
struct RunManifest {
  int version = 1;
  std::string command;
  S3AugConfig config;
  std::map<std::string, std::string> inputs;
  std::vector<VideoRecord> videos;
  std::map<std::string, double> timings_ms;
  std::vector<std::string> outputs;
};

std::string manifest_to_json(const RunManifest& manifest);
RunManifest manifest_from_json(const std::string& text);
void save_manifest(const std::filesystem::path& path, const RunManifest& manifest);
RunManifest load_manifest(const std::filesystem::path& path);

}  // namespace s3aug::cli

#endif  // S3AUG_TOOLS_CLI_MANIFEST_HPP_
