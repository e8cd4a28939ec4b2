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

#include "cli/manifest.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "s3aug/error.hpp"

namespace s3aug::cli {

using nlohmann::json;

std::string manifest_to_json(const RunManifest& manifest) {
  json videos = json::array();
  for (const auto& v : manifest.videos) {
    json entry = {{"video_id", v.video_id}, {"video_seed", v.video_seed}};
    if (v.has_map) {
      json pairs = json::array();
      for (const auto& [source, target] : v.category_map.mapping()) {
        pairs.push_back({source, target});
      }
      entry["category_map"] = pairs;
    } else {
      entry["category_map"] = nullptr;
    }
    videos.push_back(entry);
  }
  json doc = {
      {"schema", "s3aug-manifest"},
      {"version", manifest.version},
      {"command", manifest.command},
      {"config", config_to_text(manifest.config)},
      {"global_seed", manifest.config.global_seed},
      {"inputs", manifest.inputs},
      {"videos", videos},
      {"timings_ms", manifest.timings_ms},
      {"outputs", manifest.outputs},
  };
  return doc.dump(2) + "\n";
}

RunManifest manifest_from_json(const std::string& text) {
  RunManifest manifest;
  try {
    const json doc = json::parse(text);
    if (doc.value("schema", "") != "s3aug-manifest") {
      throw Error(Stage::kConfig, "not an s3aug manifest");
    }
    manifest.version = doc.at("version").get<int>();
    manifest.command = doc.at("command").get<std::string>();
    manifest.config = parse_config(doc.at("config").get<std::string>());
    manifest.inputs = doc.at("inputs").get<std::map<std::string, std::string>>();
    for (const auto& entry : doc.at("videos")) {
      VideoRecord v;
      v.video_id = entry.at("video_id").get<std::string>();
      v.video_seed = entry.at("video_seed").get<std::uint64_t>();
      if (!entry.at("category_map").is_null()) {
        std::map<int, int> mapping;
        for (const auto& pair : entry.at("category_map")) {
          mapping[pair.at(0).get<int>()] = pair.at(1).get<int>();
        }
        v.has_map = true;
        v.category_map = CategoryMap(std::move(mapping));
      }
      manifest.videos.push_back(std::move(v));
    }
    manifest.timings_ms = doc.value("timings_ms", std::map<std::string, double>{});
    manifest.outputs = doc.value("outputs", std::vector<std::string>{});
  } catch (const json::exception& e) {
    throw Error(Stage::kConfig, std::string("malformed manifest: ") + e.what());
  }
  return manifest;
}

void save_manifest(const std::filesystem::path& path, const RunManifest& manifest) {
  std::ofstream out(path);
  if (!out) throw Error(Stage::kIo, "cannot write manifest " + path.string());
  out << manifest_to_json(manifest);
}

RunManifest load_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open manifest " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return manifest_from_json(buffer.str());
}

}  // namespace s3aug::cli
