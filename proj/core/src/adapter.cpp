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

#include "s3aug/adapter.hpp"

#include <unistd.h>

#include <atomic>
#include <cstdlib>
#include <sstream>

#include "s3aug/error.hpp"
#include "s3aug/video_io.hpp"

namespace s3aug {
namespace fs = std::filesystem;

namespace {

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') {
      out += "'\\''";
    } else {
      out += ch;
    }
  }
  return out + "'";
}

// Scratch directory removed on scope exit.
class Scratch {
 public:
  explicit Scratch(const fs::path& parent) {
    static std::atomic<unsigned> counter{0};
    path_ = parent / ("work-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~Scratch() {
    std::error_code ec;
    fs::remove_all(path_, ec);
  }
  Scratch(const Scratch&) = delete;
  Scratch& operator=(const Scratch&) = delete;

  const fs::path& path() const { return path_; }

 private:
  fs::path path_;
};

void check_adapter_dir(const fs::path& dir, Stage stage) {
  const fs::path run = dir / "run";
  if (!fs::exists(run)) throw Error(stage, "adapter " + dir.string() + " has no 'run' executable");
}

void invoke(const fs::path& dir, const std::vector<std::string>& args, Stage stage,
            const std::string& env = "") {
  std::string command = env + shell_quote((dir / "run").string());
  for (const auto& a : args) command += " " + shell_quote(a);
  const int status = std::system(command.c_str());
  if (status != 0) {
    std::ostringstream msg;
    msg << "adapter command failed with status " << status << ": " << command;
    throw Error(stage, msg.str());
  }
}

}  // namespace

AdapterSegmentation::AdapterSegmentation(fs::path dir) : dir_(fs::absolute(std::move(dir))) {
  check_adapter_dir(dir_, Stage::kSegmentation);
}

FrameSegmentation AdapterSegmentation::segment_frame(std::size_t, const Frame& frame) const {
  VideoClip clip(1, frame.dim(1), frame.dim(2));
  clip.set_frame(0, frame);
  const SegmentedVideo video = segment_clip(clip);
  return {video.labels.frame(0), video.instances.frame(0)};
}

SegmentedVideo AdapterSegmentation::segment_clip(const VideoClip& clip) const {
  const Scratch scratch(dir_);
  const fs::path frames = scratch.path() / "frames";
  const fs::path out = scratch.path() / "out";
  save_clip(frames, clip);
  fs::create_directories(out);
  invoke(dir_, {"segment", frames.string(), out.string()}, Stage::kSegmentation);
  try {
    const IdRemapTable remap = IdRemapTable::load(out / "id_remap.txt");
    return {remap.apply(load_label_video(out / "labels")), load_instance_video(out / "instances")};
  } catch (const Error& e) {
    throw Error(Stage::kSegmentation, std::string("adapter output: ") + e.what());
  }
}

AdapterTranslation::AdapterTranslation(fs::path dir) : dir_(fs::absolute(std::move(dir))) {
  check_adapter_dir(dir_, Stage::kTranslation);
}

VideoClip AdapterTranslation::generate(const LabelVideo& labels, const InstanceVideo& instances,
                                       bool shift_enabled) const {
  const Scratch scratch(dir_);
  const fs::path labels_dir = scratch.path() / "labels";
  const fs::path instances_dir = scratch.path() / "instances";
  const fs::path out = scratch.path() / "out";
  save_id_video(labels_dir, labels);
  save_id_video(instances_dir, instances);
  fs::create_directories(out);
  invoke(dir_, {"translate", labels_dir.string(), instances_dir.string(), out.string()},
         Stage::kTranslation, std::string("S3AUG_SHIFT=") + (shift_enabled ? "1 " : "0 "));
  try {
    return load_clip(out);
  } catch (const Error& e) {
    throw Error(Stage::kTranslation, std::string("adapter output: ") + e.what());
  }
}

}  // namespace s3aug
