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

#ifndef S3AUG_TOOLS_CLI_COMMANDS_HPP_
#define S3AUG_TOOLS_CLI_COMMANDS_HPP_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "s3aug/config.hpp"
#include "s3aug/error.hpp"

namespace s3aug::cli {

// Process exit codes. Every failure maps to the stage that raised it.
enum ExitCode : int {
  kExitOk = 0,
  kExitFailure = 1,
  kExitUsage = 2,
  kExitConfig = 3,
  kExitIo = 4,
  kExitValidation = 5,
  kExitSegmentation = 6,
  kExitSampling = 7,
  kExitTranslation = 8,
  kExitComposite = 9,
  kExitInput = 10,
};

int exit_code_for(Stage stage);

// Sweep CSV layout version, written in the first column of every row.
inline constexpr int kSweepSchemaVersion = 1;
inline constexpr const char* kSweepHeader =
    "schema_version,mode,p,batches,batch_size,augmented_batches,fraction_augmented,"
    "mean_flicker_shift,mean_flicker_noshift,person_preservation_rate,global_seed";

// Options shared by every command; fields left empty fall back to the config
// file, then S3AUG_SEED (seed only), then the built-in defaults.
struct CommonOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> mode;
  std::optional<bool> shift;
  std::optional<bool> paste;
  std::optional<double> p;
  std::string categories_path;
  std::string embeddings_path;
  std::string palette_path;
};

struct GenSceneOptions {
  CommonOptions common;
  std::filesystem::path out;
  std::size_t frames = 16;
  std::size_t height = 224;
  std::size_t width = 224;
  bool all_person = false;
};

struct AugmentOptions {
  CommonOptions common;
  std::filesystem::path input;
  std::filesystem::path out;
  std::filesystem::path manifest;  // replay source
  std::string backend = "mock";
  std::string video_id;
  int action_label = 0;
  bool dump_stages = false;
};

struct SweepOptions {
  CommonOptions common;
  std::filesystem::path input;
  std::filesystem::path out;
  std::vector<std::string> modes{"random", "semantic"};
  std::vector<double> p_grid{0.0, 0.2, 0.4, 0.6, 0.8, 1.0};
  std::size_t batches = 10000;
  std::size_t batch_size = 2;
};

struct FlickerOptions {
  CommonOptions common;
  std::filesystem::path input;
  std::filesystem::path mask;
  std::filesystem::path labels;
};

// Resolved configuration for a command: defaults <- S3AUG_SEED <- config file
// <- explicit flags.
S3AugConfig resolve_config(const CommonOptions& options);

int cmd_gen_scene(const GenSceneOptions& options, std::ostream& out);
int cmd_augment(const AugmentOptions& options, std::ostream& out);
int cmd_sweep(const SweepOptions& options, std::ostream& out);
int cmd_flicker(const FlickerOptions& options, std::ostream& out);

// Parses argv (argv[0] is the program name) and dispatches; errors are
// reported on `err` and turned into exit codes.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace s3aug::cli

#endif  // S3AUG_TOOLS_CLI_COMMANDS_HPP_
