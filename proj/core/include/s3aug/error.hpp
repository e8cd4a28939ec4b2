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

#ifndef S3AUG_ERROR_HPP_
#define S3AUG_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace s3aug {

// Pipeline stage an error originated from. The CLI maps these onto exit codes.
enum class Stage {
  kInput,
  kConfig,
  kIo,
  kValidation,
  kSegmentation,
  kSampling,
  kTranslation,
  kComposite,
};

std::string_view stage_name(Stage stage);

class Error : public std::runtime_error {
 public:
  Error(Stage stage, const std::string& message)
      : std::runtime_error(std::string(stage_name(stage)) + ": " + message),
        stage_(stage) {}

  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

}  // namespace s3aug

#endif  // S3AUG_ERROR_HPP_
