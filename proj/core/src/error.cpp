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

#include "s3aug/error.hpp"

namespace s3aug {

std::string_view stage_name(Stage stage) {
  switch (stage) {
    case Stage::kInput: return "input";
    case Stage::kConfig: return "config";
    case Stage::kIo: return "io";
    case Stage::kValidation: return "validation";
    case Stage::kSegmentation: return "segmentation";
    case Stage::kSampling: return "sampling";
    case Stage::kTranslation: return "translation";
    case Stage::kComposite: return "composite";
  }
  return "unknown";
}

}  // namespace s3aug
