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

#ifndef S3AUG_TESTS_TEST_SUPPORT_HPP_
#define S3AUG_TESTS_TEST_SUPPORT_HPP_

#include <atomic>
#include <filesystem>
#include <string>

#include <unistd.h>

#include "s3aug/rng.hpp"
#include "s3aug/video.hpp"

namespace s3aug::testing {

// Scratch directory removed on destruction.
class TempDir {
 public:
  explicit TempDir(const std::string& tag = "t") {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("s3aug-" + tag + "-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir&) = delete;
  TempDir& operator=(const TempDir&) = delete;
  const std::filesystem::path& path() const { return path_; }
  std::filesystem::path operator/(const std::string& name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

inline VideoClip random_clip(std::uint64_t seed, std::size_t t, std::size_t h, std::size_t w) {
  Rng rng(seed);
  VideoClip clip(t, h, w);
  for (auto& v : clip.values()) v = static_cast<float>(rng.uniform_real());
  return clip;
}

inline FeatureMap random_features(Rng& rng, std::size_t t, std::size_t c, std::size_t h,
                                  std::size_t w) {
  FeatureMap f(t, c, h, w);
  for (auto& v : f.values()) v = static_cast<float>(rng.uniform_real() * 2.0 - 1.0);
  return f;
}

}  // namespace s3aug::testing

#endif  // S3AUG_TESTS_TEST_SUPPORT_HPP_
