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

#ifndef S3AUG_RNG_HPP_
#define S3AUG_RNG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace s3aug {

// FNV-1a over the bytes of `text`. Stable across platforms and runs.
std::uint64_t stable_hash(std::string_view text);

// splitmix64 finalizer applied to the combination of two words.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

// Per-video seed: a pure function of (global seed, video source id), so
// workers processing videos in any order reproduce sequential results.
std::uint64_t video_seed(std::uint64_t global_seed, std::string_view video_id);

// Seeded generator with distribution helpers defined directly on the raw
// 64-bit stream. std::uniform_*_distribution is implementation-defined, which
// would make seeded outputs differ between standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  // Uniform integer in [lo, hi] (inclusive).
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  // Uniform double in [0, 1) with 53 random bits.
  double uniform_real();

  bool bernoulli(double p) { return uniform_real() < p; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace s3aug

#endif  // S3AUG_RNG_HPP_
