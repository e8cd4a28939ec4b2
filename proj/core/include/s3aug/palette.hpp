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

#ifndef S3AUG_PALETTE_HPP_
#define S3AUG_PALETTE_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>

#include "s3aug/taxonomy.hpp"

namespace s3aug {

using Rgb8 = std::array<std::uint8_t, 3>;

// Category id -> 8-bit RGB colour. The default palette is injective over
// 0..200, so colour-coded label frames can be decoded back exactly.
class Palette {
 public:
  Palette();  // default palette
  explicit Palette(const std::array<Rgb8, kNumCategoryIds>& colors) : colors_(colors) {}

  const Rgb8& color(int id) const { return colors_.at(static_cast<std::size_t>(id)); }

  // Normalized channel value, k / 255.
  float channel(int id, std::size_t c) const { return colors_[id][c] / 255.0f; }

  // Id whose colour is nearest (squared distance, lowest id on ties).
  int nearest(const Rgb8& rgb) const;

  bool is_injective() const;

  // Text format: "id r g b" per line, all 201 ids.
  void write(std::ostream& out) const;
  static Palette read(std::istream& in);
  static Palette load(const std::filesystem::path& path);

 private:
  std::array<Rgb8, kNumCategoryIds> colors_{};
};

}  // namespace s3aug

#endif  // S3AUG_PALETTE_HPP_
