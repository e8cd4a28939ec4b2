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

#include "s3aug/palette.hpp"

#include <fstream>
#include <istream>
#include <limits>
#include <ostream>
#include <set>
#include <sstream>
#include <string>

#include "s3aug/error.hpp"
#include "s3aug/rng.hpp"

namespace s3aug {

Palette::Palette() {
  colors_[kUnlabeledId] = {0, 0, 0};
  for (int id = 1; id < kNumCategoryIds; ++id) {
    const std::uint64_t h = mix_seed(0x5333417567ULL, static_cast<std::uint64_t>(id));
    // Mid-range channels keep noisy renderings away from the clamp.
    for (std::size_t c = 0; c < 3; ++c) {
      colors_[id][c] = static_cast<std::uint8_t>(32 + ((h >> (16 * c)) & 0xffff) % 192);
    }
  }
  colors_[kPersonId] = {220, 20, 60};
}

int Palette::nearest(const Rgb8& rgb) const {
  int best = 0;
  int best_distance = std::numeric_limits<int>::max();
  for (int id = 0; id < kNumCategoryIds; ++id) {
    int d = 0;
    for (std::size_t c = 0; c < 3; ++c) {
      const int diff = static_cast<int>(rgb[c]) - colors_[id][c];
      d += diff * diff;
    }
    if (d < best_distance) {
      best_distance = d;
      best = id;
    }
  }
  return best;
}

bool Palette::is_injective() const {
  std::set<Rgb8> seen(colors_.begin(), colors_.end());
  return seen.size() == colors_.size();
}

void Palette::write(std::ostream& out) const {
  for (int id = 0; id < kNumCategoryIds; ++id) {
    out << id << ' ' << int{colors_[id][0]} << ' ' << int{colors_[id][1]} << ' '
        << int{colors_[id][2]} << '\n';
  }
}

Palette Palette::read(std::istream& in) {
  std::array<Rgb8, kNumCategoryIds> colors{};
  std::array<bool, kNumCategoryIds> seen{};
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int id, r, g, b;
    if (!(fields >> id >> r >> g >> b) || id < 0 || id > kMaxCategoryId || r < 0 || r > 255 ||
        g < 0 || g > 255 || b < 0 || b > 255) {
      throw Error(Stage::kInput, "palette: malformed line '" + line + "'");
    }
    colors[id] = {static_cast<std::uint8_t>(r), static_cast<std::uint8_t>(g),
                  static_cast<std::uint8_t>(b)};
    seen[id] = true;
  }
  for (int id = 0; id < kNumCategoryIds; ++id) {
    if (!seen[id]) throw Error(Stage::kInput, "palette: missing id " + std::to_string(id));
  }
  return Palette(colors);
}

Palette Palette::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open palette " + path.string());
  return read(in);
}

}  // namespace s3aug
