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

#include "s3aug/scene.hpp"

#include <algorithm>

#include "s3aug/error.hpp"
#include "s3aug/rng.hpp"

namespace s3aug {
namespace {

[[noreturn]] void scene_fail(const std::string& message) { throw Error(Stage::kInput, message); }

bool inside(long x, long y, long width, long height, long frame_w, long frame_h) {
  return width > 0 && height > 0 && x >= 0 && y >= 0 && x + width <= frame_w &&
         y + height <= frame_h;
}

void check_recipe(const SceneRecipe& recipe, std::size_t frames, std::size_t height,
                  std::size_t width) {
  const long fw = static_cast<long>(width), fh = static_cast<long>(height);
  if (recipe.background < kFirstStuffId || recipe.background > kMaxCategoryId) {
    scene_fail("background " + std::to_string(recipe.background) + " is not a stuff id");
  }
  for (std::size_t i = 0; i < recipe.regions.size(); ++i) {
    const auto& r = recipe.regions[i];
    if (r.category < kFirstStuffId || r.category > kMaxCategoryId) {
      scene_fail("region " + std::to_string(i) + ": category " + std::to_string(r.category) +
                 " is not a stuff id");
    }
    if (!inside(r.x, r.y, r.width, r.height, fw, fh)) {
      scene_fail("region " + std::to_string(i) + " exceeds the " + std::to_string(height) + "x" +
                 std::to_string(width) + " frame");
    }
  }
  const long last = static_cast<long>(frames) - 1;
  for (std::size_t i = 0; i < recipe.shapes.size(); ++i) {
    const auto& s = recipe.shapes[i];
    if (s.category < kFirstThingId || s.category > kLastThingId) {
      scene_fail("shape " + std::to_string(i) + ": category " + std::to_string(s.category) +
                 " is not a thing id");
    }
    if (!inside(s.x, s.y, s.width, s.height, fw, fh) ||
        !inside(s.x + s.dx * last, s.y + s.dy * last, s.width, s.height, fw, fh)) {
      scene_fail("shape " + std::to_string(i) + " leaves the " + std::to_string(height) + "x" +
                 std::to_string(width) + " frame within " + std::to_string(frames) + " frames");
    }
  }
}

bool shape_covers(const MovingShape& s, long x0, long y0, long px, long py) {
  if (px < x0 || py < y0 || px >= x0 + s.width || py >= y0 + s.height) return false;
  if (s.form == ShapeForm::kRectangle) return true;
  // Pixel centres inside the inscribed ellipse, in doubled coordinates to stay exact.
  const long ex = 2 * (px - x0) + 1 - s.width;
  const long ey = 2 * (py - y0) + 1 - s.height;
  return ex * ex * s.height * s.height + ey * ey * s.width * s.width <=
         static_cast<long>(s.width) * s.width * s.height * s.height;
}

// Start coordinate and velocity along one axis that keep an extent inside
// [0, limit) for `frames` frames.
std::pair<int, int> place_axis(Rng& rng, int extent, int limit, std::size_t frames) {
  int velocity = static_cast<int>(rng.uniform_int(-2, 2));
  const long travel = static_cast<long>(frames - 1) * velocity;
  long lo = std::max(0L, -travel);
  long hi = static_cast<long>(limit - extent) - std::max(0L, travel);
  if (lo > hi) {
    velocity = 0;
    lo = 0;
    hi = limit - extent;
  }
  return {static_cast<int>(rng.uniform_int(lo, hi)), velocity};
}

}  // namespace

SceneRecipe SceneRecipe::random(std::uint64_t seed, std::size_t frames, std::size_t height,
                                std::size_t width) {
  if (frames == 0 || height == 0 || width == 0) scene_fail("scene dims must be positive");
  Rng rng(mix_seed(seed, 0x5ce4e));
  const int h = static_cast<int>(height), w = static_cast<int>(width);
  SceneRecipe recipe;
  recipe.background = static_cast<int>(rng.uniform_int(kFirstStuffId, kLastStuffId));

  const auto region_count = rng.uniform_int(1, 3);
  for (long i = 0; i < region_count; ++i) {
    StuffRegion r;
    r.category = static_cast<int>(rng.uniform_int(kFirstStuffId, kMaxCategoryId));
    r.width = static_cast<int>(rng.uniform_int(std::max(1, w / 6), std::max(1, w / 3)));
    r.height = static_cast<int>(rng.uniform_int(std::max(1, h / 6), std::max(1, h / 3)));
    r.x = static_cast<int>(rng.uniform_int(0, w - r.width));
    r.y = static_cast<int>(rng.uniform_int(0, h - r.height));
    recipe.regions.push_back(r);
  }

  const auto shape_count = rng.uniform_int(1, 3);
  for (long i = 0; i < shape_count; ++i) {
    MovingShape s;
    s.category = i == 0 ? kPersonId : static_cast<int>(rng.uniform_int(2, kLastThingId));
    s.form = i == 0 || rng.bernoulli(0.5) ? ShapeForm::kRectangle : ShapeForm::kEllipse;
    s.width = static_cast<int>(rng.uniform_int(std::max(1, w / 8), std::max(1, w / 4)));
    s.height = static_cast<int>(rng.uniform_int(std::max(1, h / 6), std::max(1, h / 3)));
    std::tie(s.x, s.dx) = place_axis(rng, s.width, w, frames);
    std::tie(s.y, s.dy) = place_axis(rng, s.height, h, frames);
    recipe.shapes.push_back(s);
  }
  return recipe;
}

SceneRecipe SceneRecipe::all_person(std::size_t height, std::size_t width) {
  SceneRecipe recipe;
  MovingShape person;
  person.width = static_cast<int>(width);
  person.height = static_cast<int>(height);
  recipe.shapes.push_back(person);
  return recipe;
}

Scene generate_scene(std::uint64_t seed, std::size_t frames, std::size_t height,
                     std::size_t width, const std::optional<SceneRecipe>& recipe,
                     const Palette& palette) {
  if (frames == 0 || height == 0 || width == 0) {
    scene_fail("scene dims must be positive, got T=" + std::to_string(frames) +
               " H=" + std::to_string(height) + " W=" + std::to_string(width));
  }
  const SceneRecipe r = recipe ? *recipe : SceneRecipe::random(seed, frames, height, width);
  check_recipe(r, frames, height, width);

  Scene scene{VideoClip(frames, height, width), LabelVideo(frames, height, width),
              InstanceVideo(frames, height, width)};
  for (std::size_t t = 0; t < frames; ++t) {
    for (std::size_t y = 0; y < height; ++y) {
      for (std::size_t x = 0; x < width; ++x) {
        int label = r.background;
        std::uint16_t instance = 0;
        for (const auto& region : r.regions) {
          if (static_cast<long>(x) >= region.x && static_cast<long>(x) < region.x + region.width &&
              static_cast<long>(y) >= region.y && static_cast<long>(y) < region.y + region.height) {
            label = region.category;
          }
        }
        for (std::size_t k = 0; k < r.shapes.size(); ++k) {
          const auto& s = r.shapes[k];
          const long x0 = s.x + s.dx * static_cast<long>(t);
          const long y0 = s.y + s.dy * static_cast<long>(t);
          if (shape_covers(s, x0, y0, static_cast<long>(x), static_cast<long>(y))) {
            label = s.category;
            instance = static_cast<std::uint16_t>(k + 1);
          }
        }
        scene.labels(t, y, x) = static_cast<std::uint16_t>(label);
        scene.instances(t, y, x) = instance;
        for (std::size_t c = 0; c < 3; ++c) scene.clip(t, c, y, x) = palette.channel(label, c);
      }
    }
  }
  return scene;
}

Mask2D shape_mask(const Scene& scene, std::size_t t, std::uint16_t instance_id) {
  const std::size_t h = scene.instances.height(), w = scene.instances.width();
  Mask2D mask({h, w}, 0);
  for (std::size_t y = 0; y < h; ++y) {
    for (std::size_t x = 0; x < w; ++x) mask(y, x) = scene.instances(t, y, x) == instance_id;
  }
  return mask;
}

}  // namespace s3aug
