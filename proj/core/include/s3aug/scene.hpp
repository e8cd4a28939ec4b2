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

#ifndef S3AUG_SCENE_HPP_
#define S3AUG_SCENE_HPP_

#include <cstdint>
#include <optional>
#include <vector>

#include "s3aug/palette.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

enum class ShapeForm { kRectangle, kEllipse };

// A thing that translates by (dx, dy) pixels per frame. Its bounding box
// must stay inside the frame for every frame of the scene.
struct MovingShape {
  int category = kPersonId;
  ShapeForm form = ShapeForm::kRectangle;
  int x = 0;
  int y = 0;
  int width = 1;
  int height = 1;
  int dx = 0;
  int dy = 0;
};

// Static axis-aligned stuff rectangle.
struct StuffRegion {
  int category = kFirstStuffId;
  int x = 0;
  int y = 0;
  int width = 1;
  int height = 1;
};

struct SceneRecipe {
  int background = kFirstStuffId;
  std::vector<StuffRegion> regions;
  std::vector<MovingShape> shapes;

  // Stuff background, 1-3 static stuff regions, 1-3 moving things (the
  // first is always a person), all kept inside the frame for T frames.
  static SceneRecipe random(std::uint64_t seed, std::size_t frames, std::size_t height,
                            std::size_t width);

  // A static person covering the whole frame.
  static SceneRecipe all_person(std::size_t height, std::size_t width);
};

struct Scene {
  VideoClip clip;
  LabelVideo labels;
  InstanceVideo instances;
};

// Paints background, then regions, then shapes (later shapes on top). Shape
// k carries instance id k + 1. Pixel colour is palette.color(label).
// With no recipe one is drawn from `seed`. Throws Error(Stage::kInput) for
// non-positive dims or geometry leaving the frame.
Scene generate_scene(std::uint64_t seed, std::size_t frames, std::size_t height,
                     std::size_t width, const std::optional<SceneRecipe>& recipe = std::nullopt,
                     const Palette& palette = Palette());

// Pixels of shape k (by instance id k + 1) in frame t, for ground-truth checks.
Mask2D shape_mask(const Scene& scene, std::size_t t, std::uint16_t instance_id);

}  // namespace s3aug

#endif  // S3AUG_SCENE_HPP_
