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

#include <numeric>

#include <gtest/gtest.h>

#include "s3aug/error.hpp"
#include "s3aug/taxonomy.hpp"

namespace s3aug {
namespace {

std::size_t count(const Mask2D& mask) {
  return std::accumulate(mask.values().begin(), mask.values().end(), std::size_t{0});
}

TEST(Scene, SameSeedSameScene) {
  const Scene a = generate_scene(5, 6, 20, 30);
  const Scene b = generate_scene(5, 6, 20, 30);
  EXPECT_EQ(a.clip, b.clip);
  EXPECT_EQ(a.labels, b.labels);
  EXPECT_EQ(a.instances, b.instances);
  EXPECT_NE(generate_scene(6, 6, 20, 30).labels, a.labels);
}

TEST(Scene, MovingPersonKeepsItsArea) {
  SceneRecipe recipe;
  recipe.background = 120;
  recipe.shapes.push_back({kPersonId, ShapeForm::kRectangle, 2, 10, 8, 12, 2, 0});
  const Scene scene = generate_scene(7, 4, 32, 32, recipe);
  for (std::size_t t = 0; t < 4; ++t) {
    const Mask2D mask = shape_mask(scene, t, 1);
    EXPECT_EQ(count(mask), 96u);
    EXPECT_EQ(mask(10, 2 + 2 * t), 1);
    EXPECT_EQ(mask(10, 1 + 2 * t), 0);
    EXPECT_EQ(scene.labels(t, 10, 2 + 2 * t), kPersonId);
  }
}

TEST(Scene, RandomScenesRespectThePartition) {
  const auto& table = coco_category_table();
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Scene scene = generate_scene(seed, 8, 24, 24);
    bool has_person = false;
    for (std::size_t i = 0; i < scene.labels.size(); ++i) {
      const int label = scene.labels.data()[i];
      const bool thing = table.kind(label) == CategoryKind::kThing;
      ASSERT_NE(label, 0);
      ASSERT_EQ(thing, scene.instances.data()[i] != 0);
      has_person = has_person || label == kPersonId;
    }
    EXPECT_TRUE(has_person) << seed;
  }
}

TEST(Scene, StuffRegionsAreStatic) {
  SceneRecipe recipe;
  recipe.background = 100;
  recipe.regions.push_back({190, 0, 0, 6, 6});
  recipe.shapes.push_back({kPersonId, ShapeForm::kEllipse, 10, 10, 5, 7, 0, -1});
  const Scene scene = generate_scene(0, 5, 20, 20, recipe);
  for (std::size_t t = 0; t < 5; ++t) {
    EXPECT_EQ(scene.labels(t, 3, 3), 190);
    EXPECT_EQ(scene.labels(t, 19, 0), 100);
  }
}

TEST(Scene, AllPersonCoversTheFrame) {
  const Scene scene = generate_scene(0, 2, 9, 13, SceneRecipe::all_person(9, 13));
  for (auto v : scene.labels.values()) EXPECT_EQ(v, kPersonId);
  for (auto v : scene.instances.values()) EXPECT_EQ(v, 1);
}

TEST(Scene, InvalidRecipesAreRejected) {
  EXPECT_THROW(generate_scene(0, 0, 8, 8), Error);
  SceneRecipe recipe;
  recipe.shapes.push_back({kPersonId, ShapeForm::kRectangle, 0, 0, 4, 4, 3, 0});
  EXPECT_THROW(generate_scene(0, 4, 8, 8, recipe), Error);  // walks off the frame
  recipe.shapes[0].dx = 0;
  recipe.shapes[0].category = 150;
  EXPECT_THROW(generate_scene(0, 4, 8, 8, recipe), Error);
  recipe.shapes.clear();
  recipe.background = 5;
  EXPECT_THROW(generate_scene(0, 4, 8, 8, recipe), Error);
}

}  // namespace
}  // namespace s3aug
