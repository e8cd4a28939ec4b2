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

#include "s3aug/rng.hpp"

#include <set>
#include <vector>

#include <gtest/gtest.h>

namespace s3aug {
namespace {

TEST(Rng, StableHashIsFnv1a) {
  EXPECT_EQ(stable_hash(""), 0xcbf29ce484222325ULL);
  EXPECT_EQ(stable_hash("a"), 0xaf63dc4c8601ec8cULL);
}

TEST(Rng, SeedsAreDeterministicAndDistinct) {
  EXPECT_EQ(video_seed(1, "v_ApplyEyeMakeup_g01_c01"), video_seed(1, "v_ApplyEyeMakeup_g01_c01"));
  std::set<std::uint64_t> seen;
  for (std::uint64_t g = 0; g < 8; ++g) {
    for (const char* id : {"a", "b", "c", "clip-1", "clip-2"}) seen.insert(video_seed(g, id));
  }
  EXPECT_EQ(seen.size(), 40u);
  EXPECT_NE(mix_seed(1, 2), mix_seed(2, 1));
}

TEST(Rng, SequenceIsReproducible) {
  Rng a(42), b(42);
  for (int i = 0; i < 100; ++i) EXPECT_EQ(a.next(), b.next());
}

TEST(Rng, UniformIndexCoversRangeEvenly) {
  Rng rng(7);
  std::vector<int> counts(5, 0);
  const int draws = 50000;
  for (int i = 0; i < draws; ++i) {
    const auto k = rng.uniform_index(5);
    ASSERT_LT(k, 5u);
    ++counts[k];
  }
  for (int c : counts) EXPECT_NEAR(c / double(draws), 0.2, 0.01);
  EXPECT_EQ(rng.uniform_index(1), 0u);
}

TEST(Rng, UniformIntIsInclusive) {
  Rng rng(3);
  std::set<std::int64_t> seen;
  for (int i = 0; i < 1000; ++i) {
    const auto v = rng.uniform_int(-2, 2);
    ASSERT_GE(v, -2);
    ASSERT_LE(v, 2);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 5u);
}

TEST(Rng, UniformRealAndBernoulliEndpoints) {
  Rng rng(11);
  double sum = 0;
  for (int i = 0; i < 20000; ++i) {
    const double u = rng.uniform_real();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
    sum += u;
    ASSERT_FALSE(rng.bernoulli(0.0));
    ASSERT_TRUE(rng.bernoulli(1.0));
  }
  EXPECT_NEAR(sum / 20000, 0.5, 0.01);
}

}  // namespace
}  // namespace s3aug
