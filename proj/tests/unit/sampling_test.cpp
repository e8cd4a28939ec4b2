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

#include "s3aug/sampling.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <gtest/gtest.h>

#include "s3aug/error.hpp"
#include "test_support.hpp"

namespace s3aug {
namespace {

// One basis vector per replaceable id, so every pair of categories has
// cosine similarity 0 and each category has similarity 1 with itself.
TableEmbeddingProvider orthonormal_embeddings(const CategoryTable& table) {
  const auto ids = replaceable_ids(table);
  std::unordered_map<std::string, std::vector<double>> vectors;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    std::vector<double> v(ids.size(), 0.0);
    v[i] = 1.0;
    vectors.emplace(table.name(ids[i]), std::move(v));
  }
  return TableEmbeddingProvider(std::move(vectors));
}

TEST(Sampling, RandomMapClosure) {
  const auto& table = coco_category_table();
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto map = sample_random_map(table, seed);
    EXPECT_TRUE(map.validate(table).empty()) << seed;
    EXPECT_EQ(map.size(), 109u);
    EXPECT_FALSE(map.has_source(0));
    EXPECT_FALSE(map.has_source(kPersonId));
    EXPECT_TRUE(map.has_source(200));
  }
}

TEST(Sampling, RandomMapIsSeedDeterministic) {
  const auto& table = coco_category_table();
  EXPECT_EQ(sample_random_map(table, 9), sample_random_map(table, 9));
  EXPECT_NE(sample_random_map(table, 9), sample_random_map(table, 10));
}

TEST(Sampling, RandomMapIsUniformOverStuff) {
  const auto& table = coco_category_table();
  std::map<int, int> counts;
  const int draws = 100000;
  for (int s = 0; s < draws; ++s) ++counts[sample_random_map(table, mix_seed(1, s)).target(150)];
  ASSERT_EQ(counts.size(), 91u);
  for (const auto& [id, n] : counts) {
    EXPECT_EQ(table.kind(id), CategoryKind::kStuff);
    EXPECT_NEAR(n / double(draws), 1.0 / 91.0, 0.004) << id;
  }
}

TEST(Sampling, SemanticClosedFormWithOrthonormalEmbeddings) {
  const auto& table = coco_category_table();
  const auto provider = orthonormal_embeddings(table);
  const SemanticSampler sampler(provider, table);
  const double e = std::exp(1.0);
  const auto& targets = sampler.targets();
  ASSERT_EQ(targets.size(), 91u);

  const auto& p = sampler.distribution(120);
  double total = 0.0;
  for (std::size_t i = 0; i < targets.size(); ++i) {
    const double expected = targets[i] == 120 ? e / (e + 90.0) : 1.0 / (e + 90.0);
    EXPECT_NEAR(p[i], expected, 1e-12);
    total += p[i];
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
  EXPECT_NEAR(e / (e + 90.0), 0.0293, 5e-5);
  EXPECT_NEAR(1.0 / (e + 90.0), 0.01079, 5e-6);

  // Merged stuff is orthogonal to every target, hence uniform.
  for (double q : sampler.distribution(183)) EXPECT_NEAR(q, 1.0 / 91.0, 1e-12);
  EXPECT_EQ(semantic_distribution(provider, table, 120), p);
  EXPECT_THROW(sampler.distribution(kPersonId), Error);
}

TEST(Sampling, IdenticalEmbeddingsGiveUniform) {
  const auto& table = coco_category_table();
  std::unordered_map<std::string, std::vector<double>> vectors;
  for (int id : replaceable_ids(table)) vectors.emplace(table.name(id), std::vector<double>{1, 2});
  const TableEmbeddingProvider provider(std::move(vectors));
  for (double q : semantic_distribution(provider, table, 100)) EXPECT_NEAR(q, 1.0 / 91, 1e-12);
}

TEST(Sampling, SemanticEmpiricalSelfSelection) {
  const auto& table = coco_category_table();
  const auto provider = orthonormal_embeddings(table);
  const SemanticSampler sampler(provider, table);
  const int draws = 100000;
  int self = 0;
  for (int s = 0; s < draws; ++s) self += sampler.sample(mix_seed(2, s)).target(130) == 130;
  const double e = std::exp(1.0);
  EXPECT_NEAR(self / double(draws), e / (e + 90.0), 0.01);
}

TEST(Sampling, SemanticMapClosureAndDeterminism) {
  const auto& table = coco_category_table();
  const HashEmbeddingProvider provider;
  const SemanticSampler sampler(provider, table);
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto map = sampler.sample(seed);
    EXPECT_TRUE(map.validate(table).empty());
    EXPECT_EQ(map, sample_semantic_map(provider, table, seed));
  }
}

TEST(Sampling, MissingEmbeddingIsSamplingError) {
  const auto& table = coco_category_table();
  const TableEmbeddingProvider provider({{"grass-merged", {1.0, 0.0}}});
  try {
    SemanticSampler sampler(provider, table);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), Stage::kSampling);
  }
}

TEST(Sampling, EmbeddingFileLoads) {
  testing::TempDir dir("emb");
  std::ofstream(dir / "e.tsv") << "# comment\nsky-other-merged\t1 0 0\ngrass-merged\t0 3 4\n";
  const auto provider = TableEmbeddingProvider::load(dir / "e.tsv");
  EXPECT_EQ(provider.dimension(), 3u);
  const auto v = provider.embed("grass-merged");
  EXPECT_NEAR(v[1], 0.6, 1e-12);
  EXPECT_NEAR(v[2], 0.8, 1e-12);
  EXPECT_THROW(provider.embed("wall"), Error);
}

TEST(Sampling, ValidateReportsBrokenMaps) {
  const auto& table = coco_category_table();
  auto mapping = sample_random_map(table, 1).mapping();
  mapping[150] = 190;
  EXPECT_FALSE(CategoryMap(mapping).validate(table).empty());
  mapping.erase(150);
  EXPECT_FALSE(CategoryMap(mapping).validate(table).empty());
  mapping = sample_random_map(table, 1).mapping();
  mapping[5] = 100;
  EXPECT_FALSE(CategoryMap(mapping).validate(table).empty());
}

TEST(Sampling, CategoryMapTextRoundTrip) {
  const auto map = sample_random_map(coco_category_table(), 4);
  std::stringstream text;
  write_category_map(text, map);
  EXPECT_EQ(read_category_map(text), map);
  std::istringstream bad("92 100\n92 101\n");
  EXPECT_THROW(read_category_map(bad), Error);
}

TEST(Sampling, ApplyMapMatchesPointwiseOracle) {
  const auto& table = coco_category_table();
  const auto map = sample_random_map(table, 5);
  Rng rng(8);
  LabelVideo labels(3, 6, 7);
  for (auto& v : labels.values()) v = static_cast<LabelId>(rng.uniform_index(kNumCategoryIds));
  const LabelVideo out = apply_map(labels, map);
  ASSERT_EQ(out.shape(), labels.shape());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    const int id = labels.data()[i];
    const int expected = id >= kFirstStuffId ? map.target(id) : id;
    EXPECT_EQ(out.data()[i], expected);
    if (id <= kLastThingId) EXPECT_EQ(out.data()[i], id);
  }
}

TEST(Sampling, ApplyMapIsOneMapForAllFrames) {
  const auto map = sample_random_map(coco_category_table(), 6);
  LabelVideo labels(16, 2, 2, 140);
  const LabelVideo out = apply_map(labels, map);
  for (auto v : out.values()) EXPECT_EQ(v, map.target(140));
}

}  // namespace
}  // namespace s3aug
