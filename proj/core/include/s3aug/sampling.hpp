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

#ifndef S3AUG_SAMPLING_HPP_
#define S3AUG_SAMPLING_HPP_

#include <array>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "s3aug/taxonomy.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

// Replacement map from every replaceable id (stuff and merged stuff) to a
// stuff id. Drawn with replacement, so it is generally not a permutation.
class CategoryMap {
 public:
  CategoryMap() = default;
  explicit CategoryMap(std::map<int, int> mapping) : mapping_(std::move(mapping)) {}

  const std::map<int, int>& mapping() const { return mapping_; }
  bool has_source(int id) const { return mapping_.count(id) != 0; }
  int target(int id) const { return mapping_.at(id); }
  std::size_t size() const { return mapping_.size(); }

  // Per-id lookup: target for mapped ids, identity elsewhere.
  std::array<LabelId, kNumCategoryIds> lookup_table() const;

  // Domain equals replaceable_ids(table) and the image lies within stuff_ids(table).
  std::vector<std::string> validate(const CategoryTable& table) const;

  friend bool operator==(const CategoryMap&, const CategoryMap&) = default;

 private:
  std::map<int, int> mapping_;
};

// Two-column text, "source_id target_id" per line, ascending source.
void write_category_map(std::ostream& out, const CategoryMap& map);
CategoryMap read_category_map(std::istream& in);
void save_category_map(const std::filesystem::path& path, const CategoryMap& map);
CategoryMap load_category_map(const std::filesystem::path& path);

// Word-embedding source for semantic sampling. Implementations must be
// deterministic per name and return finite vectors of dimension().
class EmbeddingProvider {
 public:
  virtual ~EmbeddingProvider() = default;
  virtual std::size_t dimension() const = 0;
  // Throws Error(Stage::kSampling) when the name is not covered.
  virtual std::vector<double> embed(std::string_view name) const = 0;
};

// Reference provider: a unit vector drawn from a generator seeded with a
// stable hash of the name.
class HashEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit HashEmbeddingProvider(std::size_t dimension = 32) : dimension_(dimension) {}
  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed(std::string_view name) const override;

 private:
  std::size_t dimension_;
};

// Fixed name -> vector table, e.g. exported from a pretrained language model.
// Vectors are L2-normalized on construction.
class TableEmbeddingProvider final : public EmbeddingProvider {
 public:
  explicit TableEmbeddingProvider(std::unordered_map<std::string, std::vector<double>> table);

  // Text format, one category per line: name<TAB>v1 v2 ... vd
  static TableEmbeddingProvider load(const std::filesystem::path& path);

  std::size_t dimension() const override { return dimension_; }
  std::vector<double> embed(std::string_view name) const override;

 private:
  std::unordered_map<std::string, std::vector<double>> table_;
  std::size_t dimension_ = 0;
};

// Uniform draw of every target from the stuff ids, independently per source.
CategoryMap sample_random_map(const CategoryTable& table, std::uint64_t seed);

// p(c' | c) over stuff_ids(table), a softmax of cosine similarities between
// the embedding of c's name and each stuff name.
std::vector<double> semantic_distribution(const EmbeddingProvider& provider,
                                          const CategoryTable& table, int source_id);

// Precomputes every replaceable id's semantic distribution once; each
// sample() is then a single inverse-CDF draw per source.
class SemanticSampler {
 public:
  SemanticSampler(const EmbeddingProvider& provider, const CategoryTable& table);

  CategoryMap sample(std::uint64_t seed) const;
  const std::vector<double>& distribution(int source_id) const;
  const std::vector<int>& targets() const { return targets_; }

 private:
  std::vector<int> sources_;
  std::vector<int> targets_;
  std::vector<std::vector<double>> probabilities_;
  std::vector<std::vector<double>> cumulative_;
};

CategoryMap sample_semantic_map(const EmbeddingProvider& provider, const CategoryTable& table,
                                std::uint64_t seed);

// v_l2(x, y, t) = map(v_l1(x, y, t)) for mapped ids; every other id passes
// through unchanged. One map for all frames.
LabelVideo apply_map(const LabelVideo& labels, const CategoryMap& map);

}  // namespace s3aug

#endif  // S3AUG_SAMPLING_HPP_
