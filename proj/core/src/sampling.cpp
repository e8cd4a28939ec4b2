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

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "s3aug/error.hpp"
#include "s3aug/rng.hpp"

namespace s3aug {
namespace {

[[noreturn]] void sampling_fail(const std::string& message) {
  throw Error(Stage::kSampling, message);
}

std::vector<double> normalized(std::vector<double> v, std::string_view name) {
  double norm = 0.0;
  for (double x : v) {
    if (!std::isfinite(x)) sampling_fail("non-finite embedding for '" + std::string(name) + "'");
    norm += x * x;
  }
  norm = std::sqrt(norm);
  if (norm == 0.0) sampling_fail("zero embedding for '" + std::string(name) + "'");
  for (double& x : v) x /= norm;
  return v;
}

std::vector<double> checked_embedding(const EmbeddingProvider& provider, std::string_view name) {
  std::vector<double> v = provider.embed(name);
  if (v.size() != provider.dimension()) {
    sampling_fail("embedding for '" + std::string(name) + "' has dimension " +
                  std::to_string(v.size()) + ", expected " +
                  std::to_string(provider.dimension()));
  }
  return normalized(std::move(v), name);
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Softmax of the cosine similarities between `source` and each target.
std::vector<double> softmax_similarity(const std::vector<double>& source,
                                       const std::vector<std::vector<double>>& targets) {
  std::vector<double> logits(targets.size());
  for (std::size_t i = 0; i < targets.size(); ++i) logits[i] = dot(source, targets[i]);
  const double peak = *std::max_element(logits.begin(), logits.end());
  double total = 0.0;
  for (double& l : logits) {
    l = std::exp(l - peak);
    total += l;
  }
  for (double& l : logits) l /= total;
  return logits;
}

}  // namespace

std::array<LabelId, kNumCategoryIds> CategoryMap::lookup_table() const {
  std::array<LabelId, kNumCategoryIds> lut{};
  for (int id = 0; id < kNumCategoryIds; ++id) lut[id] = static_cast<LabelId>(id);
  for (const auto& [source, target] : mapping_) {
    if (source >= 0 && source < kNumCategoryIds) lut[source] = static_cast<LabelId>(target);
  }
  return lut;
}

std::vector<std::string> CategoryMap::validate(const CategoryTable& table) const {
  std::vector<std::string> errors;
  const auto domain = replaceable_ids(table);
  std::vector<int> keys;
  for (const auto& [source, target] : mapping_) keys.push_back(source);
  if (keys != domain) errors.push_back("category map: domain is not the replaceable id set");
  for (const auto& [source, target] : mapping_) {
    if (!table.contains(target) || table.kind(target) != CategoryKind::kStuff) {
      errors.push_back("category map: " + std::to_string(source) + " -> " +
                       std::to_string(target) + " leaves the stuff ids");
    }
  }
  return errors;
}

void write_category_map(std::ostream& out, const CategoryMap& map) {
  for (const auto& [source, target] : map.mapping()) out << source << ' ' << target << '\n';
}

CategoryMap read_category_map(std::istream& in) {
  std::map<int, int> mapping;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    int source = 0, target = 0;
    if (!(fields >> source >> target)) {
      sampling_fail("category map line " + std::to_string(line_no) + ": expected two ids");
    }
    if (!mapping.emplace(source, target).second) {
      sampling_fail("category map: duplicate source id " + std::to_string(source));
    }
  }
  return CategoryMap(std::move(mapping));
}

void save_category_map(const std::filesystem::path& path, const CategoryMap& map) {
  std::ofstream out(path);
  if (!out) throw Error(Stage::kIo, "cannot write " + path.string());
  write_category_map(out, map);
}

CategoryMap load_category_map(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open " + path.string());
  return read_category_map(in);
}

std::vector<double> HashEmbeddingProvider::embed(std::string_view name) const {
  Rng rng(stable_hash(name));
  std::vector<double> v(dimension_);
  // Box-Muller on raw uniforms gives an isotropic direction after normalization.
  for (std::size_t i = 0; i < dimension_; ++i) {
    const double u1 = 1.0 - rng.uniform_real();
    const double u2 = rng.uniform_real();
    v[i] = std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
  }
  return normalized(std::move(v), name);
}

TableEmbeddingProvider::TableEmbeddingProvider(
    std::unordered_map<std::string, std::vector<double>> table) {
  for (auto& [name, vec] : table) {
    if (dimension_ == 0) dimension_ = vec.size();
    if (vec.size() != dimension_ || vec.empty()) {
      sampling_fail("embedding table: inconsistent dimension for '" + name + "'");
    }
    table_.emplace(name, normalized(std::move(vec), name));
  }
}

TableEmbeddingProvider TableEmbeddingProvider::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open " + path.string());
  std::unordered_map<std::string, std::vector<double>> table;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto tab = line.find('\t');
    if (tab == std::string::npos) sampling_fail("embedding file: missing tab in '" + line + "'");
    std::istringstream fields(line.substr(tab + 1));
    std::vector<double> vec;
    double x;
    while (fields >> x) vec.push_back(x);
    table[line.substr(0, tab)] = std::move(vec);
  }
  return TableEmbeddingProvider(std::move(table));
}

std::vector<double> TableEmbeddingProvider::embed(std::string_view name) const {
  auto it = table_.find(std::string(name));
  if (it == table_.end()) sampling_fail("missing embedding for category '" + std::string(name) + "'");
  return it->second;
}

CategoryMap sample_random_map(const CategoryTable& table, std::uint64_t seed) {
  const auto targets = stuff_ids(table);
  std::map<int, int> mapping;
  const auto sources = replaceable_ids(table);
  if (sources.empty()) return CategoryMap{};
  if (targets.empty()) sampling_fail("table has no stuff ids to sample from");
  Rng rng(seed);
  for (int source : sources) mapping[source] = targets[rng.uniform_index(targets.size())];
  return CategoryMap(std::move(mapping));
}

std::vector<double> semantic_distribution(const EmbeddingProvider& provider,
                                          const CategoryTable& table, int source_id) {
  const auto targets = stuff_ids(table);
  if (targets.empty()) sampling_fail("table has no stuff ids to sample from");
  std::vector<std::vector<double>> target_vecs;
  target_vecs.reserve(targets.size());
  for (int id : targets) target_vecs.push_back(checked_embedding(provider, table.name(id)));
  return softmax_similarity(checked_embedding(provider, table.name(source_id)), target_vecs);
}

SemanticSampler::SemanticSampler(const EmbeddingProvider& provider, const CategoryTable& table)
    : sources_(replaceable_ids(table)), targets_(stuff_ids(table)) {
  if (sources_.empty()) return;
  if (targets_.empty()) sampling_fail("table has no stuff ids to sample from");
  std::vector<std::vector<double>> target_vecs;
  target_vecs.reserve(targets_.size());
  for (int id : targets_) target_vecs.push_back(checked_embedding(provider, table.name(id)));
  for (int source : sources_) {
    auto probs = softmax_similarity(checked_embedding(provider, table.name(source)), target_vecs);
    std::vector<double> cdf(probs.size());
    double running = 0.0;
    for (std::size_t i = 0; i < probs.size(); ++i) cdf[i] = running += probs[i];
    probabilities_.push_back(std::move(probs));
    cumulative_.push_back(std::move(cdf));
  }
}

const std::vector<double>& SemanticSampler::distribution(int source_id) const {
  auto it = std::lower_bound(sources_.begin(), sources_.end(), source_id);
  if (it == sources_.end() || *it != source_id) {
    sampling_fail("id " + std::to_string(source_id) + " is not replaceable");
  }
  return probabilities_[static_cast<std::size_t>(it - sources_.begin())];
}

CategoryMap SemanticSampler::sample(std::uint64_t seed) const {
  Rng rng(seed);
  std::map<int, int> mapping;
  for (std::size_t s = 0; s < sources_.size(); ++s) {
    const auto& cdf = cumulative_[s];
    // Scale by the final sum so rounding in the running total cannot leave a gap.
    const double u = rng.uniform_real() * cdf.back();
    const auto pos = std::upper_bound(cdf.begin(), cdf.end(), u) - cdf.begin();
    const auto index = std::min<std::size_t>(static_cast<std::size_t>(pos), cdf.size() - 1);
    mapping[sources_[s]] = targets_[index];
  }
  return CategoryMap(std::move(mapping));
}

CategoryMap sample_semantic_map(const EmbeddingProvider& provider, const CategoryTable& table,
                                std::uint64_t seed) {
  return SemanticSampler(provider, table).sample(seed);
}

LabelVideo apply_map(const LabelVideo& labels, const CategoryMap& map) {
  const auto lut = map.lookup_table();
  LabelVideo out = labels;
  for (LabelId& id : out.values()) {
    if (id < kNumCategoryIds) id = lut[id];
  }
  return out;
}

}  // namespace s3aug
