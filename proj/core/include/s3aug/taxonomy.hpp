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

#ifndef S3AUG_TAXONOMY_HPP_
#define S3AUG_TAXONOMY_HPP_

#include <filesystem>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace s3aug {

// COCO panoptic id space used as the pipeline's internal label space:
//   0          unlabeled
//   1..91      things
//   92..182    stuff
//   183..200   merged stuff
inline constexpr int kUnlabeledId = 0;
inline constexpr int kFirstThingId = 1;
inline constexpr int kLastThingId = 91;
inline constexpr int kFirstStuffId = 92;
inline constexpr int kLastStuffId = 182;
inline constexpr int kFirstMergedStuffId = 183;
inline constexpr int kMaxCategoryId = 200;
inline constexpr int kNumCategoryIds = kMaxCategoryId + 1;
inline constexpr int kPersonId = 1;

enum class CategoryKind { kUnlabeled, kThing, kStuff, kMergedStuff };

std::string_view kind_name(CategoryKind kind);
CategoryKind parse_kind(std::string_view name);

// Kind an id must carry in the canonical partition. `id` must be in 0..200.
CategoryKind expected_kind(int id);

struct CategoryEntry {
  std::string name;
  CategoryKind kind = CategoryKind::kUnlabeled;
};

// Immutable after construction.
class CategoryTable {
 public:
  CategoryTable() = default;

  // Validates the full partition: every id in 0..200 exactly once, kinds on
  // the canonical boundaries, names non-empty for ids >= 1. Throws Error
  // naming the offending id.
  static CategoryTable from_entries(std::map<int, CategoryEntry> entries);

  // Sub-table holding only the given kinds. Skips the completeness check and
  // is intended for queries such as "replaceable ids among things only".
  CategoryTable restricted_to(std::initializer_list<CategoryKind> kinds) const;

  bool contains(int id) const { return entries_.count(id) != 0; }
  const CategoryEntry& at(int id) const;
  const std::string& name(int id) const { return at(id).name; }
  CategoryKind kind(int id) const { return at(id).kind; }
  std::size_t size() const { return entries_.size(); }
  const std::map<int, CategoryEntry>& entries() const { return entries_; }

  // Ascending ids of the given kind.
  std::vector<int> ids_of_kind(CategoryKind kind) const;

  // Lookup by name. Returns -1 when absent.
  int find(std::string_view name) const;

 private:
  std::map<int, CategoryEntry> entries_;
};

// Parses a category-definition document: either a JSON list of
// {"id", "name", "kind"} records or an object {"version": n, "categories": [...]}.
CategoryTable parse_category_table(std::string_view json_text);
CategoryTable load_category_table(const std::filesystem::path& path);

// Serializes to the versioned object form.
std::string category_table_to_json(const CategoryTable& table);

// Compiled-in copy of the shipped COCO panoptic fixture.
const CategoryTable& coco_category_table();

// Stuff and merged-stuff ids, ascending. These are the ids category sampling
// replaces; things (person included) and unlabeled never appear.
std::vector<int> replaceable_ids(const CategoryTable& table);

// Stuff ids, ascending: the codomain of category sampling.
std::vector<int> stuff_ids(const CategoryTable& table);

std::vector<int> merged_stuff_ids(const CategoryTable& table);
std::vector<int> thing_ids(const CategoryTable& table);

}  // namespace s3aug

#endif  // S3AUG_TAXONOMY_HPP_
