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

#include "s3aug/taxonomy.hpp"

#include <array>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

constexpr std::array<const char*, kNumCategoryIds> kCocoNames = {
    "unlabeled",
    // things, 1..91
    "person", "bicycle", "car", "motorcycle", "airplane", "bus", "train", "truck", "boat",
    "traffic light", "fire hydrant", "street sign", "stop sign", "parking meter", "bench",
    "bird", "cat", "dog", "horse", "sheep", "cow", "elephant", "bear", "zebra", "giraffe",
    "hat", "backpack", "umbrella", "shoe", "eye glasses", "handbag", "tie", "suitcase",
    "frisbee", "skis", "snowboard", "sports ball", "kite", "baseball bat", "baseball glove",
    "skateboard", "surfboard", "tennis racket", "bottle", "plate", "wine glass", "cup", "fork",
    "knife", "spoon", "bowl", "banana", "apple", "sandwich", "orange", "broccoli", "carrot",
    "hot dog", "pizza", "donut", "cake", "chair", "couch", "potted plant", "bed", "mirror",
    "dining table", "window", "desk", "toilet", "door", "tv", "laptop", "mouse", "remote",
    "keyboard", "cell phone", "microwave", "oven", "toaster", "sink", "refrigerator", "blender",
    "book", "clock", "vase", "scissors", "teddy bear", "hair drier", "toothbrush", "hair brush",
    // stuff, 92..182
    "banner", "blanket", "branch", "bridge", "building-other", "bush", "cabinet", "cage",
    "cardboard", "carpet", "ceiling-other", "ceiling-tile", "cloth", "clothes", "clouds",
    "counter", "cupboard", "curtain", "desk-stuff", "dirt", "door-stuff", "fence",
    "floor-marble", "floor-other", "floor-stone", "floor-tile", "floor-wood", "flower", "fog",
    "food-other", "fruit", "furniture-other", "grass", "gravel", "ground-other", "hill",
    "house", "leaves", "light", "mat", "metal", "mirror-stuff", "moss", "mountain", "mud",
    "napkin", "net", "paper", "pavement", "pillow", "plant-other", "plastic", "platform",
    "playingfield", "railing", "railroad", "river", "road", "rock", "roof", "rug", "salad",
    "sand", "sea", "shelf", "sky-other", "skyscraper", "snow", "solid-other", "stairs",
    "stone", "straw", "structural-other", "table", "tent", "textile-other", "towel", "tree",
    "vegetable", "wall-brick", "wall-concrete", "wall-other", "wall-panel", "wall-stone",
    "wall-tile", "wall-wood", "water-other", "waterdrops", "window-blind", "window-other",
    "wood",
    // merged stuff, 183..200
    "other", "tree-merged", "fence-merged", "ceiling-merged", "sky-other-merged",
    "cabinet-merged", "table-merged", "floor-other-merged", "pavement-merged",
    "mountain-merged", "grass-merged", "dirt-merged", "paper-merged", "food-other-merged",
    "building-other-merged", "rock-merged", "wall-other-merged", "rug-merged",
};

[[noreturn]] void fail(const std::string& message) { throw Error(Stage::kInput, message); }

}  // namespace

std::string_view kind_name(CategoryKind kind) {
  switch (kind) {
    case CategoryKind::kUnlabeled: return "unlabeled";
    case CategoryKind::kThing: return "thing";
    case CategoryKind::kStuff: return "stuff";
    case CategoryKind::kMergedStuff: return "merged_stuff";
  }
  return "unknown";
}

CategoryKind parse_kind(std::string_view name) {
  if (name == "unlabeled") return CategoryKind::kUnlabeled;
  if (name == "thing") return CategoryKind::kThing;
  if (name == "stuff") return CategoryKind::kStuff;
  if (name == "merged_stuff") return CategoryKind::kMergedStuff;
  fail("unknown category kind '" + std::string(name) + "'");
}

CategoryKind expected_kind(int id) {
  if (id == kUnlabeledId) return CategoryKind::kUnlabeled;
  if (id <= kLastThingId) return CategoryKind::kThing;
  if (id <= kLastStuffId) return CategoryKind::kStuff;
  return CategoryKind::kMergedStuff;
}

CategoryTable CategoryTable::from_entries(std::map<int, CategoryEntry> entries) {
  for (const auto& [id, entry] : entries) {
    if (id < 0 || id > kMaxCategoryId) {
      fail("category id " + std::to_string(id) + ": id out of range 0.." +
           std::to_string(kMaxCategoryId));
    }
    if (entry.kind != expected_kind(id)) {
      fail("category id " + std::to_string(id) + ": partition violation, kind '" +
           std::string(kind_name(entry.kind)) + "' but the id range requires '" +
           std::string(kind_name(expected_kind(id))) + "'");
    }
    if (id >= 1 && entry.name.empty()) {
      fail("category id " + std::to_string(id) + ": empty name");
    }
  }
  for (int id = 0; id <= kMaxCategoryId; ++id) {
    if (!entries.count(id)) fail("category id " + std::to_string(id) + ": missing");
  }
  CategoryTable table;
  table.entries_ = std::move(entries);
  return table;
}

CategoryTable CategoryTable::restricted_to(std::initializer_list<CategoryKind> kinds) const {
  CategoryTable out;
  for (const auto& [id, entry] : entries_) {
    for (CategoryKind k : kinds) {
      if (entry.kind == k) {
        out.entries_.emplace(id, entry);
        break;
      }
    }
  }
  return out;
}

const CategoryEntry& CategoryTable::at(int id) const {
  auto it = entries_.find(id);
  if (it == entries_.end()) fail("category id " + std::to_string(id) + " not in table");
  return it->second;
}

std::vector<int> CategoryTable::ids_of_kind(CategoryKind kind) const {
  std::vector<int> ids;
  for (const auto& [id, entry] : entries_) {
    if (entry.kind == kind) ids.push_back(id);
  }
  return ids;
}

int CategoryTable::find(std::string_view name) const {
  for (const auto& [id, entry] : entries_) {
    if (entry.name == name) return id;
  }
  return -1;
}

CategoryTable parse_category_table(std::string_view json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(std::string("category file: parse failure: ") + e.what());
  }
  const nlohmann::json* records = &doc;
  if (doc.is_object()) {
    if (!doc.contains("categories")) fail("category file: object without 'categories'");
    records = &doc.at("categories");
  }
  if (!records->is_array()) fail("category file: expected a list of records");

  std::map<int, CategoryEntry> entries;
  for (const auto& record : *records) {
    if (!record.is_object() || !record.contains("id") || !record.contains("name") ||
        !record.contains("kind") || !record.at("id").is_number_integer() ||
        !record.at("name").is_string() || !record.at("kind").is_string()) {
      fail("category file: malformed record " + record.dump());
    }
    const int id = record.at("id").get<int>();
    if (id < 0 || id > kMaxCategoryId) {
      fail("category id " + std::to_string(id) + ": id out of range 0.." +
           std::to_string(kMaxCategoryId));
    }
    CategoryEntry entry{record.at("name").get<std::string>(),
                        parse_kind(record.at("kind").get<std::string>())};
    if (!entries.emplace(id, std::move(entry)).second) {
      fail("category id " + std::to_string(id) + ": duplicate id");
    }
  }
  return CategoryTable::from_entries(std::move(entries));
}

CategoryTable load_category_table(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) fail("cannot open category file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_category_table(buffer.str());
}

std::string category_table_to_json(const CategoryTable& table) {
  nlohmann::json records = nlohmann::json::array();
  for (const auto& [id, entry] : table.entries()) {
    records.push_back({{"id", id}, {"name", entry.name}, {"kind", kind_name(entry.kind)}});
  }
  nlohmann::json doc = {{"version", 1}, {"categories", records}};
  return doc.dump(1) + "\n";
}

const CategoryTable& coco_category_table() {
  static const CategoryTable table = [] {
    std::map<int, CategoryEntry> entries;
    for (int id = 0; id <= kMaxCategoryId; ++id) {
      entries.emplace(id, CategoryEntry{kCocoNames[id], expected_kind(id)});
    }
    return CategoryTable::from_entries(std::move(entries));
  }();
  return table;
}

std::vector<int> replaceable_ids(const CategoryTable& table) {
  std::vector<int> ids;
  for (const auto& [id, entry] : table.entries()) {
    if (entry.kind == CategoryKind::kStuff || entry.kind == CategoryKind::kMergedStuff) {
      ids.push_back(id);
    }
  }
  return ids;
}

std::vector<int> stuff_ids(const CategoryTable& table) {
  return table.ids_of_kind(CategoryKind::kStuff);
}

std::vector<int> merged_stuff_ids(const CategoryTable& table) {
  return table.ids_of_kind(CategoryKind::kMergedStuff);
}

std::vector<int> thing_ids(const CategoryTable& table) {
  return table.ids_of_kind(CategoryKind::kThing);
}

}  // namespace s3aug
