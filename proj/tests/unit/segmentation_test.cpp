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

#include "s3aug/segmentation.hpp"

#include <fstream>
#include <functional>
#include <sstream>

#include <gtest/gtest.h>

#include "s3aug/error.hpp"
#include "s3aug/scene.hpp"
#include "test_support.hpp"

namespace s3aug {
namespace {

std::string error_text(const std::function<void()>& fn, Stage expected) {
  try {
    fn();
  } catch (const Error& e) {
    EXPECT_EQ(e.stage(), expected);
    return e.what();
  }
  ADD_FAILURE() << "no error thrown";
  return {};
}

// Returns a mis-sized label image for one frame.
class BrokenBackend final : public SegmentationBackend {
 public:
  explicit BrokenBackend(std::size_t bad_frame) : bad_frame_(bad_frame) {}
  std::string name() const override { return "broken"; }
  FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const override {
    const std::size_t h = frame.dim(1), w = frame.dim(2) + (t == bad_frame_ ? 1 : 0);
    return {IdImage({h, w}, 100), IdImage({h, w}, 0)};
  }

 private:
  std::size_t bad_frame_;
};

class ThrowingBackend final : public SegmentationBackend {
 public:
  std::string name() const override { return "throwing"; }
  FrameSegmentation segment_frame(std::size_t t, const Frame& frame) const override {
    if (t == 1) throw std::runtime_error("model crashed");
    return {IdImage({frame.dim(1), frame.dim(2)}, 100), IdImage({frame.dim(1), frame.dim(2)})};
  }
};

TEST(Segmentation, PrecomputedReturnsStoredVideos) {
  const Scene scene = generate_scene(3, 4, 16, 16);
  const PrecomputedSegmentation backend(scene.labels, scene.instances);
  const auto out = segment_video(backend, scene.clip);
  EXPECT_EQ(out.labels, scene.labels);
  EXPECT_EQ(out.instances, scene.instances);
}

TEST(Segmentation, PrecomputedFrameCountMismatch) {
  const Scene scene = generate_scene(3, 4, 8, 8);
  const PrecomputedSegmentation backend(LabelVideo(2, 8, 8, 100), InstanceVideo(2, 8, 8));
  const auto msg = error_text([&] { segment_video(backend, scene.clip); }, Stage::kSegmentation);
  EXPECT_NE(msg.find("frame 2"), std::string::npos) << msg;
  EXPECT_THROW(PrecomputedSegmentation(LabelVideo(2, 8, 8), InstanceVideo(2, 8, 7)), Error);
}

TEST(Segmentation, ShapeErrorNamesTheFrame) {
  const VideoClip clip(4, 6, 6);
  const auto msg = error_text([&] { segment_video(BrokenBackend(2), clip); },
                              Stage::kSegmentation);
  EXPECT_NE(msg.find("frame 2"), std::string::npos) << msg;
  EXPECT_NE(msg.find("broken"), std::string::npos) << msg;
}

TEST(Segmentation, BackendExceptionsAreWrapped) {
  const auto msg = error_text([&] { segment_video(ThrowingBackend(), VideoClip(3, 2, 2)); },
                              Stage::kSegmentation);
  EXPECT_NE(msg.find("frame 1"), std::string::npos) << msg;
  EXPECT_NE(msg.find("model crashed"), std::string::npos) << msg;
}

TEST(Segmentation, OutOfRangeLabelsAreRejected) {
  const PrecomputedSegmentation backend(LabelVideo(1, 2, 2, 250), InstanceVideo(1, 2, 2));
  EXPECT_THROW(segment_video(backend, VideoClip(1, 2, 2)), Error);
}

TEST(Segmentation, IdRemapTable) {
  testing::TempDir dir("remap");
  std::ofstream(dir / "remap.txt") << "# native canonical\n0 0\n7 1\n19 120\n";
  const auto table = IdRemapTable::load(dir / "remap.txt");
  EXPECT_EQ(table.remap(7), 1);
  EXPECT_EQ(table.remap(19), 120);
  const auto msg = error_text([&] { table.remap(8); }, Stage::kSegmentation);
  EXPECT_NE(msg.find("8"), std::string::npos);

  LabelVideo native(1, 1, 3);
  native(0, 0, 0) = 7;
  native(0, 0, 1) = 19;
  const PrecomputedSegmentation backend(native, InstanceVideo(1, 1, 3), table);
  const auto out = segment_video(backend, VideoClip(1, 1, 3));
  EXPECT_EQ(out.labels(0, 0, 0), 1);
  EXPECT_EQ(out.labels(0, 0, 1), 120);
  EXPECT_EQ(out.labels(0, 0, 2), 0);

  table.save(dir / "copy.txt");
  EXPECT_EQ(IdRemapTable::load(dir / "copy.txt").mapping(), table.mapping());
  EXPECT_THROW(IdRemapTable(std::map<int, int>{{1, 201}}), Error);
}

TEST(Segmentation, PaletteDecodingRecoversSceneLabels) {
  const auto& table = coco_category_table();
  const PaletteSegmentation backend(Palette(), table);
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const Scene scene = generate_scene(seed, 3, 24, 32);
    EXPECT_EQ(segment_video(backend, scene.clip).labels, scene.labels) << seed;
  }
}

TEST(Segmentation, ConnectedComponentsInRasterOrder) {
  std::array<bool, kNumCategoryIds> is_thing{};
  is_thing[1] = is_thing[3] = true;
  IdImage labels({3, 5}, 100);
  // Two separate persons and one car touching the second person.
  labels(0, 0) = 1;
  labels(1, 0) = 1;
  labels(0, 3) = 1;
  labels(0, 4) = 1;
  labels(1, 4) = 3;
  const IdImage inst = label_instances(labels, is_thing);
  EXPECT_EQ(inst(0, 0), 1);
  EXPECT_EQ(inst(1, 0), 1);
  EXPECT_EQ(inst(0, 3), 2);
  EXPECT_EQ(inst(0, 4), 2);
  EXPECT_EQ(inst(1, 4), 3);
  EXPECT_EQ(inst(2, 2), 0);
}

TEST(Palette, DefaultIsInjectiveAndRoundTrips) {
  const Palette palette;
  EXPECT_TRUE(palette.is_injective());
  EXPECT_EQ(palette.color(0), (Rgb8{0, 0, 0}));
  EXPECT_EQ(palette.color(kPersonId), (Rgb8{220, 20, 60}));
  for (int id = 0; id <= kMaxCategoryId; ++id) EXPECT_EQ(palette.nearest(palette.color(id)), id);
  std::stringstream text;
  palette.write(text);
  const Palette copy = Palette::read(text);
  for (int id = 0; id <= kMaxCategoryId; ++id) EXPECT_EQ(copy.color(id), palette.color(id));
}

}  // namespace
}  // namespace s3aug
