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

#include "s3aug/pipeline.hpp"

#include <chrono>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

// Runs `fn`, re-raising any failure as an Error tagged with `stage`.
template <typename Fn>
auto in_stage(Stage stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    if (e.stage() == stage) throw;
    throw Error(stage, e.what());
  } catch (const std::exception& e) {
    throw Error(stage, e.what());
  }
}

class StageTimer {
 public:
  StageTimer(std::map<std::string, double>& sink, std::string name)
      : sink_(sink), name_(std::move(name)), start_(std::chrono::steady_clock::now()) {}
  ~StageTimer() {
    const auto elapsed = std::chrono::steady_clock::now() - start_;
    sink_[name_] += std::chrono::duration<double, std::milli>(elapsed).count();
  }

 private:
  std::map<std::string, double>& sink_;
  std::string name_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace

Augmenter::Augmenter(const SegmentationBackend& segmenter, const TranslationBackend& translator,
                     const EmbeddingProvider& embeddings, const CategoryTable& table,
                     S3AugConfig cfg)
    : segmenter_(segmenter),
      translator_(translator),
      embeddings_(embeddings),
      table_(table),
      cfg_(cfg) {
  const auto errors = cfg_.validate();
  if (!errors.empty()) throw Error(Stage::kConfig, errors.front());
  if (cfg_.sampling_mode == SamplingMode::kSemantic) {
    semantic_ = in_stage(Stage::kSampling,
                         [&] { return std::make_unique<SemanticSampler>(embeddings_, table_); });
  }
}

std::optional<CategoryMap> Augmenter::category_map_for(const std::string& video_id) const {
  const std::uint64_t seed = video_seed(cfg_.global_seed, video_id);
  switch (cfg_.sampling_mode) {
    case SamplingMode::kNone:
      return std::nullopt;
    case SamplingMode::kRandom:
      return sample_random_map(table_, seed);
    case SamplingMode::kSemantic:
      return semantic_->sample(seed);
  }
  return std::nullopt;
}

AugmentStages Augmenter::run(const ClipSample& sample) const {
  AugmentStages stages;
  stages.video_seed = video_seed(cfg_.global_seed, sample.source_id);
  {
    StageTimer timer(stages.timings_ms, "segmentation");
    auto segmented =
        in_stage(Stage::kSegmentation, [&] { return segment_video(segmenter_, sample.clip); });
    stages.v_l1 = std::move(segmented.labels);
    stages.instances = std::move(segmented.instances);
  }
  {
    StageTimer timer(stages.timings_ms, "sampling");
    stages.category_map =
        in_stage(Stage::kSampling, [&] { return category_map_for(sample.source_id); });
    stages.v_l2 = stages.category_map ? apply_map(stages.v_l1, *stages.category_map)
                                      : stages.v_l1;
  }
  {
    StageTimer timer(stages.timings_ms, "translation");
    stages.v_f1 = in_stage(Stage::kTranslation, [&] {
      return translator_.generate(stages.v_l2, stages.instances, cfg_.shift_enabled);
    });
    const auto errors = validate_aligned(stages.v_f1, stages.v_l2, stages.instances);
    if (!errors.empty()) {
      throw Error(Stage::kTranslation,
                  "backend '" + translator_.name() + "' produced invalid output: " + errors.front());
    }
  }
  {
    StageTimer timer(stages.timings_ms, "composite");
    if (cfg_.person_paste_enabled) {
      stages.v_f2 = in_stage(Stage::kComposite, [&] {
        return paste_person(sample.clip, stages.v_f1,
                            person_mask(stages.v_l1, table_, cfg_.person_id));
      });
    } else {
      stages.v_f2 = stages.v_f1;
    }
  }
  return stages;
}

ClipSample Augmenter::augment_clip(const ClipSample& sample) const {
  return {run(sample).v_f2, sample.action_label, sample.source_id};
}

Augmenter::BatchResult Augmenter::augment_batch(const std::vector<ClipSample>& batch,
                                                Rng& batch_rng) const {
  if (batch.empty()) throw Error(Stage::kInput, "empty batch");
  BatchResult result;
  result.clips.reserve(batch.size());
  const bool batch_draw = cfg_.per_sample_bernoulli ? false : batch_rng.bernoulli(cfg_.p);
  for (const auto& sample : batch) {
    const bool augment = cfg_.per_sample_bernoulli ? batch_rng.bernoulli(cfg_.p) : batch_draw;
    result.clips.push_back(augment ? augment_clip(sample) : sample);
    result.augmented.push_back(augment);
  }
  return result;
}

ClipSample augment_clip(const ClipSample& sample, const SegmentationBackend& segmenter,
                        const TranslationBackend& translator,
                        const EmbeddingProvider& embeddings, const S3AugConfig& cfg,
                        const CategoryTable& table) {
  return Augmenter(segmenter, translator, embeddings, table, cfg).augment_clip(sample);
}

std::vector<ClipSample> augment_batch(const std::vector<ClipSample>& batch,
                                      const SegmentationBackend& segmenter,
                                      const TranslationBackend& translator,
                                      const EmbeddingProvider& embeddings,
                                      const S3AugConfig& cfg, Rng& batch_rng,
                                      const CategoryTable& table) {
  return Augmenter(segmenter, translator, embeddings, table, cfg)
      .augment_batch(batch, batch_rng)
      .clips;
}

}  // namespace s3aug
