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

#ifndef S3AUG_PIPELINE_HPP_
#define S3AUG_PIPELINE_HPP_

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "s3aug/composite.hpp"
#include "s3aug/config.hpp"
#include "s3aug/rng.hpp"
#include "s3aug/sampling.hpp"
#include "s3aug/segmentation.hpp"
#include "s3aug/taxonomy.hpp"
#include "s3aug/translation.hpp"
#include "s3aug/video.hpp"

namespace s3aug {

// Every intermediate of one augmented clip.
struct AugmentStages {
  std::uint64_t video_seed = 0;
  LabelVideo v_l1;
  InstanceVideo instances;
  std::optional<CategoryMap> category_map;  // empty for SamplingMode::kNone
  LabelVideo v_l2;
  VideoClip v_f1;
  VideoClip v_f2;
  std::map<std::string, double> timings_ms;
};

// Segment -> sample one map per video -> apply -> translate -> paste.
//
// Holds references to the backends; they must outlive the augmenter. Clips
// for different videos may be augmented concurrently when the backends are
// reentrant.
class Augmenter {
 public:
  Augmenter(const SegmentationBackend& segmenter, const TranslationBackend& translator,
            const EmbeddingProvider& embeddings, const CategoryTable& table, S3AugConfig cfg);

  const S3AugConfig& config() const { return cfg_; }

  // The map a video receives, a pure function of (global seed, video id).
  std::optional<CategoryMap> category_map_for(const std::string& video_id) const;

  AugmentStages run(const ClipSample& sample) const;

  // Label-preserving: the result keeps the action label and source id.
  ClipSample augment_clip(const ClipSample& sample) const;

  struct BatchResult {
    std::vector<ClipSample> clips;
    std::vector<bool> augmented;
  };

  // One Bernoulli(p) draw for the batch (or per clip when
  // cfg.per_sample_bernoulli); augmented clips go through augment_clip.
  BatchResult augment_batch(const std::vector<ClipSample>& batch, Rng& batch_rng) const;

 private:
  const SegmentationBackend& segmenter_;
  const TranslationBackend& translator_;
  const EmbeddingProvider& embeddings_;
  const CategoryTable& table_;
  S3AugConfig cfg_;
  std::unique_ptr<SemanticSampler> semantic_;
};

ClipSample augment_clip(const ClipSample& sample, const SegmentationBackend& segmenter,
                        const TranslationBackend& translator,
                        const EmbeddingProvider& embeddings, const S3AugConfig& cfg,
                        const CategoryTable& table = coco_category_table());

std::vector<ClipSample> augment_batch(const std::vector<ClipSample>& batch,
                                      const SegmentationBackend& segmenter,
                                      const TranslationBackend& translator,
                                      const EmbeddingProvider& embeddings,
                                      const S3AugConfig& cfg, Rng& batch_rng,
                                      const CategoryTable& table = coco_category_table());

}  // namespace s3aug

#endif  // S3AUG_PIPELINE_HPP_
