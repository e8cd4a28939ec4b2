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

#include "cli/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <ostream>

#include <CLI11.hpp>

#include "cli/manifest.hpp"
#include "s3aug/adapter.hpp"
#include "s3aug/composite.hpp"
#include "s3aug/pipeline.hpp"
#include "s3aug/rng.hpp"
#include "s3aug/scene.hpp"
#include "s3aug/segmentation.hpp"
#include "s3aug/translation.hpp"
#include "s3aug/video_io.hpp"

namespace s3aug::cli {
namespace fs = std::filesystem;

namespace {

constexpr std::size_t kMockChannels = 16;

std::string format_fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, v);
  return buf;
}

// Loaded once per command.
struct Resources {
  CategoryTable table;
  Palette palette;
  std::unique_ptr<EmbeddingProvider> embeddings;
};

Resources load_resources(const CommonOptions& options) {
  Resources r;
  r.table = options.categories_path.empty() ? coco_category_table()
                                            : load_category_table(options.categories_path);
  r.palette = options.palette_path.empty() ? Palette() : Palette::load(options.palette_path);
  if (options.embeddings_path.empty()) {
    r.embeddings = std::make_unique<HashEmbeddingProvider>(32);
  } else {
    r.embeddings = std::make_unique<TableEmbeddingProvider>(
        TableEmbeddingProvider::load(options.embeddings_path));
  }
  return r;
}

struct Backends {
  std::unique_ptr<SegmentationBackend> segmenter;
  std::unique_ptr<TranslationBackend> translator;
};

// "mock" segments with stored labels/instances when the clip directory has
// them and by palette decoding otherwise; "adapter:<dir>" uses the external
// file protocol for both stages.
Backends make_backends(const std::string& spec, const fs::path& clip_dir, const VideoClip& clip,
                       const S3AugConfig& cfg, const Resources& res) {
  Backends b;
  if (spec == "mock") {
    if (fs::is_directory(clip_dir / "labels") && fs::is_directory(clip_dir / "instances")) {
      b.segmenter = std::make_unique<PrecomputedSegmentation>(
          load_label_video(clip_dir / "labels"), load_instance_video(clip_dir / "instances"));
    } else {
      b.segmenter = std::make_unique<PaletteSegmentation>(res.palette, res.table);
    }
    MockDecoderOptions mock;
    mock.blocks = cfg.decoder_blocks;
    mock.channels = kMockChannels;
    mock.noise_amplitude = cfg.noise_amplitude;
    mock.seed = cfg.global_seed;
    b.translator = std::make_unique<MockDecoder>(res.palette, mock);
  } else if (spec.rfind("adapter:", 0) == 0) {
    const fs::path dir = spec.substr(8);
    b.segmenter = std::make_unique<AdapterSegmentation>(dir);
    b.translator = std::make_unique<AdapterTranslation>(dir);
  } else {
    throw Error(Stage::kConfig, "unknown backend '" + spec + "' (expected mock or adapter:<dir>)");
  }
  (void)clip;
  return b;
}

fs::path frames_dir(const fs::path& clip_dir) {
  return fs::is_directory(clip_dir / "frames") ? clip_dir / "frames" : clip_dir;
}

std::map<std::string, std::string> common_inputs(const CommonOptions& o) {
  std::map<std::string, std::string> inputs;
  if (!o.categories_path.empty()) inputs["categories"] = fs::absolute(o.categories_path).string();
  if (!o.embeddings_path.empty()) inputs["embeddings"] = fs::absolute(o.embeddings_path).string();
  if (!o.palette_path.empty()) inputs["palette"] = fs::absolute(o.palette_path).string();
  return inputs;
}

void add_common(CLI::App& app, CommonOptions& o) {
  app.add_option("--config", o.config_path, "Key-value config file");
  app.add_option("--seed", o.seed, "Global seed (falls back to S3AUG_SEED)");
  app.add_option("--mode", o.mode, "Category sampling mode")
      ->check(CLI::IsMember({"none", "random", "semantic"}));
  app.add_flag("--shift,!--no-shift", o.shift, "Enable temporal feature shift");
  app.add_flag("--paste,!--no-paste", o.paste, "Paste original person pixels");
  app.add_option("--p", o.p, "Augmentation probability")->check(CLI::Range(0.0, 1.0));
  app.add_option("--categories", o.categories_path, "Category definition JSON");
  app.add_option("--embeddings", o.embeddings_path, "Embedding table (name<TAB>vector)");
  app.add_option("--palette", o.palette_path, "Palette text file (id r g b)");
}

}  // namespace

int exit_code_for(Stage stage) {
  switch (stage) {
    case Stage::kInput: return kExitInput;
    case Stage::kConfig: return kExitConfig;
    case Stage::kIo: return kExitIo;
    case Stage::kValidation: return kExitValidation;
    case Stage::kSegmentation: return kExitSegmentation;
    case Stage::kSampling: return kExitSampling;
    case Stage::kTranslation: return kExitTranslation;
    case Stage::kComposite: return kExitComposite;
  }
  return kExitFailure;
}

S3AugConfig resolve_config(const CommonOptions& options) {
  S3AugConfig cfg;
  if (const char* env = std::getenv("S3AUG_SEED"); env && *env) {
    try {
      cfg.global_seed = std::stoull(env);
    } catch (const std::exception&) {
      throw Error(Stage::kConfig, std::string("S3AUG_SEED is not an integer: ") + env);
    }
  }
  if (!options.config_path.empty()) cfg = load_config(options.config_path, cfg);
  if (options.seed) cfg.global_seed = *options.seed;
  if (options.mode) cfg.sampling_mode = parse_mode(*options.mode);
  if (options.shift) cfg.shift_enabled = *options.shift;
  if (options.paste) cfg.person_paste_enabled = *options.paste;
  if (options.p) cfg.p = *options.p;
  const auto errors = cfg.validate();
  if (!errors.empty()) throw Error(Stage::kConfig, errors.front());
  return cfg;
}

int cmd_gen_scene(const GenSceneOptions& options, std::ostream& out) {
  const S3AugConfig cfg = resolve_config(options.common);
  const Resources res = load_resources(options.common);
  const auto start = std::chrono::steady_clock::now();
  std::optional<SceneRecipe> recipe;
  if (options.all_person) recipe = SceneRecipe::all_person(options.height, options.width);
  const Scene scene = generate_scene(cfg.global_seed, options.frames, options.height,
                                     options.width, recipe, res.palette);
  save_clip(options.out / "frames", scene.clip);
  save_id_video(options.out / "labels", scene.labels);
  save_id_video(options.out / "instances", scene.instances);

  RunManifest manifest;
  manifest.command = "gen-scene";
  manifest.config = cfg;
  manifest.inputs = common_inputs(options.common);
  manifest.inputs["frames"] = std::to_string(options.frames);
  manifest.inputs["height"] = std::to_string(options.height);
  manifest.inputs["width"] = std::to_string(options.width);
  manifest.inputs["all_person"] = options.all_person ? "true" : "false";
  manifest.timings_ms["generate"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  manifest.outputs = {"frames", "labels", "instances"};
  save_manifest(options.out / "manifest.json", manifest);
  out << "wrote " << options.frames << "x" << options.height << "x" << options.width
      << " scene to " << options.out.string() << "\n";
  return kExitOk;
}

int cmd_augment(const AugmentOptions& in_options, std::ostream& out) {
  AugmentOptions options = in_options;
  std::optional<RunManifest> replay;
  S3AugConfig cfg;
  if (!options.manifest.empty()) {
    replay = load_manifest(options.manifest);
    if (replay->command != "augment") {
      throw Error(Stage::kConfig, "manifest was written by '" + replay->command + "'");
    }
    const auto& in = replay->inputs;
    auto get = [&](const std::string& key) {
      auto it = in.find(key);
      return it == in.end() ? std::string() : it->second;
    };
    options.input = get("input");
    options.backend = get("backend");
    options.video_id = get("video_id");
    options.action_label = std::stoi(get("action_label"));
    options.common.categories_path = get("categories");
    options.common.embeddings_path = get("embeddings");
    options.common.palette_path = get("palette");
    if (!in_options.dump_stages) options.dump_stages = get("dump_stages") == "true";
    cfg = replay->config;
  } else {
    cfg = resolve_config(options.common);
  }
  if (options.input.empty()) throw Error(Stage::kConfig, "augment needs --input or --manifest");
  if (options.out.empty()) throw Error(Stage::kConfig, "augment needs --out");

  const Resources res = load_resources(options.common);
  const VideoClip clip = load_clip(frames_dir(options.input));
  if (options.video_id.empty()) {
    options.video_id = fs::absolute(options.input).lexically_normal().filename().string();
    if (options.video_id.empty()) {
      options.video_id = fs::absolute(options.input).parent_path().filename().string();
    }
  }
  const Backends backends = make_backends(options.backend, options.input, clip, cfg, res);
  const Augmenter augmenter(*backends.segmenter, *backends.translator, *res.embeddings, res.table,
                            cfg);
  const ClipSample sample{clip, options.action_label, options.video_id};
  const AugmentStages stages = augmenter.run(sample);

  if (replay && !replay->videos.empty()) {
    const auto& recorded = replay->videos.front();
    if (recorded.video_seed != stages.video_seed ||
        recorded.has_map != stages.category_map.has_value() ||
        (recorded.has_map && !(recorded.category_map == *stages.category_map))) {
      throw Error(Stage::kSampling, "replay does not reproduce the recorded category map");
    }
  }

  save_clip(options.out / "v_f2", stages.v_f2);
  std::vector<std::string> outputs{"v_f2"};
  if (options.dump_stages) {
    save_id_video(options.out / "v_l1", stages.v_l1);
    save_id_video(options.out / "instances", stages.instances);
    save_id_video(options.out / "v_l2", stages.v_l2);
    save_clip(options.out / "v_f1", stages.v_f1);
    outputs.insert(outputs.end(), {"v_l1", "instances", "v_l2", "v_f1"});
    if (stages.category_map) {
      save_category_map(options.out / "category_map.txt", *stages.category_map);
      outputs.push_back("category_map.txt");
    }
  }

  RunManifest manifest;
  manifest.command = "augment";
  manifest.config = cfg;
  manifest.inputs = common_inputs(options.common);
  manifest.inputs["input"] = fs::absolute(options.input).lexically_normal().string();
  manifest.inputs["backend"] = options.backend;
  manifest.inputs["video_id"] = options.video_id;
  manifest.inputs["action_label"] = std::to_string(options.action_label);
  manifest.inputs["dump_stages"] = options.dump_stages ? "true" : "false";
  VideoRecord record{options.video_id, stages.video_seed, stages.category_map.has_value(),
                     stages.category_map.value_or(CategoryMap{})};
  manifest.videos.push_back(std::move(record));
  manifest.timings_ms = stages.timings_ms;
  manifest.outputs = outputs;
  save_manifest(options.out / "manifest.json", manifest);

  out << "augmented '" << options.video_id << "' (" << clip.num_frames() << " frames, mode "
      << mode_name(cfg.sampling_mode) << ", shift " << (cfg.shift_enabled ? "on" : "off")
      << ", paste " << (cfg.person_paste_enabled ? "on" : "off") << ") -> "
      << options.out.string() << "\n";
  return kExitOk;
}

int cmd_sweep(const SweepOptions& options, std::ostream& out) {
  const S3AugConfig base = resolve_config(options.common);
  const Resources res = load_resources(options.common);
  if (options.batches == 0 || options.batch_size == 0) {
    throw Error(Stage::kConfig, "sweep needs positive --batches and --batch-size");
  }

  std::vector<fs::path> clip_dirs;
  if (!fs::is_directory(options.input)) {
    throw Error(Stage::kIo, "clip corpus directory not found: " + options.input.string());
  }
  for (const auto& entry : fs::directory_iterator(options.input)) {
    if (entry.is_directory() && fs::is_directory(entry.path() / "frames")) {
      clip_dirs.push_back(entry.path());
    }
  }
  std::sort(clip_dirs.begin(), clip_dirs.end());
  if (clip_dirs.empty()) throw Error(Stage::kIo, "no clips under " + options.input.string());

  // Per-clip statistics. Augmentation is a pure function of (global seed,
  // video id), so every batch containing a clip sees the same output and the
  // batch protocol can be replayed on these numbers.
  struct ClipStats {
    double flicker_original = 0.0;
    double flicker_shift = 0.0;
    double flicker_noshift = 0.0;
    std::size_t person_pixels = 0;
    std::size_t person_preserved = 0;
  };

  RunManifest manifest;
  manifest.command = "sweep";
  manifest.config = base;
  manifest.inputs = common_inputs(options.common);
  manifest.inputs["input"] = fs::absolute(options.input).lexically_normal().string();
  manifest.inputs["batches"] = std::to_string(options.batches);
  manifest.inputs["batch_size"] = std::to_string(options.batch_size);

  std::ofstream csv(options.out);
  if (!csv) throw Error(Stage::kIo, "cannot write " + options.out.string());
  csv << kSweepHeader << "\n";

  const auto start = std::chrono::steady_clock::now();
  for (const auto& mode_text : options.modes) {
    S3AugConfig cfg = base;
    cfg.sampling_mode = parse_mode(mode_text);
    S3AugConfig cfg_noshift = cfg;
    cfg.shift_enabled = true;
    cfg_noshift.shift_enabled = false;

    std::vector<ClipStats> stats;
    for (const auto& dir : clip_dirs) {
      const VideoClip clip = load_clip(dir / "frames");
      const Backends backends = make_backends("mock", dir, clip, cfg, res);
      const ClipSample sample{clip, 0, dir.filename().string()};
      const Augmenter shift_on(*backends.segmenter, *backends.translator, *res.embeddings,
                               res.table, cfg);
      const Augmenter shift_off(*backends.segmenter, *backends.translator, *res.embeddings,
                                res.table, cfg_noshift);
      const AugmentStages on = shift_on.run(sample);
      const AugmentStages off = shift_off.run(sample);
      Mask2D mask = static_background_mask(on.v_l1);
      if (std::none_of(mask.values().begin(), mask.values().end(), [](auto v) { return v; })) {
        std::fill(mask.values().begin(), mask.values().end(), std::uint8_t{1});
      }
      ClipStats s;
      s.flicker_original = flicker_score(clip, mask);
      s.flicker_shift = flicker_score(on.v_f2, mask);
      s.flicker_noshift = flicker_score(off.v_f2, mask);
      const PersonMask person = person_mask(on.v_l1, res.table, cfg.person_id);
      const std::size_t plane = clip.height() * clip.width();
      for (std::size_t t = 0; t < clip.num_frames(); ++t) {
        for (std::size_t i = 0; i < plane; ++i) {
          if (!person.data()[t * plane + i]) continue;
          ++s.person_pixels;
          bool same = true;
          for (std::size_t c = 0; c < 3; ++c) {
            const std::size_t k = (t * 3 + c) * plane + i;
            same = same && on.v_f2.data()[k] == clip.data()[k];
          }
          s.person_preserved += same;
        }
      }
      stats.push_back(s);
      if (on.category_map) {
        manifest.videos.push_back({sample.source_id, on.video_seed, true, *on.category_map});
      } else {
        manifest.videos.push_back({sample.source_id, on.video_seed, false, CategoryMap{}});
      }
    }

    for (std::size_t pi = 0; pi < options.p_grid.size(); ++pi) {
      const double p = options.p_grid[pi];
      Rng batch_rng(mix_seed(mix_seed(base.global_seed, stable_hash(mode_text)), pi));
      std::size_t augmented_batches = 0, occurrences = 0, person_pixels = 0, preserved = 0;
      double flicker_shift = 0.0, flicker_noshift = 0.0;
      for (std::size_t b = 0; b < options.batches; ++b) {
        const bool batch_draw = !cfg.per_sample_bernoulli && batch_rng.bernoulli(p);
        bool any = false;
        for (std::size_t i = 0; i < options.batch_size; ++i) {
          const ClipStats& s = stats[(b * options.batch_size + i) % stats.size()];
          const bool augmented = cfg.per_sample_bernoulli ? batch_rng.bernoulli(p) : batch_draw;
          any = any || augmented;
          ++occurrences;
          flicker_shift += augmented ? s.flicker_shift : s.flicker_original;
          flicker_noshift += augmented ? s.flicker_noshift : s.flicker_original;
          if (augmented) {
            person_pixels += s.person_pixels;
            preserved += s.person_preserved;
          }
        }
        augmented_batches += any;
      }
      const double preservation =
          person_pixels == 0 ? 1.0 : static_cast<double>(preserved) / person_pixels;
      csv << kSweepSchemaVersion << ',' << mode_text << ',' << format_fixed(p, 1) << ','
          << options.batches << ',' << options.batch_size << ',' << augmented_batches << ','
          << format_fixed(static_cast<double>(augmented_batches) / options.batches, 6) << ','
          << format_fixed(flicker_shift / occurrences, 6) << ','
          << format_fixed(flicker_noshift / occurrences, 6) << ','
          << format_fixed(preservation, 6) << ',' << base.global_seed << '\n';
    }
  }
  manifest.timings_ms["sweep"] =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  manifest.outputs = {fs::absolute(options.out).string()};
  if (!csv) throw Error(Stage::kIo, "failed writing " + options.out.string());
  csv.close();
  save_manifest(fs::path(options.out.string() + ".manifest.json"), manifest);
  out << "wrote " << options.modes.size() * options.p_grid.size() << " rows to "
      << options.out.string() << "\n";
  return kExitOk;
}

int cmd_flicker(const FlickerOptions& options, std::ostream& out) {
  resolve_config(options.common);
  const VideoClip clip = load_clip(frames_dir(options.input));
  Mask2D mask({clip.height(), clip.width()}, 1);
  if (!options.mask.empty()) {
    const IdImage image = read_gray16_png(options.mask);
    if (image.shape() != mask.shape()) {
      throw Error(Stage::kInput, "mask " + shape_string(image.shape()) +
                                     " does not match frame " + shape_string(mask.shape()));
    }
    for (std::size_t i = 0; i < image.size(); ++i) mask.data()[i] = image.data()[i] != 0;
  } else if (!options.labels.empty()) {
    mask = static_background_mask(load_label_video(options.labels));
  }
  out << format_fixed(flicker_score(clip, mask), 6) << "\n";
  return kExitOk;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"S3Aug single-video augmentation for action recognition"};
  app.require_subcommand(1);

  GenSceneOptions gen;
  auto* gen_cmd = app.add_subcommand("gen-scene", "Write a synthetic clip/labels/instances triple");
  add_common(*gen_cmd, gen.common);
  gen_cmd->add_option("--out", gen.out, "Output directory")->required();
  gen_cmd->add_option("--frames,-T", gen.frames, "Frames")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--height,-H", gen.height, "Height")->check(CLI::PositiveNumber);
  gen_cmd->add_option("--width,-W", gen.width, "Width")->check(CLI::PositiveNumber);
  gen_cmd->add_flag("--all-person", gen.all_person, "Full-frame person scene");

  AugmentOptions aug;
  auto* aug_cmd = app.add_subcommand("augment", "Augment one clip directory");
  add_common(*aug_cmd, aug.common);
  aug_cmd->add_option("--input", aug.input, "Clip directory (frames/ [labels/ instances/])");
  aug_cmd->add_option("--out", aug.out, "Output directory")->required();
  aug_cmd->add_option("--manifest", aug.manifest, "Replay a previous augment manifest");
  aug_cmd->add_option("--backend", aug.backend, "mock or adapter:<dir>");
  aug_cmd->add_option("--video-id", aug.video_id, "Video id for seed derivation");
  aug_cmd->add_option("--label", aug.action_label, "Action label carried through");
  aug_cmd->add_flag("--dump-stages", aug.dump_stages, "Write v_l1, v_l2, v_f1 and the map");

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "p-grid statistics over a clip corpus");
  add_common(*sweep_cmd, sweep.common);
  sweep_cmd->add_option("--input", sweep.input, "Directory of clip directories")->required();
  sweep_cmd->add_option("--out", sweep.out, "CSV path")->required();
  sweep_cmd->add_option("--batches", sweep.batches, "Batches per p")->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--batch-size", sweep.batch_size, "Clips per batch")
      ->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--modes", sweep.modes, "Sampling modes")
      ->delimiter(',')
      ->check(CLI::IsMember({"none", "random", "semantic"}));

  FlickerOptions flicker;
  auto* flicker_cmd = app.add_subcommand("flicker", "Flicker score of a clip");
  add_common(*flicker_cmd, flicker.common);
  flicker_cmd->add_option("--input", flicker.input, "Clip directory")->required();
  flicker_cmd->add_option("--mask", flicker.mask, "Mask PNG (non-zero = static)");
  flicker_cmd->add_option("--labels", flicker.labels, "Label directory for the static mask");

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitUsage;
  }

  try {
    if (*gen_cmd) return cmd_gen_scene(gen, out);
    if (*aug_cmd) return cmd_augment(aug, out);
    if (*sweep_cmd) return cmd_sweep(sweep, out);
    if (*flicker_cmd) return cmd_flicker(flicker, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.stage());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace s3aug::cli
