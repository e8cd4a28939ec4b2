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

#include "s3aug/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "s3aug/error.hpp"

namespace s3aug {
namespace {

[[noreturn]] void config_fail(const std::string& message) {
  throw Error(Stage::kConfig, message);
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "1" || value == "on" || value == "yes") return true;
  if (value == "false" || value == "0" || value == "off" || value == "no") return false;
  config_fail(key + ": expected a boolean, got '" + value + "'");
}

template <typename T>
T parse_number(const std::string& key, const std::string& value) {
  T out{};
  const auto* end = value.data() + value.size();
  const auto [ptr, ec] = std::from_chars(value.data(), end, out);
  if (ec != std::errc() || ptr != end) {
    config_fail(key + ": cannot parse '" + value + "'");
  }
  return out;
}

// from_chars for double is not available in every libstdc++ this builds with.
template <>
double parse_number<double>(const std::string& key, const std::string& value) {
  std::istringstream in(value);
  double out = 0.0;
  in >> out;
  if (!in || !in.eof()) config_fail(key + ": cannot parse '" + value + "'");
  return out;
}

}  // namespace

std::string_view mode_name(SamplingMode mode) {
  switch (mode) {
    case SamplingMode::kNone: return "none";
    case SamplingMode::kRandom: return "random";
    case SamplingMode::kSemantic: return "semantic";
  }
  return "none";
}

SamplingMode parse_mode(std::string_view name) {
  if (name == "none") return SamplingMode::kNone;
  if (name == "random") return SamplingMode::kRandom;
  if (name == "semantic") return SamplingMode::kSemantic;
  config_fail("unknown sampling mode '" + std::string(name) + "'");
}

std::vector<std::string> S3AugConfig::validate() const {
  std::vector<std::string> errors;
  if (!(p >= 0.0 && p <= 1.0)) errors.push_back("p must lie in [0, 1]");
  if (frames_per_clip == 0) errors.push_back("frames_per_clip must be positive");
  if (short_side_min > short_side_max) {
    errors.push_back("short_side_min must not exceed short_side_max");
  }
  if (crop_size == 0 || crop_size > short_side_min) {
    errors.push_back("crop_size must be positive and <= short_side_min");
  }
  if (decoder_blocks < 2) errors.push_back("decoder_blocks must be >= 2");
  if (!(noise_amplitude >= 0.0)) errors.push_back("noise_amplitude must be >= 0");
  return errors;
}

S3AugConfig parse_config(std::string_view text, S3AugConfig cfg) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      config_fail("line " + std::to_string(line_no) + ": expected 'key = value'");
    }
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "p") {
      cfg.p = parse_number<double>(key, value);
    } else if (key == "sampling_mode") {
      cfg.sampling_mode = parse_mode(value);
    } else if (key == "shift_enabled") {
      cfg.shift_enabled = parse_bool(key, value);
    } else if (key == "person_paste_enabled") {
      cfg.person_paste_enabled = parse_bool(key, value);
    } else if (key == "global_seed") {
      cfg.global_seed = parse_number<std::uint64_t>(key, value);
    } else if (key == "frames_per_clip") {
      cfg.frames_per_clip = parse_number<std::size_t>(key, value);
    } else if (key == "short_side_min") {
      cfg.short_side_min = parse_number<std::size_t>(key, value);
    } else if (key == "short_side_max") {
      cfg.short_side_max = parse_number<std::size_t>(key, value);
    } else if (key == "crop_size") {
      cfg.crop_size = parse_number<std::size_t>(key, value);
    } else if (key == "per_sample_bernoulli") {
      cfg.per_sample_bernoulli = parse_bool(key, value);
    } else if (key == "person_id") {
      cfg.person_id = parse_number<int>(key, value);
    } else if (key == "decoder_blocks") {
      cfg.decoder_blocks = parse_number<std::size_t>(key, value);
    } else if (key == "noise_amplitude") {
      cfg.noise_amplitude = parse_number<double>(key, value);
    } else {
      config_fail("line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    }
  }
  const auto errors = cfg.validate();
  if (!errors.empty()) config_fail(errors.front());
  return cfg;
}

S3AugConfig load_config(const std::filesystem::path& path, S3AugConfig base) {
  std::ifstream in(path);
  if (!in) throw Error(Stage::kIo, "cannot open config " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), base);
}

std::string config_to_text(const S3AugConfig& cfg) {
  std::ostringstream out;
  out.precision(17);
  out << "p = " << cfg.p << '\n'
      << "sampling_mode = " << mode_name(cfg.sampling_mode) << '\n'
      << "shift_enabled = " << (cfg.shift_enabled ? "true" : "false") << '\n'
      << "person_paste_enabled = " << (cfg.person_paste_enabled ? "true" : "false") << '\n'
      << "global_seed = " << cfg.global_seed << '\n'
      << "frames_per_clip = " << cfg.frames_per_clip << '\n'
      << "short_side_min = " << cfg.short_side_min << '\n'
      << "short_side_max = " << cfg.short_side_max << '\n'
      << "crop_size = " << cfg.crop_size << '\n'
      << "per_sample_bernoulli = " << (cfg.per_sample_bernoulli ? "true" : "false") << '\n'
      << "person_id = " << cfg.person_id << '\n'
      << "decoder_blocks = " << cfg.decoder_blocks << '\n'
      << "noise_amplitude = " << cfg.noise_amplitude << '\n';
  return out.str();
}

}  // namespace s3aug
