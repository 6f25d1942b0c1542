// Copyright 2026 The privsynth Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "privsynth/io/config.h"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "fmt/format.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"

namespace privsynth::io {
namespace {

using Json = nlohmann::json;

// Reads typed fields from one JSON object and remembers which keys were
// consumed, so leftovers can be reported.
class Section {
 public:
  Section(const Json& json, std::string name)
      : json_(json), name_(std::move(name)) {}

  template <typename T>
  void Get(const char* key, T* out) {
    seen_.insert(key);
    if (!status_.ok()) return;
    auto it = json_.find(key);
    if (it == json_.end() || it->is_null()) return;
    try {
      *out = it->get<T>();
    } catch (const std::exception& e) {
      status_ = MakeError(ErrorCode::kConfigError,
                          fmt::format("{}.{}: {}", name_, key, e.what()));
    }
  }

  void GetMillis(const char* key, std::chrono::milliseconds* out) {
    int64_t ms = out->count();
    Get(key, &ms);
    *out = std::chrono::milliseconds(ms);
  }

  Section Child(const char* key) {
    seen_.insert(key);
    auto it = json_.find(key);
    static const Json kEmpty = Json::object();
    if (it == json_.end() || it->is_null()) return Section(kEmpty, key);
    if (!it->is_object() && status_.ok()) {
      status_ = MakeError(ErrorCode::kConfigError,
                          fmt::format("{}.{} must be an object", name_, key));
    }
    return Section(it->is_object() ? *it : kEmpty, fmt::format("{}.{}", name_, key));
  }

  absl::Status Finish() const {
    if (!status_.ok()) return status_;
    for (const auto& [key, value] : json_.items()) {
      if (!seen_.contains(key)) {
        return MakeError(ErrorCode::kConfigError,
                         fmt::format("unknown config key '{}.{}'", name_, key));
      }
    }
    return absl::OkStatus();
  }

 private:
  const Json& json_;
  std::string name_;
  std::set<std::string> seen_;
  absl::Status status_;
};

}  // namespace

void PipelineConfig::Propagate() {
  synthesis.seed = seed;
  synthesis.workers = workers;
  sanitization.seed = seed;
  sanitization.workers = workers;
  provider.max_in_flight = std::max(provider.max_in_flight, 1);
}

absl::Status PipelineConfig::Validate() const {
  if (provider_kind != "mock" && provider_kind != "http") {
    return MakeError(ErrorCode::kConfigError,
                     fmt::format("unknown provider '{}'", provider_kind));
  }
  if (provider_kind == "http") {
    PRIVSYNTH_RETURN_IF_ERROR(provider.Validate());
  }
  if (workers < 1) {
    return MakeError(ErrorCode::kConfigError, "workers must be >= 1");
  }
  if (mock_embedding_dim < 1) {
    return MakeError(ErrorCode::kConfigError, "embedding_dim must be >= 1");
  }
  PRIVSYNTH_RETURN_IF_ERROR(synthesis.refinement.Validate());
  if (synthesis.batch_size < 1) {
    return MakeError(ErrorCode::kConfigError, "batch_size must be >= 1");
  }
  const auto& s = sanitization;
  if (s.tau < 4 || s.targets_min < 1 || s.targets_max < s.targets_min ||
      s.retention < 0 || s.group_omission_p < 0.0 || s.group_omission_p > 1.0) {
    return MakeError(ErrorCode::kConfigError, "invalid sanitization knobs");
  }
  if (mattr_window < 1) {
    return MakeError(ErrorCode::kConfigError, "mattr_window must be >= 1");
  }
  return absl::OkStatus();
}

absl::StatusOr<PipelineConfig> ConfigFromJson(const Json& json) {
  if (!json.is_object()) {
    return MakeError(ErrorCode::kConfigError, "config must be a JSON object");
  }
  PipelineConfig c;
  Section root(json, "config");
  root.Get("seed", &c.seed);
  root.Get("workers", &c.workers);

  Section p = root.Child("provider");
  p.Get("kind", &c.provider_kind);
  p.Get("endpoint", &c.provider.endpoint);
  p.Get("model_name", &c.provider.model_name);
  p.Get("embedding_model", &c.provider.embedding_model);
  p.Get("api_key_env", &c.provider.api_key_env);
  p.Get("chat_path", &c.provider.chat_path);
  p.Get("embeddings_path", &c.provider.embeddings_path);
  p.GetMillis("timeout_ms", &c.provider.timeout);
  p.Get("max_retries", &c.provider.max_retries);
  p.GetMillis("backoff_initial_ms", &c.provider.backoff_initial);
  p.Get("backoff_factor", &c.provider.backoff_factor);
  p.Get("max_in_flight", &c.provider.max_in_flight);
  p.Get("embedding_dim", &c.mock_embedding_dim);

  auto& syn = c.synthesis;
  Section s = root.Child("synthesis");
  s.Get("count", &syn.count);
  s.Get("max_attempts", &syn.max_attempts);
  s.Get("batch_size", &syn.batch_size);
  s.Get("temperature", &syn.generation.temperature);
  s.Get("max_tokens", &syn.generation.max_tokens);
  s.Get("generator_id", &syn.generator_id);
  s.Get("record_formality", &syn.record_formality);
  s.Get("categories", &syn.categories);
  s.Get("categorize", &syn.categorize);
  s.Get("sex_options", &syn.profile.sex_options);
  s.Get("ethnicity_options", &syn.profile.ethnicity_options);
  s.Get("life_events", &syn.profile.life_events);
  s.Get("birth_year_min", &syn.profile.birth_year_min);
  s.Get("birth_year_max", &syn.profile.birth_year_max);
  s.Get("min_words", &syn.filter.min_words);
  s.Get("min_age", &syn.filter.min_age);
  s.Get("max_repeated_line_ratio", &syn.filter.max_repeated_line_ratio);
  s.Get("max_non_alnum_ratio", &syn.filter.max_non_alnum_ratio);
  std::string reference = syn.filter.reference_date.ToString();
  s.Get("age_reference_date", &reference);

  Section r = root.Child("refinement");
  r.Get("alpha", &syn.refinement.alpha);
  r.Get("beta", &syn.refinement.beta);
  r.Get("tau_accept", &syn.refinement.tau_accept);
  r.Get("max_steps", &syn.refinement.max_steps);
  r.Get("pool_cap", &syn.refinement.pool_cap);
  r.Get("judge_criteria", &syn.refinement.judge_criteria);

  Section z = root.Child("sanitization");
  z.Get("tau", &c.sanitization.tau);
  z.Get("targets_min", &c.sanitization.targets_min);
  z.Get("targets_max", &c.sanitization.targets_max);
  z.Get("retention", &c.sanitization.retention);
  z.Get("group_omission_p", &c.sanitization.group_omission_p);
  z.Get("chunk_workers", &c.sanitization.chunk_workers);
  z.Get("temperature", &c.sanitization.sampling.temperature);

  Section e = root.Child("evaluation");
  e.Get("case_insensitive", &c.evaluation.case_insensitive);
  e.Get("max_tokens", &c.evaluation.sampling.max_tokens);

  Section d = root.Child("diversity");
  d.Get("mattr_window", &c.mattr_window);

  for (const Section* section : {&p, &s, &r, &z, &e, &d, &root}) {
    PRIVSYNTH_RETURN_IF_ERROR(section->Finish());
  }
  absl::StatusOr<CalendarDate> date = CalendarDate::Parse(reference);
  if (!date.ok()) {
    return MakeError(ErrorCode::kConfigError,
                     std::string(date.status().message()));
  }
  syn.filter.reference_date = *date;
  syn.profile.reference_date = *date;
  c.Propagate();
  PRIVSYNTH_RETURN_IF_ERROR(c.Validate());
  return c;
}

absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorCode::kConfigError,
                     fmt::format("cannot open config '{}'", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  Json json = Json::parse(buffer.str(), nullptr, /*allow_exceptions=*/false,
                          /*ignore_comments=*/true);
  if (json.is_discarded()) {
    return MakeError(ErrorCode::kConfigError,
                     fmt::format("config '{}' is not valid JSON", path));
  }
  return ConfigFromJson(json);
}

Json ConfigToJson(const PipelineConfig& c) {
  const auto& syn = c.synthesis;
  Json j;
  j["seed"] = c.seed;
  j["workers"] = c.workers;
  j["provider"] = {
      {"kind", c.provider_kind},
      {"endpoint", c.provider.endpoint},
      {"model_name", c.provider.model_name},
      {"embedding_model", c.provider.embedding_model},
      {"api_key_env", c.provider.api_key_env},
      {"chat_path", c.provider.chat_path},
      {"embeddings_path", c.provider.embeddings_path},
      {"timeout_ms", c.provider.timeout.count()},
      {"max_retries", c.provider.max_retries},
      {"backoff_initial_ms", c.provider.backoff_initial.count()},
      {"backoff_factor", c.provider.backoff_factor},
      {"max_in_flight", c.provider.max_in_flight},
      {"embedding_dim", c.mock_embedding_dim}};
  j["synthesis"] = {
      {"count", syn.count},
      {"max_attempts", syn.max_attempts},
      {"batch_size", syn.batch_size},
      {"temperature", syn.generation.temperature},
      {"max_tokens", syn.generation.max_tokens},
      {"generator_id", syn.generator_id},
      {"record_formality", syn.record_formality},
      {"categories", syn.categories},
      {"categorize", syn.categorize},
      {"sex_options", syn.profile.sex_options},
      {"ethnicity_options", syn.profile.ethnicity_options},
      {"life_events", syn.profile.life_events},
      {"birth_year_min", syn.profile.birth_year_min},
      {"birth_year_max", syn.profile.birth_year_max},
      {"min_words", syn.filter.min_words},
      {"min_age", syn.filter.min_age},
      {"max_repeated_line_ratio", syn.filter.max_repeated_line_ratio},
      {"max_non_alnum_ratio", syn.filter.max_non_alnum_ratio},
      {"age_reference_date", syn.filter.reference_date.ToString()}};
  j["refinement"] = {{"alpha", syn.refinement.alpha},
                     {"beta", syn.refinement.beta},
                     {"tau_accept", syn.refinement.tau_accept},
                     {"max_steps", syn.refinement.max_steps},
                     {"pool_cap", syn.refinement.pool_cap},
                     {"judge_criteria", syn.refinement.judge_criteria}};
  j["sanitization"] = {{"tau", c.sanitization.tau},
                       {"targets_min", c.sanitization.targets_min},
                       {"targets_max", c.sanitization.targets_max},
                       {"retention", c.sanitization.retention},
                       {"group_omission_p", c.sanitization.group_omission_p},
                       {"chunk_workers", c.sanitization.chunk_workers},
                       {"temperature", c.sanitization.sampling.temperature}};
  j["evaluation"] = {{"case_insensitive", c.evaluation.case_insensitive},
                     {"max_tokens", c.evaluation.sampling.max_tokens}};
  j["diversity"] = {{"mattr_window", c.mattr_window}};
  return j;
}

}  // namespace privsynth::io
