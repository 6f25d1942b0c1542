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

#ifndef PRIVSYNTH_IO_CONFIG_H_
#define PRIVSYNTH_IO_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <string>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "privsynth/evaluation/cascade.h"
#include "privsynth/llm/provider.h"
#include "privsynth/sanitization/pipeline.h"
#include "privsynth/synthesis/pipeline.h"

namespace privsynth::io {

struct PipelineConfig {
  // "mock" or "http".
  std::string provider_kind = "mock";
  llm::ProviderConfig provider;
  int mock_embedding_dim = 64;
  synthesis::SynthesisConfig synthesis;
  sanitization::SanitizationConfig sanitization;
  evaluation::EvalOptions evaluation;
  size_t mattr_window = 100;
  uint64_t seed = 0;
  size_t workers = 1;

  // Copies `seed` and `workers` into the per-stage configs.
  void Propagate();
  absl::Status Validate() const;
};

// Every key is optional; missing keys keep their defaults. Unknown keys and
// wrongly typed values are CONFIG_ERROR.
absl::StatusOr<PipelineConfig> ConfigFromJson(const nlohmann::json& json);
absl::StatusOr<PipelineConfig> LoadConfig(const std::string& path);
nlohmann::json ConfigToJson(const PipelineConfig& config);

}  // namespace privsynth::io

#endif  // PRIVSYNTH_IO_CONFIG_H_
