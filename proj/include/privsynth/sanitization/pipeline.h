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

#ifndef PRIVSYNTH_SANITIZATION_PIPELINE_H_
#define PRIVSYNTH_SANITIZATION_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/random.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"
#include "privsynth/sanitization/chunking.h"

namespace privsynth::sanitization {

struct SanitizationConfig {
  size_t tau = kDefaultChunkSize;
  // Inclusive range for the number of targets, clamped to the number of
  // selectable units.
  int targets_min = 1;
  int targets_max = 5;
  int retention = 2;
  double group_omission_p = 0.3;
  uint64_t seed = 0;
  // Records processed concurrently.
  size_t workers = 1;
  // Chunk rewrites in flight within one target phase.
  size_t chunk_workers = 4;
  llm::SamplingOptions sampling{0.2, 1024, std::nullopt};
};

struct SanitizationFailure {
  std::string record_id;
  std::string stage;
  std::string error;
};

// Runs the whole procedure for one record. On failure `failed_stage` (when
// non-null) names the stage and no triplet is produced.
absl::StatusOr<SanitizationTriplet> SanitizeRecord(
    llm::Gateway& gateway, const Record& record,
    const SanitizationConfig& config, Rng& rng,
    std::string* failed_stage = nullptr);

struct SanitizationOutput {
  std::vector<SanitizationTriplet> triplets;
  std::vector<SanitizationFailure> failures;
};

// Each record draws from its own stream keyed by the record id, so results
// do not depend on input position or worker count.
SanitizationOutput SanitizeCorpus(llm::Gateway& gateway,
                                  std::span<const Record> records,
                                  const SanitizationConfig& config);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_PIPELINE_H_
