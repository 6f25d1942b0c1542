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

#ifndef PRIVSYNTH_SYNTHESIS_PIPELINE_H_
#define PRIVSYNTH_SYNTHESIS_PIPELINE_H_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"
#include "privsynth/synthesis/filter.h"
#include "privsynth/synthesis/initialization.h"
#include "privsynth/synthesis/name_source.h"
#include "privsynth/synthesis/refinement.h"

namespace privsynth::synthesis {

struct SynthesisConfig {
  // Number of records to keep after filtering.
  size_t count = 10;
  // Candidate budget; 0 means 3 * count + batch_size.
  size_t max_attempts = 0;
  uint64_t seed = 0;
  size_t workers = 1;
  // Candidates in one batch all see the pool as it was before the batch.
  // Fixed independently of `workers` so output does not depend on it.
  size_t batch_size = 8;
  RefinementConfig refinement;
  ProfileOptions profile;
  FilterOptions filter;
  std::vector<std::string> record_formality = {
      "formal records", "informal personal writing",
      "semi-structured documents"};
  std::vector<std::string> categories;
  bool categorize = true;
  llm::SamplingOptions generation{0.7, 2048, std::nullopt};
  llm::SamplingOptions annotation{0.0, 1024, std::nullopt};
  std::string generator_id = "mock";
};

struct SynthesisFailure {
  size_t index = 0;
  std::string stage;
  std::string error;
};

struct SynthesisOutput {
  std::vector<Record> records;
  // Parallel to `records`.
  std::vector<std::vector<RefinementStep>> refinement_logs;
  std::vector<Rejection> rejected;
  std::vector<SynthesisFailure> failures;
  std::vector<std::string> categories;
  size_t attempts = 0;
};

// Synthesizes one candidate. `pool` is the frozen snapshot for its batch.
struct Candidate {
  Record record;
  llm::Embedding embedding;
  std::vector<RefinementStep> log;
  std::vector<std::string> rejection_reasons;
};

absl::StatusOr<Candidate> SynthesizeCandidate(llm::Gateway& gateway,
                                              const NameTable& names,
                                              const SynthesisConfig& config,
                                              const AcceptedPool& pool,
                                              size_t index,
                                              std::string* failed_stage = nullptr);

absl::StatusOr<SynthesisOutput> SynthesizeCorpus(llm::Gateway& gateway,
                                                 const NameTable& names,
                                                 const SynthesisConfig& config);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_PIPELINE_H_
