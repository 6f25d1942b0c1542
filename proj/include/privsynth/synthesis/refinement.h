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

#ifndef PRIVSYNTH_SYNTHESIS_REFINEMENT_H_
#define PRIVSYNTH_SYNTHESIS_REFINEMENT_H_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "privsynth/core/random.h"
#include "privsynth/llm/gateway.h"

namespace privsynth::synthesis {

struct RefinementConfig {
  double alpha = 0.5;
  double beta = 0.5;
  double tau_accept = 0.5;
  int max_steps = 3;
  size_t pool_cap = 256;
  std::string judge_criteria =
      "Which draft is more specific (exact dates, places, numbers and "
      "identifiers) and more realistic as a genuine document?";

  absl::Status Validate() const;
};

// Texts and embeddings of every record accepted so far. Append-only.
class AcceptedPool {
 public:
  void Add(std::string text, llm::Embedding embedding);
  size_t size() const { return texts_.size(); }
  const std::vector<std::string>& texts() const { return texts_; }
  const std::vector<llm::Embedding>& embeddings() const { return embeddings_; }

  // Up to `cap` distinct indices, uniform without replacement, ascending.
  std::vector<size_t> SampleIndices(Rng& rng, size_t cap) const;

 private:
  std::vector<std::string> texts_;
  std::vector<llm::Embedding> embeddings_;
};

struct RefinementStep {
  int step = 0;
  double llm_score = 0.0;
  double vendi_delta = 0.0;
  double score = 0.0;
  bool accepted = false;

  friend bool operator==(const RefinementStep&, const RefinementStep&) =
      default;
};

struct RefinementResult {
  std::string text;
  llm::Embedding embedding;
  std::vector<RefinementStep> log;
};

double AcceptanceScore(const RefinementConfig& config, double llm_score,
                       double vendi_delta);

// Strict: a score equal to the threshold is a rejection.
inline bool Accepts(const RefinementConfig& config, double score) {
  return score > config.tau_accept;
}

// Produces the candidate draft for a step from a fresh sampling seed.
using CandidateSampler =
    std::function<absl::StatusOr<std::string>(int step, uint64_t seed)>;

absl::StatusOr<RefinementResult> RefineRecord(
    std::string draft, const AcceptedPool& pool,
    const RefinementConfig& config, llm::Gateway& gateway,
    const CandidateSampler& sample_candidate, Rng& rng);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_REFINEMENT_H_
