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

#include "privsynth/synthesis/refinement.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "fmt/format.h"
#include "privsynth/core/status.h"
#include "privsynth/diversity/metrics.h"

namespace privsynth::synthesis {

absl::Status RefinementConfig::Validate() const {
  if (max_steps < 0) {
    return MakeError(ErrorCode::kConfigError, "max_steps must be >= 0");
  }
  if (pool_cap < 1) {
    return MakeError(ErrorCode::kConfigError, "pool_cap must be >= 1");
  }
  if (!std::isfinite(tau_accept) || !std::isfinite(alpha) ||
      !std::isfinite(beta)) {
    return MakeError(ErrorCode::kConfigError,
                     "alpha, beta and tau_accept must be finite");
  }
  return absl::OkStatus();
}

void AcceptedPool::Add(std::string text, llm::Embedding embedding) {
  texts_.push_back(std::move(text));
  embeddings_.push_back(std::move(embedding));
}

std::vector<size_t> AcceptedPool::SampleIndices(Rng& rng, size_t cap) const {
  std::vector<size_t> all(size());
  std::iota(all.begin(), all.end(), size_t{0});
  if (all.size() <= cap) return all;
  // Partial Fisher-Yates with the project's own index sampler, so results do
  // not depend on the standard library's shuffle.
  for (size_t i = 0; i < cap; ++i) {
    const size_t j = i + UniformIndex(rng, all.size() - i);
    std::swap(all[i], all[j]);
  }
  all.resize(cap);
  std::sort(all.begin(), all.end());
  return all;
}

double AcceptanceScore(const RefinementConfig& config, double llm_score,
                       double vendi_delta) {
  return config.alpha * llm_score + config.beta * vendi_delta;
}

namespace {

absl::StatusOr<double> VendiWith(const std::vector<llm::Embedding>& sample,
                                 const llm::Embedding& extra) {
  std::vector<llm::Embedding> vectors = sample;
  vectors.push_back(extra);
  return diversity::VendiScore(vectors);
}

absl::StatusOr<llm::Embedding> EmbedOne(llm::Gateway& gateway,
                                        const std::string& text) {
  std::vector<std::string> batch = {text};
  PRIVSYNTH_ASSIGN_OR_RETURN(std::vector<llm::Embedding> out,
                             gateway.Embed(batch));
  return std::move(out.front());
}

}  // namespace

absl::StatusOr<RefinementResult> RefineRecord(
    std::string draft, const AcceptedPool& pool,
    const RefinementConfig& config, llm::Gateway& gateway,
    const CandidateSampler& sample_candidate, Rng& rng) {
  PRIVSYNTH_RETURN_IF_ERROR(config.Validate());
  RefinementResult result;
  result.text = std::move(draft);
  PRIVSYNTH_ASSIGN_OR_RETURN(result.embedding,
                             EmbedOne(gateway, result.text));
  if (pool.size() > 0 &&
      pool.embeddings().front().size() != result.embedding.size()) {
    return MakeError(ErrorCode::kDimensionMismatch,
                     fmt::format("pool dimension {} but embedder returns {}",
                                 pool.embeddings().front().size(),
                                 result.embedding.size()));
  }
  for (int step = 1; step <= config.max_steps; ++step) {
    const uint64_t candidate_seed = rng();
    const uint64_t judge_seed = rng();
    PRIVSYNTH_ASSIGN_OR_RETURN(std::string candidate,
                               sample_candidate(step, candidate_seed));
    std::vector<llm::Embedding> sample;
    for (size_t i : pool.SampleIndices(rng, config.pool_cap)) {
      sample.push_back(pool.embeddings()[i]);
    }
    PRIVSYNTH_ASSIGN_OR_RETURN(llm::Embedding candidate_embedding,
                               EmbedOne(gateway, candidate));
    PRIVSYNTH_ASSIGN_OR_RETURN(double vendi_candidate,
                               VendiWith(sample, candidate_embedding));
    PRIVSYNTH_ASSIGN_OR_RETURN(double vendi_current,
                               VendiWith(sample, result.embedding));
    PRIVSYNTH_ASSIGN_OR_RETURN(
        double llm_score,
        gateway.JudgePair(result.text, candidate, config.judge_criteria,
                          judge_seed));
    RefinementStep entry;
    entry.step = step;
    entry.llm_score = llm_score;
    entry.vendi_delta = vendi_candidate - vendi_current;
    entry.score = AcceptanceScore(config, llm_score, entry.vendi_delta);
    entry.accepted = Accepts(config, entry.score);
    if (entry.accepted) {
      result.text = std::move(candidate);
      result.embedding = std::move(candidate_embedding);
    }
    result.log.push_back(entry);
  }
  return result;
}

}  // namespace privsynth::synthesis
