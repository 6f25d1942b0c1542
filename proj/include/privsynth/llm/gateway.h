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

#ifndef PRIVSYNTH_LLM_GATEWAY_H_
#define PRIVSYNTH_LLM_GATEWAY_H_

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <semaphore>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/llm/provider.h"

namespace privsynth::llm {

struct GatewayOptions {
  int max_retries = 3;
  std::chrono::milliseconds backoff_initial{1000};
  double backoff_factor = 2.0;
  int max_in_flight = 8;
  // Sampling used for judge calls.
  double judge_temperature = 0.0;
  int judge_max_tokens = 8;

  static GatewayOptions FromProviderConfig(const ProviderConfig& config);
};

// Maps a judge reply onto a preference score for draft A:
// "A" -> 1.0, "B" -> 0.0, "TIE" -> 0.5. The reply must consist of the verdict
// token alone, optionally prefixed by "Verdict:" and followed by a period;
// the last non-empty line is used. Anything else is UNPARSEABLE_VERDICT.
absl::StatusOr<double> ParseJudgeVerdict(std::string_view reply);

// Every model call in the pipelines goes through this class. It validates
// requests, bounds in-flight calls, retries TRANSPORT_ERROR with exponential
// backoff, rejects blank completions, and normalizes embeddings.
class Gateway {
 public:
  using Sleeper = std::function<void(std::chrono::milliseconds)>;

  Gateway(std::shared_ptr<LlmProvider> provider, GatewayOptions options = {});

  absl::StatusOr<std::string> Complete(const GenerationRequest& request);

  // Preference score in [0, 1] for `candidate` over `current` (1 means the
  // candidate is strictly preferred). The candidate is shown as draft A.
  absl::StatusOr<double> JudgePair(std::string_view current,
                                   std::string_view candidate,
                                   std::string_view criteria,
                                   std::optional<uint64_t> seed = std::nullopt);

  // One unit-norm vector per input, all of the same dimension.
  absl::StatusOr<std::vector<Embedding>> Embed(
      std::span<const std::string> texts);

  uint64_t request_count() const { return requests_.load(); }
  const LlmProvider& provider() const { return *provider_; }

  void SetSleeperForTesting(Sleeper sleeper) { sleeper_ = std::move(sleeper); }

 private:
  template <typename Fn>
  auto WithRetries(std::string_view what, Fn&& call) -> decltype(call());

  std::shared_ptr<LlmProvider> provider_;
  GatewayOptions options_;
  std::counting_semaphore<1024> in_flight_;
  std::atomic<uint64_t> requests_{0};
  Sleeper sleeper_;
};

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_GATEWAY_H_
