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

#include "privsynth/llm/gateway.h"

#include <algorithm>
#include <cmath>
#include <thread>

#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/llm/prompts.h"
#include "spdlog/spdlog.h"

namespace privsynth::llm {

GatewayOptions GatewayOptions::FromProviderConfig(const ProviderConfig& c) {
  GatewayOptions options;
  options.max_retries = c.max_retries;
  options.backoff_initial = c.backoff_initial;
  options.backoff_factor = c.backoff_factor;
  options.max_in_flight = c.max_in_flight;
  return options;
}

absl::StatusOr<double> ParseJudgeVerdict(std::string_view reply) {
  std::string_view last;
  for (std::string_view line : Split(reply, "\n")) {
    line = StripWhitespace(line);
    if (!line.empty()) last = line;
  }
  std::string token = ToUpperAscii(last);
  std::string_view view = token;
  if (ConsumePrefix(&view, "VERDICT")) {
    view = StripLeadingWhitespace(view);
    if (!ConsumePrefix(&view, ":")) ConsumePrefix(&view, "-");
    view = StripLeadingWhitespace(view);
  }
  ConsumeSuffix(&view, ".");
  if (view == "A") return 1.0;
  if (view == "B") return 0.0;
  if (view == "TIE") return 0.5;
  return MakeError(ErrorCode::kUnparseableVerdict,
                   StrCat("no verdict token in reply: '",
                                reply.substr(0, 80), "'"));
}

Gateway::Gateway(std::shared_ptr<LlmProvider> provider, GatewayOptions options)
    : provider_(std::move(provider)),
      options_(options),
      in_flight_(std::clamp(options.max_in_flight, 1, 1024)),
      sleeper_([](std::chrono::milliseconds d) {
        std::this_thread::sleep_for(d);
      }) {}

template <typename Fn>
auto Gateway::WithRetries(std::string_view what, Fn&& call) -> decltype(call()) {
  double delay_ms = static_cast<double>(options_.backoff_initial.count());
  for (int attempt = 0;; ++attempt) {
    requests_.fetch_add(1);
    in_flight_.acquire();
    auto result = call();
    in_flight_.release();
    if (result.ok() ||
        !HasErrorCode(result.status(), ErrorCode::kTransportError)) {
      return result;
    }
    if (attempt >= options_.max_retries) {
      return Annotate(result.status(),
                      StrCat(what, " failed after ", attempt + 1,
                                   " attempt(s)"));
    }
    spdlog::warn("{} attempt {} failed: {}; retrying in {} ms", what,
                 attempt + 1, std::string(result.status().message()), delay_ms);
    sleeper_(std::chrono::milliseconds(static_cast<int64_t>(delay_ms)));
    delay_ms *= options_.backoff_factor;
  }
}

absl::StatusOr<std::string> Gateway::Complete(
    const GenerationRequest& request) {
  PRIVSYNTH_RETURN_IF_ERROR(ValidateRequest(request));
  absl::StatusOr<std::string> text = WithRetries(
      request.task.empty() ? "completion" : request.task,
      [&] { return provider_->Complete(request); });
  if (!text.ok()) return text.status();
  if (StripWhitespace(*text).empty()) {
    return MakeError(ErrorCode::kEmptyResponse,
                     StrCat("blank completion for task '", request.task,
                                  "'"));
  }
  return text;
}

absl::StatusOr<double> Gateway::JudgePair(std::string_view current,
                                          std::string_view candidate,
                                          std::string_view criteria,
                                          std::optional<uint64_t> seed) {
  if (StripWhitespace(current).empty() ||
      StripWhitespace(candidate).empty()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "judge_pair requires two non-empty texts");
  }
  SamplingOptions sampling;
  sampling.temperature = options_.judge_temperature;
  sampling.max_tokens = options_.judge_max_tokens;
  sampling.seed = seed;
  GenerationRequest request =
      MakeRequest(tasks::kJudge, templates::kJudge,
                  {{"criteria", std::string(criteria)},
                   {"draft_a", std::string(candidate)},
                   {"draft_b", std::string(current)}},
                  sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, Complete(request));
  return ParseJudgeVerdict(reply);
}

absl::StatusOr<std::vector<Embedding>> Gateway::Embed(
    std::span<const std::string> texts) {
  if (texts.empty()) return std::vector<Embedding>{};
  std::vector<std::string> batch(texts.begin(), texts.end());
  PRIVSYNTH_ASSIGN_OR_RETURN(
      std::vector<Embedding> vectors,
      WithRetries("embedding", [&] { return provider_->Embed(batch); }));
  if (vectors.size() != texts.size()) {
    return MakeError(ErrorCode::kProviderError,
                     StrCat("expected ", texts.size(),
                                  " embeddings, got ", vectors.size()));
  }
  const size_t dim = vectors.front().size();
  for (Embedding& v : vectors) {
    if (v.size() != dim || dim == 0) {
      return MakeError(ErrorCode::kDimensionMismatch,
                       StrCat("embedding dimensions ", dim, " and ",
                                    v.size(), " in one batch"));
    }
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      return MakeError(ErrorCode::kProviderError,
                       "embedding with zero or non-finite norm");
    }
    for (double& x : v) x /= norm;
  }
  return vectors;
}

}  // namespace privsynth::llm
