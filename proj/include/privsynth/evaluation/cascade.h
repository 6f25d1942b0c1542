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

#ifndef PRIVSYNTH_EVALUATION_CASCADE_H_
#define PRIVSYNTH_EVALUATION_CASCADE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::evaluation {

struct EvalItem {
  std::string key;
  std::string value;
  friend bool operator==(const EvalItem&, const EvalItem&) = default;
};

struct EvalCase {
  std::string id;
  std::optional<std::string> category;
  std::string original;
  std::string sanitized;
  std::string instruction;
  std::vector<EvalItem> targets;
  std::vector<EvalItem> retention;
  friend bool operator==(const EvalCase&, const EvalCase&) = default;
};

absl::Status ValidateCase(const EvalCase& eval_case);

// Group targets are expanded into their member attributes; duplicate keys
// are evaluated once.
EvalCase CaseFromTriplet(const SanitizationTriplet& triplet);

nlohmann::json CaseToJson(const EvalCase& eval_case);
absl::StatusOr<EvalCase> CaseFromJson(const nlohmann::json& json);

struct EvalOptions {
  bool case_insensitive = false;
  llm::SamplingOptions sampling{0.0, 64, std::nullopt};
};

// Substring test on trimmed value and text.
bool CheckDirectLeak(std::string_view value, std::string_view sanitized,
                     bool case_insensitive = false);

// Whitespace-collapsed, trimmed, trailing punctuation removed.
bool PredictionMatches(std::string_view prediction, std::string_view value,
                       bool case_insensitive = false);

absl::StatusOr<std::string> PredictAttribute(llm::Gateway& gateway,
                                             std::string_view key,
                                             std::string_view text,
                                             const EvalOptions& options);

struct InferenceResult {
  bool leak = false;
  std::string prediction;
};

absl::StatusOr<InferenceResult> CheckInferenceLeak(
    llm::Gateway& gateway, std::string_view key, std::string_view value,
    std::string_view sanitized, const EvalOptions& options);

struct ProximityResult {
  bool leak = false;
  std::string prediction_sanitized;
  std::string prediction_original;
};

// A leak when the prediction from the sanitized text is at least as close to
// the true value as the prediction from the original. Equal predictions
// settle it without a judge call. `known_sanitized` reuses a prediction
// already made from the sanitized text.
absl::StatusOr<ProximityResult> CheckProximityLeak(
    llm::Gateway& gateway, std::string_view key, std::string_view value,
    std::string_view sanitized, std::string_view original,
    const EvalOptions& options,
    std::optional<std::string> known_sanitized = std::nullopt);

struct TargetEvaluation {
  LeakType type = LeakType::kOk;
  AttributePredictions predictions;
};

// Direct, then inference, then proximity; stops at the first tier that
// fires.
absl::StatusOr<TargetEvaluation> EvaluateTarget(llm::Gateway& gateway,
                                                const EvalCase& eval_case,
                                                const EvalItem& target,
                                                const EvalOptions& options);

// Exact match, then inference match, then a direct presence query.
absl::StatusOr<RetentionOutcome> EvaluateRetention(llm::Gateway& gateway,
                                                   const EvalCase& eval_case,
                                                   const EvalItem& item,
                                                   const EvalOptions& options);

// Provider failures mark the report indeterminate instead of failing.
LeakReport EvaluateRecord(llm::Gateway& gateway, const EvalCase& eval_case,
                          const EvalOptions& options = {});

}  // namespace privsynth::evaluation

#endif  // PRIVSYNTH_EVALUATION_CASCADE_H_
