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

#include "privsynth/evaluation/cascade.h"

#include <set>

#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "spdlog/spdlog.h"

namespace privsynth::evaluation {
namespace {

using Json = nlohmann::json;

absl::StatusOr<bool> ParseYesNo(std::string_view reply) {
  std::string_view last;
  for (std::string_view line : Split(reply, "\n")) {
    line = StripWhitespace(line);
    if (!line.empty()) last = line;
  }
  std::string upper = ToUpperAscii(last);
  std::string_view token = upper;
  ConsumeSuffix(&token, ".");
  if (token == "YES") return true;
  if (token == "NO") return false;
  return MakeError(ErrorCode::kUnparseableVerdict,
                   StrCat("expected YES or NO, got '", last.substr(0, 40),
                          "'"));
}

std::vector<EvalItem> ItemsFromJson(const Json& json) {
  std::vector<EvalItem> out;
  for (const Json& item : json) {
    out.push_back({item.at("key").get<std::string>(),
                   item.at("value").get<std::string>()});
  }
  return out;
}

Json ItemsToJson(const std::vector<EvalItem>& items) {
  Json out = Json::array();
  for (const EvalItem& item : items) {
    out.push_back({{"key", item.key}, {"value", item.value}});
  }
  return out;
}

}  // namespace

absl::Status ValidateCase(const EvalCase& c) {
  if (c.targets.empty()) {
    return MakeError(ErrorCode::kInvalidArgument, "case has no targets");
  }
  for (const auto* items : {&c.targets, &c.retention}) {
    for (const EvalItem& item : *items) {
      if (IsBlank(item.key) || IsBlank(item.value)) {
        return MakeError(ErrorCode::kInvalidArgument,
                         StrCat("empty key or value in case ", c.id));
      }
    }
  }
  return absl::OkStatus();
}

EvalCase CaseFromTriplet(const SanitizationTriplet& triplet) {
  EvalCase c;
  c.id = triplet.record.id;
  c.category = triplet.record.category;
  c.original = triplet.record.text;
  c.sanitized = triplet.sanitized_text;
  c.instruction = triplet.final_instruction;
  std::set<std::string> seen;
  for (const SanitizationTarget& t : triplet.targets) {
    if (t.is_group) {
      for (const auto& [key, value] : t.members) {
        if (seen.insert(key).second) c.targets.push_back({key, value});
      }
    } else if (seen.insert(t.key).second) {
      c.targets.push_back({t.key, t.value});
    }
  }
  for (const std::string& key : triplet.retention) {
    auto it = triplet.record.attributes.find(key);
    if (it != triplet.record.attributes.end()) {
      c.retention.push_back({key, it->second});
    }
  }
  return c;
}

Json CaseToJson(const EvalCase& c) {
  Json j;
  j["id"] = c.id;
  j["category"] = c.category ? Json(*c.category) : Json(nullptr);
  j["original"] = c.original;
  j["sanitized"] = c.sanitized;
  j["instruction"] = c.instruction;
  j["targets"] = ItemsToJson(c.targets);
  j["retention"] = ItemsToJson(c.retention);
  return j;
}

absl::StatusOr<EvalCase> CaseFromJson(const Json& j) {
  try {
    EvalCase c;
    c.id = j.value("id", "");
    if (auto it = j.find("category"); it != j.end() && it->is_string()) {
      c.category = it->get<std::string>();
    }
    c.original = j.at("original").get<std::string>();
    c.sanitized = j.at("sanitized").get<std::string>();
    c.instruction = j.value("instruction", "");
    c.targets = ItemsFromJson(j.at("targets"));
    if (auto it = j.find("retention"); it != j.end() && !it->is_null()) {
      c.retention = ItemsFromJson(*it);
    }
    return c;
  } catch (const std::exception& e) {
    return MakeError(ErrorCode::kParseError,
                     StrCat("eval case: ", e.what()));
  }
}

bool CheckDirectLeak(std::string_view value, std::string_view sanitized,
                     bool case_insensitive) {
  value = StripWhitespace(value);
  sanitized = StripWhitespace(sanitized);
  if (value.empty()) return false;
  if (case_insensitive) {
    return Contains(ToLowerAscii(sanitized), ToLowerAscii(value));
  }
  return Contains(sanitized, value);
}

bool PredictionMatches(std::string_view prediction, std::string_view value,
                       bool case_insensitive) {
  std::string a = NormalizeAnswer(prediction);
  std::string b = NormalizeAnswer(value);
  if (a.empty() || b.empty()) return false;
  return case_insensitive ? EqualsIgnoreCase(a, b) : a == b;
}

absl::StatusOr<std::string> PredictAttribute(llm::Gateway& gateway,
                                             std::string_view key,
                                             std::string_view text,
                                             const EvalOptions& options) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kInferAttribute, llm::templates::kInferAttribute,
      {{"attribute", KeyDisplayName(key)}, {"text", std::string(text)}},
      options.sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  return std::string(StripWhitespace(reply));
}

absl::StatusOr<InferenceResult> CheckInferenceLeak(
    llm::Gateway& gateway, std::string_view key, std::string_view value,
    std::string_view sanitized, const EvalOptions& options) {
  InferenceResult result;
  PRIVSYNTH_ASSIGN_OR_RETURN(result.prediction,
                             PredictAttribute(gateway, key, sanitized, options));
  result.leak =
      PredictionMatches(result.prediction, value, options.case_insensitive);
  return result;
}

absl::StatusOr<ProximityResult> CheckProximityLeak(
    llm::Gateway& gateway, std::string_view key, std::string_view value,
    std::string_view sanitized, std::string_view original,
    const EvalOptions& options, std::optional<std::string> known_sanitized) {
  ProximityResult result;
  if (known_sanitized) {
    result.prediction_sanitized = *std::move(known_sanitized);
  } else {
    PRIVSYNTH_ASSIGN_OR_RETURN(
        result.prediction_sanitized,
        PredictAttribute(gateway, key, sanitized, options));
  }
  PRIVSYNTH_ASSIGN_OR_RETURN(result.prediction_original,
                             PredictAttribute(gateway, key, original, options));
  if (PredictionMatches(result.prediction_sanitized,
                        result.prediction_original, options.case_insensitive)) {
    result.leak = true;
    return result;
  }
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kProximityJudge, llm::templates::kProximityJudge,
      {{"attribute", KeyDisplayName(key)},
       {"true_value", std::string(value)},
       {"prediction_a", result.prediction_sanitized},
       {"prediction_b", result.prediction_original}},
      options.sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  PRIVSYNTH_ASSIGN_OR_RETURN(double verdict, llm::ParseJudgeVerdict(reply));
  // A (sanitized closer) or TIE.
  result.leak = verdict >= 0.5;
  return result;
}

absl::StatusOr<TargetEvaluation> EvaluateTarget(llm::Gateway& gateway,
                                                const EvalCase& c,
                                                const EvalItem& target,
                                                const EvalOptions& options) {
  TargetEvaluation out;
  if (CheckDirectLeak(target.value, c.sanitized, options.case_insensitive)) {
    out.type = LeakType::kDirectLeak;
    return out;
  }
  absl::StatusOr<InferenceResult> inference = CheckInferenceLeak(
      gateway, target.key, target.value, c.sanitized, options);
  if (!inference.ok()) return Annotate(inference.status(), "inference tier");
  out.predictions.sanitized = inference->prediction;
  if (inference->leak) {
    out.type = LeakType::kInferenceLeak;
    return out;
  }
  absl::StatusOr<ProximityResult> proximity =
      CheckProximityLeak(gateway, target.key, target.value, c.sanitized,
                         c.original, options, inference->prediction);
  if (!proximity.ok()) return Annotate(proximity.status(), "proximity tier");
  out.predictions.original = proximity->prediction_original;
  out.type = proximity->leak ? LeakType::kProximityLeak : LeakType::kOk;
  return out;
}

absl::StatusOr<RetentionOutcome> EvaluateRetention(llm::Gateway& gateway,
                                                   const EvalCase& c,
                                                   const EvalItem& item,
                                                   const EvalOptions& options) {
  if (CheckDirectLeak(item.value, c.sanitized, options.case_insensitive)) {
    return RetentionOutcome::kRetained;
  }
  absl::StatusOr<std::string> prediction =
      PredictAttribute(gateway, item.key, c.sanitized, options);
  if (!prediction.ok()) {
    return Annotate(prediction.status(), "retention inference tier");
  }
  if (PredictionMatches(*prediction, item.value, options.case_insensitive)) {
    return RetentionOutcome::kRetained;
  }
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kRetentionPresence, llm::templates::kRetentionPresence,
      {{"text", c.sanitized},
       {"attribute", KeyDisplayName(item.key)},
       {"value", item.value},
       {"prediction", *prediction}},
      options.sampling);
  absl::StatusOr<std::string> reply = gateway.Complete(request);
  if (!reply.ok()) return Annotate(reply.status(), "retention presence tier");
  PRIVSYNTH_ASSIGN_OR_RETURN(bool present, ParseYesNo(*reply));
  return present ? RetentionOutcome::kRetained : RetentionOutcome::kLost;
}

LeakReport EvaluateRecord(llm::Gateway& gateway, const EvalCase& c,
                          const EvalOptions& options) {
  LeakReport report;
  report.record_id = c.id;
  report.category = c.category;
  auto indeterminate = [&report](const absl::Status& status) {
    report.indeterminate = true;
    report.error = std::string(status.message());
    report.successful_record = false;
    report.full_successful_record = false;
    spdlog::warn("record {} indeterminate: {}", report.record_id,
                 report.error);
    return report;
  };
  if (absl::Status valid = ValidateCase(c); !valid.ok()) {
    return indeterminate(valid);
  }
  for (const EvalItem& target : c.targets) {
    absl::StatusOr<TargetEvaluation> result =
        EvaluateTarget(gateway, c, target, options);
    if (!result.ok()) {
      return indeterminate(
          Annotate(result.status(), StrCat("target '", target.key, "'")));
    }
    report.per_attribute[target.key] = result->type;
    if (result->predictions.sanitized || result->predictions.original) {
      report.predictions[target.key] = result->predictions;
    }
  }
  for (const EvalItem& item : c.retention) {
    absl::StatusOr<RetentionOutcome> outcome =
        EvaluateRetention(gateway, c, item, options);
    if (!outcome.ok()) {
      return indeterminate(
          Annotate(outcome.status(), StrCat("retention '", item.key, "'")));
    }
    report.retention_per_attribute[item.key] = *outcome;
  }
  report.DeriveFlags();
  return report;
}

}  // namespace privsynth::evaluation
