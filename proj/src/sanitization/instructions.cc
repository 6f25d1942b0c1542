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

#include "privsynth/sanitization/instructions.h"

#include "nlohmann/json.hpp"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/sanitization/rewriting.h"

namespace privsynth::sanitization {

absl::StatusOr<std::string> GenerateFinalInstruction(
    llm::Gateway& gateway, const std::vector<TargetInstruction>& steps,
    const std::vector<std::string>& retention, const AttributeMap& attributes,
    double group_omission_p, const llm::SamplingOptions& sampling, Rng& rng) {
  if (steps.empty()) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "no per-target instructions to compose");
  }
  std::vector<std::string> parts;
  std::string listing;
  for (const TargetInstruction& step : steps) {
    std::string text = step.instruction;
    if (step.target.is_group && Bernoulli(rng, group_omission_p)) {
      text = GroupLabelInstruction(step.target);
    }
    StrAppend(&listing, "- ", text, "\n");
    parts.push_back(std::move(text));
  }
  std::string keep;
  std::vector<std::string> keep_keys;
  for (const std::string& key : retention) {
    auto it = attributes.find(key);
    const std::string value = it == attributes.end() ? "" : it->second;
    StrAppend(&keep, "- ", KeyDisplayName(key), ": ", value, "\n");
    keep_keys.push_back(key);
  }
  if (keep.empty()) keep = "(none)\n";
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kFinalInstruction, llm::templates::kFinalInstruction,
      {{"instructions", listing},
       {"retention", keep},
       {"instruction_list", nlohmann::json(parts).dump()},
       {"retention_keys", nlohmann::json(keep_keys).dump()}},
      sampling);
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  return std::string(StripWhitespace(reply));
}

}  // namespace privsynth::sanitization
