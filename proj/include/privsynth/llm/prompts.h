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

#ifndef PRIVSYNTH_LLM_PROMPTS_H_
#define PRIVSYNTH_LLM_PROMPTS_H_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "privsynth/llm/provider.h"

namespace privsynth::llm {

using PromptVars = std::map<std::string, std::string>;

// Prompt families. The task name travels with every request.
namespace tasks {
inline constexpr std::string_view kProfile = "profile";
inline constexpr std::string_view kRecordType = "record_type";
inline constexpr std::string_view kBackgroundContext = "background_context";
inline constexpr std::string_view kRecordFormat = "record_format";
inline constexpr std::string_view kDraft = "draft";
inline constexpr std::string_view kJudge = "judge";
inline constexpr std::string_view kAnnotate = "annotate";
inline constexpr std::string_view kGroup = "group";
inline constexpr std::string_view kCategory = "category";
inline constexpr std::string_view kSensitivity = "sensitivity";
inline constexpr std::string_view kRelevantChunks = "relevant_chunks";
inline constexpr std::string_view kExtractSpans = "extract_spans";
inline constexpr std::string_view kAbstractInstruction = "abstract_instruction";
inline constexpr std::string_view kApplyInstruction = "apply_instruction";
inline constexpr std::string_view kFinalInstruction = "final_instruction";
inline constexpr std::string_view kInferAttribute = "infer_attribute";
inline constexpr std::string_view kProximityJudge = "proximity_judge";
inline constexpr std::string_view kRetentionPresence = "retention_presence";
}  // namespace tasks

namespace templates {
extern const std::string_view kProfile;
extern const std::string_view kRecordType;
extern const std::string_view kBackgroundContext;
extern const std::string_view kRecordFormat;
extern const std::string_view kDraft;
extern const std::string_view kJudge;
extern const std::string_view kAnnotate;
extern const std::string_view kGroup;
extern const std::string_view kCategory;
extern const std::string_view kSensitivity;
extern const std::string_view kRelevantChunks;
extern const std::string_view kExtractSpans;
extern const std::string_view kAbstractInstruction;
extern const std::string_view kApplyInstruction;
extern const std::string_view kFinalInstruction;
extern const std::string_view kInferAttribute;
extern const std::string_view kProximityJudge;
extern const std::string_view kRetentionPresence;
}  // namespace templates

// Substitutes every "{name}" whose name is a key of `vars`. Placeholders
// without a binding are left untouched.
std::string RenderPrompt(std::string_view tmpl, const PromptVars& vars);

struct SamplingOptions {
  double temperature = 0.7;
  int max_tokens = 1024;
  std::optional<uint64_t> seed;
};

GenerationRequest MakeRequest(std::string_view task, std::string_view tmpl,
                              PromptVars vars, const SamplingOptions& sampling);

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_PROMPTS_H_
