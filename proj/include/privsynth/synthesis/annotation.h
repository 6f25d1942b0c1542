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

#ifndef PRIVSYNTH_SYNTHESIS_ANNOTATION_H_
#define PRIVSYNTH_SYNTHESIS_ANNOTATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::synthesis {

// Non-empty profile fields and life-event entries under snake_case keys.
AttributeMap ProfileAttributes(const Profile& profile);

// Profile attributes merged with the attributes the provider extracts from
// the text. On a key collision the profile value is kept.
absl::StatusOr<AttributeMap> AnnotateAttributes(
    llm::Gateway& gateway, std::string_view record_text,
    const Profile& profile, const llm::SamplingOptions& sampling);

// Keys that a group named but that are absent from the attribute map are
// dropped and reported through `dangling` when it is non-null.
absl::StatusOr<std::vector<AttributeGroup>> GroupAttributes(
    llm::Gateway& gateway, const AttributeMap& attributes,
    const llm::SamplingOptions& sampling,
    std::vector<std::string>* dangling = nullptr);

// Returns an existing label when the reply matches one (case-insensitively);
// otherwise appends the new label to `known_categories`.
absl::StatusOr<std::string> CategorizeRecord(
    llm::Gateway& gateway, std::string_view record_text,
    std::vector<std::string>& known_categories,
    const llm::SamplingOptions& sampling);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_ANNOTATION_H_
