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

#ifndef PRIVSYNTH_SYNTHESIS_INITIALIZATION_H_
#define PRIVSYNTH_SYNTHESIS_INITIALIZATION_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/random.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::synthesis {

struct ProfileOptions {
  std::vector<std::string> sex_options = {"Female", "Male"};
  std::vector<std::string> ethnicity_options = {
      "South Asian", "European",      "Black",           "East Asian",
      "Hispanic",    "Middle Eastern", "Southeast Asian", "Indigenous",
      "Pacific Islander", "Mixed"};
  std::vector<std::string> life_events = {
      "marriage",          "divorce",        "job loss",
      "promotion",         "medical diagnosis", "surgery",
      "relocation",        "home purchase",  "bankruptcy",
      "arrest",            "graduation",     "birth of a child",
      "death of a parent", "car accident",   "starting a business"};
  // Birth years are drawn uniformly from this range; ages are computed at
  // `reference_date`.
  int birth_year_min = 1940;
  int birth_year_max = 2008;
  CalendarDate reference_date{2025, 1, 1};
};

// Profile rendered as "- Key: Value" lines, the shape the prompts embed.
std::string RenderProfile(const Profile& profile);

// Parses the profile reply. `first_name` always wins; date of birth and age
// fall back to `sampled` when the reply omits or garbles them. PARSE_ERROR
// when a required field is missing.
absl::StatusOr<Profile> ParseProfileResponse(std::string_view reply,
                                             std::string_view first_name,
                                             const Profile& sampled);

absl::StatusOr<Profile> GenerateProfile(llm::Gateway& gateway,
                                        std::string_view first_name,
                                        const ProfileOptions& options,
                                        const llm::SamplingOptions& sampling,
                                        Rng& rng);

// The private detail that the record is built around: one life-event entry,
// or a basic field when the profile has none.
std::string PickFocusAttribute(const Profile& profile, Rng& rng);

absl::StatusOr<std::string> GenerateRecordType(
    llm::Gateway& gateway, const Profile& profile,
    std::string_view record_formality, std::string_view focus_attribute,
    const llm::SamplingOptions& sampling, Rng& rng);

absl::StatusOr<std::string> GenerateBackgroundContext(
    llm::Gateway& gateway, const Profile& profile, std::string_view record_type,
    std::string_view focus_attribute, const llm::SamplingOptions& sampling,
    Rng& rng);

absl::StatusOr<std::string> GenerateFormat(llm::Gateway& gateway,
                                           std::string_view record_type,
                                           std::string_view context,
                                           const llm::SamplingOptions& sampling,
                                           Rng& rng);

struct DraftInputs {
  Profile profile;
  std::string record_type;
  std::string background_context;
  std::string format_desc;
};

llm::GenerationRequest MakeDraftRequest(const DraftInputs& inputs,
                                        const llm::SamplingOptions& sampling);

absl::StatusOr<std::string> DraftRecord(llm::Gateway& gateway,
                                        const DraftInputs& inputs,
                                        const llm::SamplingOptions& sampling);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_INITIALIZATION_H_
