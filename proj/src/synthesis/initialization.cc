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

#include "privsynth/synthesis/initialization.h"

#include <array>
#include <cctype>
#include <charconv>
#include <map>
#include <utility>

#include "fmt/format.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "privsynth/core/validation.h"
#include "privsynth/synthesis/list_parser.h"

namespace privsynth::synthesis {
namespace {

using llm::SamplingOptions;

constexpr std::array<std::pair<std::string_view, std::string_view>, 11>
    kRequiredFields = {{{"last_name", "Last Name"},
                        {"sex", "Sex"},
                        {"ethnicity", "Ethnicity"},
                        {"citizenship", "Citizenship"},
                        {"id_type", "ID type"},
                        {"id_number", "ID Number"},
                        {"passport_number", "Passport Number"},
                        {"phone_number", "Phone Number"},
                        {"email", "Email"},
                        {"user_handle", "User Handle"},
                        {"url", "URL"}}};

std::string TitleCase(std::string_view snake) {
  std::string out = KeyDisplayName(snake);
  bool start = true;
  for (char& c : out) {
    if (start) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    start = c == ' ';
  }
  return out;
}

std::string OptionList(const std::vector<std::string>& options) {
  return Join(options, ", ");
}

SamplingOptions Reseeded(const SamplingOptions& sampling, Rng& rng) {
  SamplingOptions out = sampling;
  out.seed = rng();
  return out;
}

absl::StatusOr<std::string> PickFromList(llm::Gateway& gateway,
                                         llm::GenerationRequest request,
                                         Rng& rng) {
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  absl::StatusOr<std::vector<std::string>> items = ParseOrderedList(reply);
  if (!items.ok()) {
    return Annotate(items.status(), StrCat(request.task, " reply"));
  }
  return (*items)[UniformIndex(rng, items->size())];
}

// Splits "- **Key**: value" into snake key and value.
bool SplitField(std::string_view line, std::string* key, std::string* value) {
  line = StripWhitespace(line);
  if (!ConsumePrefix(&line, "- ")) ConsumePrefix(&line, "* ");
  const size_t colon = line.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  std::string raw_key = ReplaceAll(line.substr(0, colon), "*", "");
  *key = SnakeCase(raw_key);
  std::string_view v = StripWhitespace(line.substr(colon + 1));
  std::string cleaned = ReplaceAll(v, "**", "");
  *value = std::string(StripWhitespace(cleaned));
  return !key->empty();
}

}  // namespace

std::string RenderProfile(const Profile& p) {
  std::string out;
  auto line = [&out](std::string_view key, std::string_view value) {
    if (!value.empty()) StrAppend(&out, "- ", key, ": ", value, "\n");
  };
  line("First Name", p.first_name);
  line("Last Name", p.last_name);
  line("Sex", p.sex);
  line("Ethnicity", p.ethnicity);
  line("Citizenship", p.citizenship);
  if (p.date_of_birth) line("Date of Birth", p.date_of_birth->ToString());
  if (p.age) line("Age", std::to_string(*p.age));
  line("ID type", p.id_type);
  line("ID Number", p.id_number);
  line("Passport Number", p.passport_number);
  line("Phone Number", p.phone_number);
  line("Email", p.email);
  line("User Handle", p.user_handle);
  line("URL", p.url);
  if (!p.life_event.empty()) {
    out += "- Attributes:\n";
    for (const auto& [key, value] : p.life_event) {
      StrAppend(&out, "  - ", TitleCase(key), ": ", value, "\n");
    }
  }
  return out;
}

absl::StatusOr<Profile> ParseProfileResponse(std::string_view reply,
                                             std::string_view first_name,
                                             const Profile& sampled) {
  std::map<std::string, std::string> fields;
  AttributeMap events;
  for (std::string_view line : Split(reply, "\n")) {
    std::string key, value;
    if (!SplitField(line, &key, &value)) continue;
    if (key == "attributes" || key == "life_event" || key == "life_events") {
      continue;  // section header
    }
    bool known = key == "first_name" || key == "date_of_birth" || key == "age";
    for (const auto& [snake, display] : kRequiredFields) {
      if (key == snake) known = true;
    }
    if (value.empty()) continue;
    if (known) {
      fields.emplace(key, value);
    } else {
      events.emplace(key, value);
    }
  }
  std::vector<std::string> missing;
  for (const auto& [snake, display] : kRequiredFields) {
    if (!fields.contains(std::string(snake))) missing.emplace_back(display);
  }
  if (events.empty()) missing.emplace_back("life event attributes");
  if (!missing.empty()) {
    return MakeError(ErrorCode::kParseError,
                     StrCat("profile reply is missing: ", Join(missing, ", ")));
  }
  Profile p;
  p.first_name = std::string(first_name);
  p.last_name = fields["last_name"];
  p.sex = fields["sex"];
  p.ethnicity = fields["ethnicity"];
  p.citizenship = fields["citizenship"];
  p.id_type = fields["id_type"];
  p.id_number = fields["id_number"];
  p.passport_number = fields["passport_number"];
  p.phone_number = fields["phone_number"];
  p.email = fields["email"];
  p.user_handle = fields["user_handle"];
  p.url = fields["url"];
  p.life_event = std::move(events);
  p.date_of_birth = sampled.date_of_birth;
  p.age = sampled.age;
  if (auto it = fields.find("date_of_birth"); it != fields.end()) {
    if (auto date = CalendarDate::Parse(it->second); date.ok()) {
      p.date_of_birth = *date;
    }
  }
  if (auto it = fields.find("age"); it != fields.end()) {
    int age = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), age);
    if (ec == std::errc{}) p.age = age;
  }
  return p;
}

absl::StatusOr<Profile> GenerateProfile(llm::Gateway& gateway,
                                        std::string_view first_name,
                                        const ProfileOptions& options,
                                        const SamplingOptions& sampling,
                                        Rng& rng) {
  if (options.birth_year_max < options.birth_year_min) {
    return MakeError(ErrorCode::kConfigError, "empty birth-year range");
  }
  Profile sampled;
  sampled.first_name = std::string(first_name);
  const int span = options.birth_year_max - options.birth_year_min + 1;
  const int year =
      options.birth_year_min + static_cast<int>(UniformIndex(rng, span));
  const unsigned month = 1 + static_cast<unsigned>(UniformIndex(rng, 12));
  const unsigned day = 1 + static_cast<unsigned>(UniformIndex(rng, 28));
  sampled.date_of_birth = CalendarDate(year, month, day);
  sampled.age = sampled.date_of_birth->YearsUntil(options.reference_date);

  const std::string demographics = fmt::format(
      "- First Name: {}\n- Date of Birth: {}\n- Age: {}", first_name,
      sampled.date_of_birth->ToString(), *sampled.age);
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kProfile, llm::templates::kProfile,
      {{"demographics", demographics},
       {"sex_options", OptionList(options.sex_options)},
       {"ethnicity_options", OptionList(options.ethnicity_options)},
       {"life_events", OptionList(options.life_events)}},
      Reseeded(sampling, rng));
  PRIVSYNTH_ASSIGN_OR_RETURN(std::string reply, gateway.Complete(request));
  return ParseProfileResponse(reply, first_name, sampled);
}

std::string PickFocusAttribute(const Profile& profile, Rng& rng) {
  if (!profile.life_event.empty()) {
    auto it = profile.life_event.begin();
    std::advance(it, UniformIndex(rng, profile.life_event.size()));
    return it->second;
  }
  static constexpr std::array<std::string_view, 4> kFallback = {
      "phone number", "ID number", "email", "date of birth"};
  return std::string(kFallback[UniformIndex(rng, kFallback.size())]);
}

absl::StatusOr<std::string> GenerateRecordType(
    llm::Gateway& gateway, const Profile& profile,
    std::string_view record_formality, std::string_view focus_attribute,
    const SamplingOptions& sampling, Rng& rng) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kRecordType, llm::templates::kRecordType,
      {{"profile", RenderProfile(profile)},
       {"record_formality", std::string(record_formality)},
       {"name", StrCat(profile.first_name, " ", profile.last_name)},
       {"attribute", std::string(focus_attribute)}},
      Reseeded(sampling, rng));
  return PickFromList(gateway, std::move(request), rng);
}

absl::StatusOr<std::string> GenerateBackgroundContext(
    llm::Gateway& gateway, const Profile& profile, std::string_view record_type,
    std::string_view focus_attribute, const SamplingOptions& sampling,
    Rng& rng) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kBackgroundContext, llm::templates::kBackgroundContext,
      {{"profile", RenderProfile(profile)},
       {"record_type", std::string(record_type)},
       {"first_name", profile.first_name},
       {"attribute", std::string(focus_attribute)}},
      Reseeded(sampling, rng));
  return PickFromList(gateway, std::move(request), rng);
}

absl::StatusOr<std::string> GenerateFormat(llm::Gateway& gateway,
                                           std::string_view record_type,
                                           std::string_view context,
                                           const SamplingOptions& sampling,
                                           Rng& rng) {
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kRecordFormat, llm::templates::kRecordFormat,
      {{"record_type", std::string(record_type)},
       {"background_context", std::string(context)}},
      Reseeded(sampling, rng));
  return PickFromList(gateway, std::move(request), rng);
}

llm::GenerationRequest MakeDraftRequest(const DraftInputs& inputs,
                                        const SamplingOptions& sampling) {
  return llm::MakeRequest(
      llm::tasks::kDraft, llm::templates::kDraft,
      {{"profile", RenderProfile(inputs.profile)},
       {"record_type", inputs.record_type},
       {"background_context", inputs.background_context},
       {"name", inputs.profile.first_name},
       {"format", inputs.format_desc}},
      sampling);
}

absl::StatusOr<std::string> DraftRecord(llm::Gateway& gateway,
                                        const DraftInputs& inputs,
                                        const SamplingOptions& sampling) {
  if (inputs.profile.first_name.empty() || IsBlank(inputs.record_type) ||
      IsBlank(inputs.background_context) || IsBlank(inputs.format_desc)) {
    return MakeError(ErrorCode::kInvalidArgument,
                     "draft inputs must be non-empty");
  }
  PRIVSYNTH_ASSIGN_OR_RETURN(
      std::string reply,
      gateway.Complete(MakeDraftRequest(inputs, sampling)));
  return std::string(StripWhitespace(reply));
}

}  // namespace privsynth::synthesis
