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

#include "privsynth/core/validation.h"

#include <set>

#include "fmt/format.h"
#include "privsynth/core/text.h"

namespace privsynth {

std::optional<int> EffectiveAge(const Profile& profile,
                                const std::optional<CalendarDate>& as_of) {
  if (profile.age.has_value()) return profile.age;
  if (profile.date_of_birth.has_value() && as_of.has_value()) {
    return profile.date_of_birth->YearsUntil(*as_of);
  }
  return std::nullopt;
}

std::vector<Violation> ValidateRecord(const Record& record,
                                      const ValidationOptions& options) {
  std::vector<Violation> out;
  if (record.id.empty()) {
    out.push_back({"missing_id", "record id is empty"});
  }
  const size_t words = WordCount(record.text);
  if (words < options.min_words) {
    out.push_back({"short", fmt::format("word count < {} ({})", options.min_words,
                                        words)});
  }
  if (record.attributes.empty()) {
    out.push_back({"attributes_empty", "attributes empty"});
  }
  for (const AttributeGroup& group : record.grouped_attributes) {
    for (const std::string& key : group.keys) {
      if (!record.attributes.contains(key)) {
        out.push_back({"dangling_group_key",
                       fmt::format("group '{}' references unknown attribute "
                                   "'{}'",
                                   group.label, key)});
      }
    }
  }
  const Profile& profile = record.profile;
  if (profile.first_name.empty()) {
    out.push_back({"first_name_empty", "profile first_name is empty"});
  }
  const std::optional<int> age =
      EffectiveAge(profile, options.age_reference_date);
  if (age.has_value() && *age < options.min_age) {
    out.push_back({"underage", fmt::format("age {} < {}", *age,
                                           options.min_age)});
  }
  if (profile.age.has_value() && profile.date_of_birth.has_value() &&
      options.age_reference_date.has_value()) {
    const int derived =
        profile.date_of_birth->YearsUntil(*options.age_reference_date);
    if (derived != *profile.age) {
      out.push_back({"age_inconsistent",
                     fmt::format("age {} disagrees with date_of_birth ({})",
                                 *profile.age, derived)});
    }
  }
  return out;
}

}  // namespace privsynth
