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

#include "privsynth/core/types.h"

#include <charconv>

#include "fmt/format.h"
#include "privsynth/core/status.h"

namespace privsynth {

CalendarDate::CalendarDate(int year, unsigned month, unsigned day)
    : ymd_(std::chrono::year{year}, std::chrono::month{month},
           std::chrono::day{day}) {}

absl::StatusOr<CalendarDate> CalendarDate::Parse(std::string_view text) {
  int y = 0;
  unsigned m = 0;
  unsigned d = 0;
  auto bad = [&] {
    return MakeError(ErrorCode::kParseError,
                     fmt::format("invalid date '{}'", text));
  };
  if (text.size() != 10 || text[4] != '-' || text[7] != '-') return bad();
  const char* begin = text.data();
  if (std::from_chars(begin, begin + 4, y).ec != std::errc{} ||
      std::from_chars(begin + 5, begin + 7, m).ec != std::errc{} ||
      std::from_chars(begin + 8, begin + 10, d).ec != std::errc{}) {
    return bad();
  }
  CalendarDate date(y, m, d);
  if (!date.ok()) return bad();
  return date;
}

std::string CalendarDate::ToString() const {
  return fmt::format("{:04d}-{:02d}-{:02d}", static_cast<int>(ymd_.year()),
                         static_cast<unsigned>(ymd_.month()),
                         static_cast<unsigned>(ymd_.day()));
}

int CalendarDate::YearsUntil(const CalendarDate& as_of) const {
  int years = as_of.year() - year();
  const auto birthday_month = static_cast<unsigned>(ymd_.month());
  const auto birthday_day = static_cast<unsigned>(ymd_.day());
  const auto as_of_month = static_cast<unsigned>(as_of.ymd_.month());
  const auto as_of_day = static_cast<unsigned>(as_of.ymd_.day());
  if (as_of_month < birthday_month ||
      (as_of_month == birthday_month && as_of_day < birthday_day)) {
    --years;
  }
  return years;
}

std::string_view LabelName(SanitizationLabel label) {
  return label == SanitizationLabel::kAbstract ? "ABSTRACT" : "DROP";
}

absl::StatusOr<SanitizationLabel> ParseLabel(std::string_view name) {
  if (name == "ABSTRACT") return SanitizationLabel::kAbstract;
  if (name == "DROP") return SanitizationLabel::kDrop;
  return MakeError(ErrorCode::kParseError,
                   fmt::format("unknown sanitization label '{}'", name));
}

std::vector<std::string> SanitizationTarget::Values() const {
  if (!is_group) return {value};
  std::vector<std::string> out;
  out.reserve(members.size());
  for (const auto& [key, member_value] : members) {
    out.push_back(member_value);
  }
  return out;
}

std::string_view LeakTypeName(LeakType type) {
  switch (type) {
    case LeakType::kOk:
      return "OK";
    case LeakType::kDirectLeak:
      return "DIRECT_LEAK";
    case LeakType::kInferenceLeak:
      return "INFERENCE_LEAK";
    case LeakType::kProximityLeak:
      return "PROXIMITY_LEAK";
  }
  return "OK";
}

absl::StatusOr<LeakType> ParseLeakType(std::string_view name) {
  for (LeakType type : {LeakType::kOk, LeakType::kDirectLeak,
                        LeakType::kInferenceLeak, LeakType::kProximityLeak}) {
    if (LeakTypeName(type) == name) return type;
  }
  return MakeError(ErrorCode::kParseError,
                   fmt::format("unknown leak type '{}'", name));
}

std::string_view RetentionName(RetentionOutcome outcome) {
  return outcome == RetentionOutcome::kRetained ? "RETAINED" : "LOST";
}

absl::StatusOr<RetentionOutcome> ParseRetention(std::string_view name) {
  if (name == "RETAINED") return RetentionOutcome::kRetained;
  if (name == "LOST") return RetentionOutcome::kLost;
  return MakeError(ErrorCode::kParseError,
                   fmt::format("unknown retention outcome '{}'", name));
}

RecordFlags DeriveRecordFlags(
    const std::map<std::string, LeakType>& per_attribute,
    const std::map<std::string, RetentionOutcome>& retention_per_attribute) {
  RecordFlags flags;
  flags.successful_record = true;
  for (const auto& [key, type] : per_attribute) {
    if (type != LeakType::kOk) flags.successful_record = false;
  }
  flags.full_successful_record = flags.successful_record;
  for (const auto& [key, outcome] : retention_per_attribute) {
    if (outcome != RetentionOutcome::kRetained) {
      flags.full_successful_record = false;
    }
  }
  return flags;
}

void LeakReport::DeriveFlags() {
  const RecordFlags flags =
      DeriveRecordFlags(per_attribute, retention_per_attribute);
  successful_record = flags.successful_record;
  full_successful_record = flags.full_successful_record;
}

}  // namespace privsynth
