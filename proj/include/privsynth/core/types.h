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

#ifndef PRIVSYNTH_CORE_TYPES_H_
#define PRIVSYNTH_CORE_TYPES_H_

#include <chrono>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"

namespace privsynth {

// Attribute values are kept as surface text, numeric or not, because leak
// checks compare exact strings.
using AttributeMap = std::map<std::string, std::string>;

class CalendarDate {
 public:
  CalendarDate() = default;
  explicit CalendarDate(std::chrono::year_month_day ymd) : ymd_(ymd) {}
  CalendarDate(int year, unsigned month, unsigned day);

  // Accepts ISO "YYYY-MM-DD".
  static absl::StatusOr<CalendarDate> Parse(std::string_view text);

  std::string ToString() const;
  bool ok() const { return ymd_.ok(); }
  int year() const { return static_cast<int>(ymd_.year()); }

  // Completed years from *this to `as_of`.
  int YearsUntil(const CalendarDate& as_of) const;

  friend bool operator==(const CalendarDate&, const CalendarDate&) = default;

 private:
  std::chrono::year_month_day ymd_{std::chrono::year{1970},
                                   std::chrono::month{1},
                                   std::chrono::day{1}};
};

struct Profile {
  std::string first_name;
  std::string last_name;
  std::string sex;
  std::string ethnicity;
  std::string citizenship;
  std::optional<CalendarDate> date_of_birth;
  std::optional<int> age;
  std::string id_type;
  std::string id_number;
  std::string passport_number;
  std::string phone_number;
  std::string email;
  std::string user_handle;
  std::string url;
  AttributeMap life_event;

  friend bool operator==(const Profile&, const Profile&) = default;
};

struct AttributeGroup {
  std::string label;
  std::vector<std::string> keys;

  friend bool operator==(const AttributeGroup&, const AttributeGroup&) =
      default;
};

struct Record {
  std::string id;
  std::string text;
  std::string record_type;
  std::string background_context;
  std::string format_desc;
  Profile profile;
  AttributeMap attributes;
  std::vector<AttributeGroup> grouped_attributes;
  std::optional<std::string> category;
  std::string generator_id;

  friend bool operator==(const Record&, const Record&) = default;
};

enum class SanitizationLabel { kAbstract, kDrop };

std::string_view LabelName(SanitizationLabel label);
absl::StatusOr<SanitizationLabel> ParseLabel(std::string_view name);

// One sanitization target: a single attribute, or an attribute group whose
// member (key, value) pairs are listed in `members`.
struct SanitizationTarget {
  std::string key;
  std::string value;
  SanitizationLabel label = SanitizationLabel::kDrop;
  bool is_group = false;
  double weight = 0.0;
  std::vector<std::pair<std::string, std::string>> members;

  // Every surface value that must not survive sanitization.
  std::vector<std::string> Values() const;

  friend bool operator==(const SanitizationTarget&,
                         const SanitizationTarget&) = default;
};

struct SanitizationTriplet {
  Record record;
  std::string final_instruction;
  std::string sanitized_text;
  std::vector<SanitizationTarget> targets;
  std::vector<std::string> retention;
  std::map<std::string, std::string> per_target_instructions;
  // Targets whose values never appeared in the record, so sanitizing them
  // changed nothing.
  std::vector<std::string> noop_targets;

  friend bool operator==(const SanitizationTriplet&,
                         const SanitizationTriplet&) = default;
};

enum class LeakType { kOk, kDirectLeak, kInferenceLeak, kProximityLeak };
enum class RetentionOutcome { kRetained, kLost };

std::string_view LeakTypeName(LeakType type);
absl::StatusOr<LeakType> ParseLeakType(std::string_view name);
std::string_view RetentionName(RetentionOutcome outcome);
absl::StatusOr<RetentionOutcome> ParseRetention(std::string_view name);

struct AttributePredictions {
  std::optional<std::string> sanitized;
  std::optional<std::string> original;

  friend bool operator==(const AttributePredictions&,
                         const AttributePredictions&) = default;
};

struct RecordFlags {
  bool successful_record = false;
  bool full_successful_record = false;
};

// Pure derivation of the two per-record success flags.
RecordFlags DeriveRecordFlags(
    const std::map<std::string, LeakType>& per_attribute,
    const std::map<std::string, RetentionOutcome>& retention_per_attribute);

struct LeakReport {
  std::string record_id;
  std::optional<std::string> category;
  std::map<std::string, LeakType> per_attribute;
  std::map<std::string, RetentionOutcome> retention_per_attribute;
  bool successful_record = false;
  bool full_successful_record = false;
  std::map<std::string, AttributePredictions> predictions;
  // Set when an evaluator call failed; such reports are excluded from
  // aggregates and counted separately.
  bool indeterminate = false;
  std::string error;

  // Recomputes the success flags from the two classification maps.
  void DeriveFlags();

  friend bool operator==(const LeakReport&, const LeakReport&) = default;
};

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_TYPES_H_
