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

#include "privsynth/evaluation/aggregate.h"

#include "privsynth/core/status.h"

namespace privsynth::evaluation {
namespace {

const char* RatioKey(LeakType type) {
  switch (type) {
    case LeakType::kDirectLeak:
      return "direct";
    case LeakType::kInferenceLeak:
      return "inference";
    case LeakType::kProximityLeak:
      return "proximity";
    case LeakType::kOk:
      break;
  }
  return "ok";
}

}  // namespace

absl::StatusOr<MetricsSummary> Aggregate(std::span<const LeakReport> reports) {
  MetricsSummary s;
  size_t ok_attributes = 0;
  size_t per_record_n = 0;
  double per_record_sum = 0.0;
  size_t successful = 0;
  size_t full = 0;
  size_t retention_items = 0;
  size_t retained = 0;
  size_t retention_records_ok = 0;
  std::map<std::string, size_t> failures;
  size_t failed = 0;
  for (const LeakReport& r : reports) {
    if (r.indeterminate) {
      ++s.indeterminate;
      continue;
    }
    ++s.records;
    const RecordFlags flags =
        DeriveRecordFlags(r.per_attribute, r.retention_per_attribute);
    successful += flags.successful_record;
    full += flags.full_successful_record;
    size_t record_ok = 0;
    for (const auto& [key, type] : r.per_attribute) {
      ++s.attributes;
      if (type == LeakType::kOk) {
        ++record_ok;
      } else {
        ++failures[RatioKey(type)];
        ++failed;
      }
    }
    ok_attributes += record_ok;
    if (!r.per_attribute.empty()) {
      per_record_sum += static_cast<double>(record_ok) /
                        static_cast<double>(r.per_attribute.size());
      ++per_record_n;
    }
    bool all_retained = true;
    for (const auto& [key, outcome] : r.retention_per_attribute) {
      ++retention_items;
      if (outcome == RetentionOutcome::kRetained) {
        ++retained;
      } else {
        all_retained = false;
      }
    }
    retention_records_ok += all_retained;
  }
  if (s.records == 0) {
    return MakeError(ErrorCode::kEmptyInput, "no determinate reports");
  }
  const double records = static_cast<double>(s.records);
  s.successful_attribute =
      s.attributes == 0 ? 1.0
                        : static_cast<double>(ok_attributes) /
                              static_cast<double>(s.attributes);
  s.successful_att_per_record =
      per_record_n == 0 ? 1.0
                        : per_record_sum / static_cast<double>(per_record_n);
  s.successful_record = static_cast<double>(successful) / records;
  s.full_successful_record = static_cast<double>(full) / records;
  s.retention_successful_attribute =
      retention_items == 0 ? 1.0
                           : static_cast<double>(retained) /
                                 static_cast<double>(retention_items);
  s.retention_successful_record =
      static_cast<double>(retention_records_ok) / records;
  for (const auto& [key, count] : failures) {
    s.leak_type_ratios[key] =
        static_cast<double>(count) / static_cast<double>(failed);
  }
  return s;
}

nlohmann::json SummaryToJson(const MetricsSummary& s) {
  nlohmann::json j;
  j["successful_attribute"] = s.successful_attribute;
  j["successful_att_per_record"] = s.successful_att_per_record;
  j["successful_record"] = s.successful_record;
  j["full_successful_record"] = s.full_successful_record;
  j["retention_successful_attribute"] = s.retention_successful_attribute;
  j["retention_successful_record"] = s.retention_successful_record;
  j["leak_type_ratios"] = s.leak_type_ratios;
  j["records"] = s.records;
  j["indeterminate"] = s.indeterminate;
  j["attributes"] = s.attributes;
  return j;
}

}  // namespace privsynth::evaluation
