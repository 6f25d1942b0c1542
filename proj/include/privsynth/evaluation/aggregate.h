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

#ifndef PRIVSYNTH_EVALUATION_AGGREGATE_H_
#define PRIVSYNTH_EVALUATION_AGGREGATE_H_

#include <cstddef>
#include <map>
#include <span>
#include <string>

#include "absl/status/statusor.h"
#include "nlohmann/json.hpp"
#include "privsynth/core/types.h"

namespace privsynth::evaluation {

struct MetricsSummary {
  // Pooled OK attributes over all target attributes.
  double successful_attribute = 0.0;
  // Mean over records of the within-record OK fraction.
  double successful_att_per_record = 0.0;
  double successful_record = 0.0;
  double full_successful_record = 0.0;
  // Records or corpora without retention items count as fully retained.
  double retention_successful_attribute = 1.0;
  double retention_successful_record = 1.0;
  // Keyed "direct", "inference", "proximity"; only types that occurred.
  std::map<std::string, double> leak_type_ratios;
  size_t records = 0;
  size_t indeterminate = 0;
  size_t attributes = 0;
};

// Indeterminate reports are counted but excluded from every fraction.
// EMPTY_INPUT when no determinate report remains.
absl::StatusOr<MetricsSummary> Aggregate(std::span<const LeakReport> reports);

nlohmann::json SummaryToJson(const MetricsSummary& summary);

}  // namespace privsynth::evaluation

#endif  // PRIVSYNTH_EVALUATION_AGGREGATE_H_
