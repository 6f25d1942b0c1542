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

#include "privsynth/synthesis/filter.h"

#include <cctype>
#include <set>

#include "privsynth/core/text.h"
#include "privsynth/core/validation.h"

namespace privsynth::synthesis {

double RepeatedLineRatio(std::string_view text) {
  std::set<std::string_view> seen;
  size_t lines = 0;
  size_t repeats = 0;
  for (std::string_view line : Split(text, "\n")) {
    line = StripWhitespace(line);
    if (line.empty()) continue;
    ++lines;
    if (!seen.insert(line).second) ++repeats;
  }
  return lines == 0 ? 0.0
                    : static_cast<double>(repeats) / static_cast<double>(lines);
}

double NonAlnumRatio(std::string_view text) {
  size_t counted = 0;
  size_t other = 0;
  for (unsigned char c : text) {
    if (std::isspace(c)) continue;
    ++counted;
    if (c < 0x80 && !std::isalnum(c)) ++other;
  }
  return counted == 0 ? 0.0
                      : static_cast<double>(other) / static_cast<double>(counted);
}

std::vector<std::string> RejectionReasons(const Record& record,
                                          const FilterOptions& options) {
  std::vector<std::string> reasons;
  if (WordCount(record.text) < options.min_words) reasons.push_back("short");
  std::optional<int> age =
      EffectiveAge(record.profile, options.reference_date);
  if (age && *age < options.min_age) reasons.push_back("underage");
  if (RepeatedLineRatio(record.text) > options.max_repeated_line_ratio ||
      NonAlnumRatio(record.text) > options.max_non_alnum_ratio) {
    reasons.push_back("degenerate");
  }
  return reasons;
}

FilterResult FilterRecords(std::vector<Record> candidates,
                           const FilterOptions& options) {
  FilterResult result;
  for (Record& record : candidates) {
    std::vector<std::string> reasons = RejectionReasons(record, options);
    if (reasons.empty()) {
      result.kept.push_back(std::move(record));
    } else {
      result.rejected.push_back({std::move(record), std::move(reasons)});
    }
  }
  return result;
}

}  // namespace privsynth::synthesis
