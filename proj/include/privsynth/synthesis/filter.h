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

#ifndef PRIVSYNTH_SYNTHESIS_FILTER_H_
#define PRIVSYNTH_SYNTHESIS_FILTER_H_

#include <string>
#include <string_view>
#include <vector>

#include "privsynth/core/types.h"

namespace privsynth::synthesis {

struct FilterOptions {
  size_t min_words = 64;
  int min_age = 18;
  CalendarDate reference_date{2025, 1, 1};
  double max_repeated_line_ratio = 0.5;
  double max_non_alnum_ratio = 0.6;
};

struct Rejection {
  Record record;
  std::vector<std::string> reasons;
};

struct FilterResult {
  std::vector<Record> kept;
  std::vector<Rejection> rejected;
};

// Share of non-empty lines that repeat an earlier line.
double RepeatedLineRatio(std::string_view text);

// Share of non-whitespace bytes that are not ASCII letters or digits. Bytes
// of multi-byte UTF-8 sequences count as alphanumeric.
double NonAlnumRatio(std::string_view text);

// Every applicable reason among "short", "underage" and "degenerate"; empty
// when the record is kept.
std::vector<std::string> RejectionReasons(const Record& record,
                                          const FilterOptions& options);

FilterResult FilterRecords(std::vector<Record> candidates,
                           const FilterOptions& options = {});

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_FILTER_H_
