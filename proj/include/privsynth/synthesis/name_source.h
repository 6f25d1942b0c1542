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

#ifndef PRIVSYNTH_SYNTHESIS_NAME_SOURCE_H_
#define PRIVSYNTH_SYNTHESIS_NAME_SOURCE_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/random.h"

namespace privsynth::synthesis {

struct NameEntry {
  std::string name;
  double weight = 0.0;
};

using NameTable = std::vector<NameEntry>;

// Two columns, name and weight. A first line whose weight column is not a
// number is treated as a header.
absl::StatusOr<NameTable> ParseNameCsv(std::string_view text);
absl::StatusOr<NameTable> LoadNameCsv(const std::string& path);

// Small built-in table used when no CSV is given.
const NameTable& DefaultNameTable();

// Draws a name with probability proportional to its weight.
absl::StatusOr<std::string> SampleFirstName(const NameTable& table, Rng& rng);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_NAME_SOURCE_H_
