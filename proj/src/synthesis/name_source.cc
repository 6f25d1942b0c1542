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

#include "privsynth/synthesis/name_source.h"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "fmt/format.h"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"

namespace privsynth::synthesis {
namespace {

bool ParseWeight(std::string_view text, double* out) {
  const std::string s(StripWhitespace(text));
  if (s.empty()) return false;
  char* end = nullptr;
  *out = std::strtod(s.c_str(), &end);
  return end == s.c_str() + s.size() && std::isfinite(*out);
}

}  // namespace

absl::StatusOr<NameTable> ParseNameCsv(std::string_view text) {
  NameTable table;
  size_t line_no = 0;
  for (std::string_view line : Split(text, "\n")) {
    ++line_no;
    ConsumeSuffix(&line, "\r");
    if (IsBlank(line) || StripWhitespace(line).starts_with('#')) continue;
    const size_t comma = line.rfind(',');
    double weight = 0.0;
    if (comma == std::string_view::npos ||
        !ParseWeight(line.substr(comma + 1), &weight)) {
      if (table.empty() && line_no == 1) continue;  // header
      return MakeError(ErrorCode::kParseError,
                       fmt::format("names line {}: expected 'name,weight'",
                                   line_no));
    }
    std::string_view name = StripWhitespace(line.substr(0, comma));
    if (name.size() >= 2 && name.front() == '"' && name.back() == '"') {
      name = name.substr(1, name.size() - 2);
    }
    if (name.empty() || weight < 0.0) {
      return MakeError(ErrorCode::kParseError,
                       fmt::format("names line {}: empty name or negative "
                                   "weight",
                                   line_no));
    }
    table.push_back({std::string(name), weight});
  }
  return table;
}

absl::StatusOr<NameTable> LoadNameCsv(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return MakeError(ErrorCode::kIoError,
                     fmt::format("cannot open name source '{}'", path));
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseNameCsv(buffer.str());
}

absl::StatusOr<std::string> SampleFirstName(const NameTable& table, Rng& rng) {
  std::vector<double> weights;
  weights.reserve(table.size());
  double total = 0.0;
  for (const NameEntry& entry : table) {
    weights.push_back(entry.weight);
    total += entry.weight;
  }
  if (table.empty() || !(total > 0.0)) {
    return MakeError(ErrorCode::kEmptySource,
                     "name source has no entries with positive weight");
  }
  return table[WeightedIndex(rng, weights)].name;
}

const NameTable& DefaultNameTable() {
  static const NameTable* table = new NameTable{
      {"James", 4.5},
      {"Mary", 4.1},
      {"Robert", 3.9},
      {"Patricia", 3.2},
      {"John", 3.9},
      {"Jennifer", 2.8},
      {"Michael", 3.8},
      {"Linda", 2.4},
      {"David", 3.3},
      {"Elizabeth", 2.6},
      {"William", 3.0},
      {"Barbara", 2.0},
      {"Richard", 2.3},
      {"Susan", 1.9},
      {"Joseph", 2.1},
      {"Jessica", 1.8},
      {"Thomas", 1.9},
      {"Sarah", 1.8},
      {"Carlos", 0.9},
      {"Maria", 1.6},
      {"Wei", 0.6},
      {"Mei", 0.5},
      {"Aisha", 0.5},
      {"Mohammed", 0.6},
      {"Priya", 0.5},
      {"Arjun", 0.4},
      {"Hiroshi", 0.3},
      {"Yuki", 0.3},
      {"Olga", 0.3},
      {"Dmitri", 0.3},
      {"Fatima", 0.5},
      {"Kwame", 0.3},
      {"Amara", 0.3},
      {"Sofia", 1.1},
      {"Diego", 0.7},
      {"Lucia", 0.6},
      {"Ngozi", 0.2},
      {"Tomasz", 0.2},
      {"Ingrid", 0.2},
      {"Liam", 1.7},
  };
  return *table;
}

}  // namespace privsynth::synthesis
