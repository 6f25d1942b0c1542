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

#include "privsynth/sanitization/retention.h"

#include <algorithm>
#include <set>
#include <utility>

#include "privsynth/core/text.h"

namespace privsynth::sanitization {

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b) {
  std::vector<size_t> prev(b.size() + 1, 0), cur(b.size() + 1, 0);
  for (size_t i = 1; i <= a.size(); ++i) {
    for (size_t j = 1; j <= b.size(); ++j) {
      cur[j] = a[i - 1] == b[j - 1] ? prev[j - 1] + 1
                                    : std::max(prev[j], cur[j - 1]);
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

double RougeLF1(std::span<const std::string> candidate,
                std::span<const std::string> reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  const double lcs = static_cast<double>(LcsLength(candidate, reference));
  if (lcs == 0.0) return 0.0;
  const double precision = lcs / static_cast<double>(candidate.size());
  const double recall = lcs / static_cast<double>(reference.size());
  return 2.0 * precision * recall / (precision + recall);
}

std::vector<std::string> OverlapTokens(std::string_view key,
                                       std::string_view value) {
  return WhitespaceTokens(
      ToLowerAscii(StrCat(KeyDisplayName(key), " ", value)));
}

std::vector<std::string> SelectRetentionAttributes(
    const AttributeMap& attributes,
    const std::vector<SanitizationTarget>& targets, int m) {
  if (m <= 0) return {};
  std::set<std::string> excluded;
  std::vector<std::vector<std::string>> target_tokens;
  for (const SanitizationTarget& t : targets) {
    excluded.insert(t.key);
    for (const auto& [member, value] : t.members) excluded.insert(member);
    target_tokens.push_back(OverlapTokens(t.key, t.value));
  }
  std::vector<std::pair<double, std::string>> scored;
  for (const auto& [key, value] : attributes) {
    if (excluded.contains(key)) continue;
    const std::vector<std::string> tokens = OverlapTokens(key, value);
    double worst = 0.0;
    for (const auto& t : target_tokens) {
      worst = std::max(worst, RougeLF1(tokens, t));
    }
    scored.emplace_back(worst, key);
  }
  std::sort(scored.begin(), scored.end());
  std::vector<std::string> out;
  for (size_t i = 0; i < scored.size() && out.size() < static_cast<size_t>(m);
       ++i) {
    out.push_back(scored[i].second);
  }
  return out;
}

}  // namespace privsynth::sanitization
