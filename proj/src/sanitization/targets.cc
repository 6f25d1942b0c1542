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

#include "privsynth/sanitization/targets.h"

#include <cmath>
#include <set>

#include "nlohmann/json.hpp"
#include "privsynth/core/status.h"
#include "privsynth/core/text.h"
#include "spdlog/spdlog.h"

namespace privsynth::sanitization {
namespace {

using Json = nlohmann::json;

WeightMap Uniform(const AttributeMap& attributes) {
  WeightMap out;
  const double w = 1.0 / static_cast<double>(attributes.size());
  for (const auto& [key, value] : attributes) out[key] = w;
  return out;
}

absl::StatusOr<WeightMap> ParseWeights(std::string_view reply,
                                       const AttributeMap& attributes) {
  const size_t begin = reply.find('{');
  const size_t end = reply.rfind('}');
  if (begin == std::string_view::npos || end == std::string_view::npos ||
      end < begin) {
    return MakeError(ErrorCode::kParseError, "no JSON object in reply");
  }
  Json json = Json::parse(reply.substr(begin, end - begin + 1), nullptr,
                          /*allow_exceptions=*/false);
  if (json.is_discarded() || !json.is_object()) {
    return MakeError(ErrorCode::kParseError, "weights are not a JSON object");
  }
  WeightMap out;
  double total = 0.0;
  for (const auto& [key, value] : attributes) {
    double w = 0.0;
    if (auto it = json.find(key); it != json.end() && it->is_number()) {
      w = it->get<double>();
    }
    if (!std::isfinite(w) || w < 0.0) w = 0.0;
    out[key] = w;
    total += w;
  }
  if (!(total > 0.0)) {
    return MakeError(ErrorCode::kParseError, "weights sum to zero");
  }
  for (auto& [key, w] : out) w /= total;
  return out;
}

}  // namespace

WeightMap AssignSensitivityWeights(llm::Gateway& gateway,
                                   const AttributeMap& attributes,
                                   const llm::SamplingOptions& sampling) {
  if (attributes.empty()) return {};
  llm::GenerationRequest request = llm::MakeRequest(
      llm::tasks::kSensitivity, llm::templates::kSensitivity,
      {{"attributes", Json(attributes).dump(2)}}, sampling);
  absl::StatusOr<std::string> reply = gateway.Complete(request);
  absl::StatusOr<WeightMap> weights =
      reply.ok() ? ParseWeights(*reply, attributes) : reply.status();
  if (!weights.ok()) {
    spdlog::warn("sensitivity weights unavailable ({}); using uniform weights",
                 std::string(weights.status().message()));
    return Uniform(attributes);
  }
  return *std::move(weights);
}

std::vector<SanitizationTarget> SelectableUnits(
    const AttributeMap& attributes,
    const std::vector<AttributeGroup>& groups, const WeightMap& weights) {
  auto weight_of = [&weights](const std::string& key) {
    auto it = weights.find(key);
    return it == weights.end() ? 0.0 : std::max(0.0, it->second);
  };
  std::vector<SanitizationTarget> units;
  for (const auto& [key, value] : attributes) {
    SanitizationTarget t;
    t.key = key;
    t.value = value;
    t.weight = weight_of(key);
    units.push_back(std::move(t));
  }
  std::set<std::string> labels;
  for (const AttributeGroup& group : groups) {
    if (attributes.contains(group.label) || !labels.insert(group.label).second) {
      continue;
    }
    SanitizationTarget t;
    t.key = group.label;
    t.is_group = true;
    std::vector<std::string> values;
    for (const std::string& member : group.keys) {
      auto it = attributes.find(member);
      if (it == attributes.end()) continue;
      t.members.emplace_back(member, it->second);
      values.push_back(it->second);
      t.weight += weight_of(member);
    }
    if (t.members.empty()) continue;
    t.value = Join(values, "; ");
    units.push_back(std::move(t));
  }
  return units;
}

absl::StatusOr<std::vector<SanitizationTarget>> SelectTargets(
    const AttributeMap& attributes, const std::vector<AttributeGroup>& groups,
    const WeightMap& weights, int n, Rng& rng) {
  if (n < 1) {
    return MakeError(ErrorCode::kInvalidArgument, "need at least one target");
  }
  std::vector<SanitizationTarget> units =
      SelectableUnits(attributes, groups, weights);
  if (static_cast<size_t>(n) > units.size()) {
    return MakeError(ErrorCode::kInsufficientAttributes,
                     StrCat("requested ", n, " targets but only ",
                            units.size(), " selectable units"));
  }
  std::vector<SanitizationTarget> out;
  while (out.size() < static_cast<size_t>(n)) {
    std::vector<double> w;
    double total = 0.0;
    for (const SanitizationTarget& u : units) {
      w.push_back(u.weight);
      total += u.weight;
    }
    const size_t pick = total > 0.0 ? WeightedIndex(rng, w)
                                    : UniformIndex(rng, units.size());
    SanitizationTarget chosen = std::move(units[pick]);
    units.erase(units.begin() + static_cast<std::ptrdiff_t>(pick));
    chosen.label = Bernoulli(rng, 0.5) ? SanitizationLabel::kAbstract
                                       : SanitizationLabel::kDrop;
    out.push_back(std::move(chosen));
  }
  return out;
}

}  // namespace privsynth::sanitization
