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

#ifndef PRIVSYNTH_SANITIZATION_TARGETS_H_
#define PRIVSYNTH_SANITIZATION_TARGETS_H_

#include <map>
#include <string>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/random.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::sanitization {

using WeightMap = std::map<std::string, double>;

// Normalized to sum 1. Keys the provider omits get weight 0, negative
// weights are clamped to 0. Any provider or parse failure falls back to
// uniform weights with a warning.
WeightMap AssignSensitivityWeights(llm::Gateway& gateway,
                                   const AttributeMap& attributes,
                                   const llm::SamplingOptions& sampling);

// Individual attributes plus every group whose label does not clash with an
// attribute key. A group's weight is the sum of its members' weights.
std::vector<SanitizationTarget> SelectableUnits(
    const AttributeMap& attributes,
    const std::vector<AttributeGroup>& groups, const WeightMap& weights);

// `n` distinct units drawn without replacement with probability proportional
// to weight; once only zero-weight units remain they are drawn uniformly.
// Each gets ABSTRACT or DROP with equal probability.
absl::StatusOr<std::vector<SanitizationTarget>> SelectTargets(
    const AttributeMap& attributes, const std::vector<AttributeGroup>& groups,
    const WeightMap& weights, int n, Rng& rng);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_TARGETS_H_
