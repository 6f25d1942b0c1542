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

#ifndef PRIVSYNTH_SANITIZATION_INSTRUCTIONS_H_
#define PRIVSYNTH_SANITIZATION_INSTRUCTIONS_H_

#include <string>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/random.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"

namespace privsynth::sanitization {

struct TargetInstruction {
  SanitizationTarget target;
  std::string instruction;
};

// Composes one request from the per-target instructions. With probability
// `group_omission_p` a group target's step is replaced by one that names
// only the group label. Retention attributes are listed with their values.
absl::StatusOr<std::string> GenerateFinalInstruction(
    llm::Gateway& gateway, const std::vector<TargetInstruction>& steps,
    const std::vector<std::string>& retention, const AttributeMap& attributes,
    double group_omission_p, const llm::SamplingOptions& sampling, Rng& rng);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_INSTRUCTIONS_H_
