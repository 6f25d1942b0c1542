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

#ifndef PRIVSYNTH_SANITIZATION_RETENTION_H_
#define PRIVSYNTH_SANITIZATION_RETENTION_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "privsynth/core/types.h"

namespace privsynth::sanitization {

size_t LcsLength(std::span<const std::string> a,
                 std::span<const std::string> b);

// ROUGE-L F1 (beta = 1). Zero when either side is empty.
double RougeLF1(std::span<const std::string> candidate,
                std::span<const std::string> reference);

// Lowercased whitespace tokens of "key value", with underscores in the key
// read as spaces.
std::vector<std::string> OverlapTokens(std::string_view key,
                                       std::string_view value);

// The `m` non-target attributes whose highest ROUGE-L F1 against any target
// is lowest; ties go to the lexicographically smaller key. Members of group
// targets count as targets.
std::vector<std::string> SelectRetentionAttributes(
    const AttributeMap& attributes,
    const std::vector<SanitizationTarget>& targets, int m);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_RETENTION_H_
