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

#ifndef PRIVSYNTH_SANITIZATION_REWRITING_H_
#define PRIVSYNTH_SANITIZATION_REWRITING_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "absl/status/statusor.h"
#include "privsynth/core/types.h"
#include "privsynth/llm/gateway.h"
#include "privsynth/llm/prompts.h"
#include "privsynth/sanitization/chunking.h"

namespace privsynth::sanitization {

struct RelevantChunks {
  std::vector<size_t> indices;
  // The provider failed and only the verbatim pre-pass was used.
  bool degraded = false;
};

// Chunks that contain any target value verbatim, unioned with the chunks the
// provider flags. Sorted, unique, all valid indices.
RelevantChunks FindRelevantChunks(llm::Gateway& gateway,
                                  const SanitizationTarget& target,
                                  std::span<const Chunk> chunks,
                                  const llm::SamplingOptions& sampling);

using Span = std::pair<size_t, size_t>;

struct SpanSet {
  std::string target_key;
  size_t chunk_index = 0;
  std::vector<Span> spans;
  // Provider spans that had to be clamped or were dropped as empty.
  size_t repaired = 0;
};

// Clamps to [0, length], drops empty spans, sorts and merges overlaps.
std::vector<Span> NormalizeSpans(std::vector<Span> spans, size_t length,
                                 size_t* repaired = nullptr);

// Verbatim occurrences of the target values plus provider spans, given
// either as [start, end] pairs or as quoted strings.
absl::StatusOr<SpanSet> ExtractSpans(llm::Gateway& gateway,
                                     const SanitizationTarget& target,
                                     const Chunk& chunk,
                                     const llm::SamplingOptions& sampling);

std::string DropInstruction(const SanitizationTarget& target);

// Names only the group label, for group targets whose member names are
// omitted from the final instruction.
std::string GroupLabelInstruction(const SanitizationTarget& target);

// DROP targets use a fixed template. ABSTRACT targets ask the provider, and
// yield nullopt when there is no relevant context to ground them in.
absl::StatusOr<std::optional<std::string>> BuildInstruction(
    llm::Gateway& gateway, const SanitizationTarget& target,
    std::string_view relevant_context, const llm::SamplingOptions& sampling);

// Rewrites one chunk. If a target value still appears verbatim the call is
// retried once with a new seed; a second failure is UNSANITIZED.
absl::StatusOr<std::string> ApplyInstruction(
    llm::Gateway& gateway, const Chunk& chunk, const SpanSet& spans,
    std::string_view instruction, const SanitizationTarget& target,
    const llm::SamplingOptions& sampling);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_REWRITING_H_
