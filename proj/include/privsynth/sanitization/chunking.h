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

#ifndef PRIVSYNTH_SANITIZATION_CHUNKING_H_
#define PRIVSYNTH_SANITIZATION_CHUNKING_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace privsynth::sanitization {

inline constexpr size_t kDefaultChunkSize = 512;

struct Chunk {
  size_t index = 0;
  std::string text;
  // Boundary text removed at this split point; empty after the last chunk
  // and after hard splits.
  std::string separator_after;
  // The chunk ends at a forced cut rather than a natural boundary.
  bool hard_split = false;

  friend bool operator==(const Chunk&, const Chunk&) = default;
};

// Splits at blank-line runs, then single newlines, then sentence ends, then
// hard cuts at `tau` bytes (moved back to a UTF-8 character boundary when
// possible). Adjacent pieces are packed back together while they fit.
// Every chunk text is at most `tau` bytes.
std::vector<Chunk> Decompose(std::string_view text,
                             size_t tau = kDefaultChunkSize);

std::string MergeChunks(std::span<const Chunk> chunks);

}  // namespace privsynth::sanitization

#endif  // PRIVSYNTH_SANITIZATION_CHUNKING_H_
