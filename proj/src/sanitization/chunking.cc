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

#include "privsynth/sanitization/chunking.h"

#include <algorithm>

namespace privsynth::sanitization {
namespace {

enum class Level { kBlankLine = 0, kNewline, kSentence, kHard };

struct Piece {
  std::string_view text;
  std::string_view separator;
  bool hard = false;
};

bool IsSpace(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' ||
         c == '\v';
}

bool IsSeparatorRun(std::string_view text, size_t begin, size_t end,
                    Level level) {
  const auto newlines = std::count(text.begin() + begin, text.begin() + end,
                                   '\n');
  switch (level) {
    case Level::kBlankLine:
      return newlines >= 2;
    case Level::kNewline:
      return newlines >= 1;
    case Level::kSentence: {
      if (begin == 0) return false;
      const char prev = text[begin - 1];
      return prev == '.' || prev == '!' || prev == '?';
    }
    case Level::kHard:
      return false;
  }
  return false;
}

// Splits at whitespace runs qualifying for `level`. A run at the very start
// stays attached to the first piece.
std::vector<Piece> SplitAtLevel(std::string_view text, Level level) {
  std::vector<Piece> pieces;
  size_t piece_start = 0;
  size_t i = 0;
  while (i < text.size()) {
    if (!IsSpace(text[i])) {
      ++i;
      continue;
    }
    size_t run_end = i;
    while (run_end < text.size() && IsSpace(text[run_end])) ++run_end;
    if (i > piece_start && IsSeparatorRun(text, i, run_end, level)) {
      pieces.push_back({text.substr(piece_start, i - piece_start),
                        text.substr(i, run_end - i)});
      piece_start = run_end;
    }
    i = run_end;
  }
  if (piece_start < text.size() || pieces.empty()) {
    pieces.push_back({text.substr(piece_start), {}});
  }
  return pieces;
}

size_t Utf8Cut(std::string_view text, size_t limit) {
  size_t cut = limit;
  // Back off over continuation bytes (10xxxxxx), at most three.
  for (int k = 0; k < 3 && cut > 0; ++k) {
    if ((static_cast<unsigned char>(text[cut]) & 0xC0) != 0x80) return cut;
    --cut;
  }
  if ((static_cast<unsigned char>(text[cut]) & 0xC0) != 0x80 && cut > 0) {
    return cut;
  }
  return limit;  // not valid UTF-8 here; cut bytes
}

void SplitRecursive(std::string_view text, std::string_view separator,
                    Level level, size_t tau, std::vector<Piece>* out) {
  if (text.size() <= tau) {
    out->push_back({text, separator});
    return;
  }
  if (level == Level::kHard) {
    while (text.size() > tau) {
      const size_t cut = Utf8Cut(text, tau);
      out->push_back({text.substr(0, cut), {}, true});
      text.remove_prefix(cut);
    }
    out->push_back({text, separator, true});
    return;
  }
  const Level next = static_cast<Level>(static_cast<int>(level) + 1);
  std::vector<Piece> pieces = SplitAtLevel(text, level);
  // The parent separator starts where `text` ends, so a trailing run found
  // here and the parent separator are adjacent in the original buffer.
  std::string_view& tail = pieces.back().separator;
  tail = tail.empty() ? separator
                      : std::string_view(tail.data(),
                                         tail.size() + separator.size());
  for (const Piece& piece : pieces) {
    SplitRecursive(piece.text, piece.separator, next, tau, out);
  }
}

}  // namespace

std::vector<Chunk> Decompose(std::string_view text, size_t tau) {
  std::vector<Chunk> chunks;
  if (text.empty()) return chunks;
  tau = std::max<size_t>(tau, 4);
  std::vector<Piece> pieces;
  SplitRecursive(text, {}, Level::kBlankLine, tau, &pieces);

  Chunk current;
  bool open = false;
  for (const Piece& piece : pieces) {
    if (open && !current.hard_split && !piece.hard &&
        current.text.size() + current.separator_after.size() +
                piece.text.size() <=
            tau) {
      current.text += current.separator_after;
      current.text += piece.text;
      current.separator_after = std::string(piece.separator);
      continue;
    }
    if (open) chunks.push_back(std::move(current));
    current = Chunk{};
    current.text = std::string(piece.text);
    current.separator_after = std::string(piece.separator);
    current.hard_split = piece.hard;
    open = true;
  }
  if (open) chunks.push_back(std::move(current));
  for (size_t i = 0; i < chunks.size(); ++i) chunks[i].index = i;
  return chunks;
}

std::string MergeChunks(std::span<const Chunk> chunks) {
  std::string out;
  for (const Chunk& chunk : chunks) {
    out += chunk.text;
    out += chunk.separator_after;
  }
  return out;
}

}  // namespace privsynth::sanitization
