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

#include "privsynth/synthesis/list_parser.h"

#include <cctype>

#include "privsynth/core/status.h"
#include "privsynth/core/text.h"

namespace privsynth::synthesis {
namespace {

// Strips a list marker and returns true if `line` starts with one.
bool ConsumeMarker(std::string_view* line) {
  std::string_view s = *line;
  if (ConsumePrefix(&s, "- ") || ConsumePrefix(&s, "* ")) {
    *line = StripLeadingWhitespace(s);
    return true;
  }
  size_t digits = 0;
  while (digits < s.size() && std::isdigit(static_cast<unsigned char>(s[digits]))) {
    ++digits;
  }
  if (digits == 0 || digits > 3 || digits >= s.size()) return false;
  if (s[digits] != '.' && s[digits] != ')') return false;
  s.remove_prefix(digits + 1);
  if (!s.empty() && s.front() != ' ' && s.front() != '\t') return false;
  *line = StripLeadingWhitespace(s);
  return true;
}

std::string CleanItem(std::string_view item) {
  item = StripWhitespace(item);
  // Providers sometimes bold the whole item.
  while (item.size() >= 4 && item.starts_with("**") && item.ends_with("**")) {
    item = StripWhitespace(item.substr(2, item.size() - 4));
  }
  return std::string(item);
}

}  // namespace

absl::StatusOr<std::vector<std::string>> ParseOrderedList(
    std::string_view text) {
  std::vector<std::string> items;
  bool in_item = false;
  for (std::string_view line : Split(text, "\n")) {
    line = StripWhitespace(line);
    if (line.empty()) {
      in_item = false;
      continue;
    }
    if (ConsumeMarker(&line)) {
      items.push_back(std::string(line));
      in_item = true;
    } else if (in_item) {
      StrAppend(&items.back(), " ", line);
    }
  }
  std::vector<std::string> out;
  for (const std::string& item : items) {
    std::string cleaned = CleanItem(item);
    if (!cleaned.empty()) out.push_back(std::move(cleaned));
  }
  if (out.empty()) {
    return MakeError(ErrorCode::kParseError, "no list items found");
  }
  return out;
}

}  // namespace privsynth::synthesis
