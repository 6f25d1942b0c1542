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

#include "privsynth/core/text.h"

#include <algorithm>
#include <cctype>

#include "fmt/format.h"

namespace privsynth {
namespace {

bool IsSpace(unsigned char c) { return std::isspace(c) != 0; }
bool IsAlnum(unsigned char c) { return std::isalnum(c) != 0; }
char Lower(unsigned char c) { return static_cast<char>(std::tolower(c)); }

bool IsWordByte(unsigned char c) { return IsAlnum(c) || c >= 0x80; }

}  // namespace

namespace text_internal {

void AppendDouble(std::string* out, double value) {
  out->append(fmt::format("{}", value));
}

}  // namespace text_internal

size_t WordCount(std::string_view text) {
  size_t count = 0;
  bool in_word = false;
  for (unsigned char c : text) {
    if (IsSpace(c)) {
      in_word = false;
    } else if (!in_word) {
      in_word = true;
      ++count;
    }
  }
  return count;
}

std::vector<std::string> WhitespaceTokens(std::string_view text) {
  std::vector<std::string> out;
  for (std::string_view piece : SplitAny(text, " \t\n\r\f\v")) {
    out.emplace_back(piece);
  }
  return out;
}

std::vector<std::string> LexicalTokens(std::string_view text) {
  std::vector<std::string> tokens;
  std::string current;
  for (unsigned char c : text) {
    if (IsWordByte(c)) {
      current.push_back(c < 0x80 ? Lower(c) : static_cast<char>(c));
    } else if (!current.empty()) {
      tokens.push_back(std::move(current));
      current.clear();
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

std::string ToLowerAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (static_cast<unsigned char>(c) < 0x80) c = Lower(c);
  }
  return out;
}

std::string ToUpperAscii(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (static_cast<unsigned char>(c) < 0x80) {
      c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    }
  }
  return out;
}

std::string CollapseWhitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (unsigned char c : text) {
    if (IsSpace(c)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.push_back(static_cast<char>(c));
  }
  return out;
}

std::string NormalizeAnswer(std::string_view text) {
  std::string out = CollapseWhitespace(text);
  while (!out.empty()) {
    const char last = out.back();
    if (last == '.' || last == ',' || last == ';' || last == ':' ||
        last == '!' || last == ' ') {
      out.pop_back();
    } else {
      break;
    }
  }
  return out;
}

std::string KeyDisplayName(std::string_view key) {
  std::string out(key);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

std::string SnakeCase(std::string_view label) {
  std::string out;
  bool pending = false;
  for (unsigned char c : label) {
    if (IsAlnum(c)) {
      if (pending && !out.empty()) out.push_back('_');
      pending = false;
      out.push_back(Lower(c));
    } else {
      pending = true;
    }
  }
  return out;
}

std::vector<size_t> FindAll(std::string_view haystack,
                            std::string_view needle) {
  std::vector<size_t> hits;
  if (needle.empty()) return hits;
  size_t pos = haystack.find(needle);
  while (pos != std::string_view::npos) {
    hits.push_back(pos);
    pos = haystack.find(needle, pos + 1);
  }
  return hits;
}

bool ContainsVerbatim(std::string_view haystack, std::string_view needle) {
  return !needle.empty() && haystack.find(needle) != std::string_view::npos;
}

std::string_view StripLeadingWhitespace(std::string_view text) {
  size_t i = 0;
  while (i < text.size() && IsSpace(static_cast<unsigned char>(text[i]))) ++i;
  return text.substr(i);
}

std::string_view StripTrailingWhitespace(std::string_view text) {
  size_t n = text.size();
  while (n > 0 && IsSpace(static_cast<unsigned char>(text[n - 1]))) --n;
  return text.substr(0, n);
}

std::string_view StripWhitespace(std::string_view text) {
  return StripTrailingWhitespace(StripLeadingWhitespace(text));
}

bool ConsumePrefix(std::string_view* text, std::string_view prefix) {
  if (!text->starts_with(prefix)) return false;
  text->remove_prefix(prefix.size());
  return true;
}

bool ConsumeSuffix(std::string_view* text, std::string_view suffix) {
  if (!text->ends_with(suffix)) return false;
  text->remove_suffix(suffix.size());
  return true;
}

bool Contains(std::string_view haystack, std::string_view needle) {
  return haystack.find(needle) != std::string_view::npos;
}

bool EqualsIgnoreCase(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    if (Lower(static_cast<unsigned char>(a[i])) !=
        Lower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

bool IsBlank(std::string_view text) { return StripWhitespace(text).empty(); }

std::vector<std::string_view> Split(std::string_view text,
                                    std::string_view delimiter) {
  std::vector<std::string_view> out;
  if (delimiter.empty()) {
    out.push_back(text);
    return out;
  }
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(delimiter, start);
    if (pos == std::string_view::npos) {
      out.push_back(text.substr(start));
      return out;
    }
    out.push_back(text.substr(start, pos - start));
    start = pos + delimiter.size();
  }
}

std::vector<std::string_view> SplitAny(std::string_view text,
                                       std::string_view delimiters) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || delimiters.find(text[i]) != std::string_view::npos) {
      if (i > start) out.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::string ReplaceAll(std::string_view text, std::string_view from,
                       std::string_view to) {
  if (from.empty()) return std::string(text);
  std::string out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(from, start);
    if (pos == std::string_view::npos) break;
    out.append(text.substr(start, pos - start));
    out.append(to);
    start = pos + from.size();
  }
  out.append(text.substr(start));
  return out;
}

}  // namespace privsynth
