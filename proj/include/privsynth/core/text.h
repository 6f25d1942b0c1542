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

#ifndef PRIVSYNTH_CORE_TEXT_H_
#define PRIVSYNTH_CORE_TEXT_H_

#include <concepts>
#include <cstddef>
#include <string>
#include <type_traits>
#include <string_view>
#include <vector>

namespace privsynth {

// Number of whitespace-delimited tokens.
size_t WordCount(std::string_view text);

std::vector<std::string> WhitespaceTokens(std::string_view text);

// Tokenizer shared by every lexical metric: ASCII-lowercased maximal runs of
// alphanumeric characters. Bytes >= 0x80 count as word characters so UTF-8
// words stay intact; all other punctuation and whitespace separate tokens.
std::vector<std::string> LexicalTokens(std::string_view text);

std::string ToLowerAscii(std::string_view text);

// Collapses internal whitespace runs to one space and trims both ends.
std::string CollapseWhitespace(std::string_view text);

// Normalization applied to evaluator predictions before exact comparison:
// collapse whitespace, then drop trailing sentence punctuation.
std::string NormalizeAnswer(std::string_view text);

// "clinic_address" -> "clinic address".
std::string KeyDisplayName(std::string_view key);

// "Phone Number" -> "phone_number".
std::string SnakeCase(std::string_view label);

// Start offsets of every (possibly overlapping) occurrence of `needle`.
std::vector<size_t> FindAll(std::string_view haystack, std::string_view needle);

bool ContainsVerbatim(std::string_view haystack, std::string_view needle);

// Small string helpers over std::string_view.
std::string_view StripWhitespace(std::string_view text);
std::string_view StripLeadingWhitespace(std::string_view text);
std::string_view StripTrailingWhitespace(std::string_view text);
bool ConsumePrefix(std::string_view* text, std::string_view prefix);
bool ConsumeSuffix(std::string_view* text, std::string_view suffix);
bool Contains(std::string_view haystack, std::string_view needle);
bool EqualsIgnoreCase(std::string_view a, std::string_view b);
std::string ToUpperAscii(std::string_view text);
bool IsBlank(std::string_view text);

// Splits on every occurrence of `delimiter`, keeping empty pieces.
std::vector<std::string_view> Split(std::string_view text,
                                    std::string_view delimiter);
// Splits on any character of `delimiters`, dropping empty pieces.
std::vector<std::string_view> SplitAny(std::string_view text,
                                       std::string_view delimiters);

std::string ReplaceAll(std::string_view text, std::string_view from,
                       std::string_view to);

namespace text_internal {

void AppendDouble(std::string* out, double value);

template <typename T>
void AppendPiece(std::string* out, const T& piece) {
  if constexpr (std::is_same_v<T, char>) {
    out->push_back(piece);
  } else if constexpr (std::is_floating_point_v<T>) {
    AppendDouble(out, static_cast<double>(piece));
  } else if constexpr (std::is_integral_v<T> && !std::is_same_v<T, bool>) {
    out->append(std::to_string(piece));
  } else if constexpr (std::is_convertible_v<const T&, std::string_view>) {
    out->append(std::string_view(piece));
  } else {
    out->append(piece.data(), piece.size());
  }
}

}  // namespace text_internal

// Concatenates strings, characters and numbers.
template <typename... Pieces>
std::string StrCat(const Pieces&... pieces) {
  std::string out;
  (text_internal::AppendPiece(&out, pieces), ...);
  return out;
}

template <typename... Pieces>
void StrAppend(std::string* out, const Pieces&... pieces) {
  (text_internal::AppendPiece(out, pieces), ...);
}

template <typename Range>
std::string Join(const Range& items, std::string_view separator) {
  std::string out;
  bool first = true;
  for (const auto& item : items) {
    if (!first) out += separator;
    first = false;
    out += item;
  }
  return out;
}

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_TEXT_H_
