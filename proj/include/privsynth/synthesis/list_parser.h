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

#ifndef PRIVSYNTH_SYNTHESIS_LIST_PARSER_H_
#define PRIVSYNTH_SYNTHESIS_LIST_PARSER_H_

#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"

namespace privsynth::synthesis {

// Items of a list whose entries start with "1.", "1)" or "-". Unmarked lines
// that follow an item are folded into it; text before the first marker is
// ignored. PARSE_ERROR when no item is found.
absl::StatusOr<std::vector<std::string>> ParseOrderedList(
    std::string_view text);

}  // namespace privsynth::synthesis

#endif  // PRIVSYNTH_SYNTHESIS_LIST_PARSER_H_
