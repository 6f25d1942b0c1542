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

#ifndef PRIVSYNTH_CORE_VALIDATION_H_
#define PRIVSYNTH_CORE_VALIDATION_H_

#include <optional>
#include <string>
#include <vector>

#include "privsynth/core/types.h"

namespace privsynth {

struct ValidationOptions {
  size_t min_words = 64;
  int min_age = 18;
  // Date against which a stored age is checked for consistency with the
  // stored date of birth. Unset skips the check.
  std::optional<CalendarDate> age_reference_date = CalendarDate(2025, 1, 1);
};

struct Violation {
  std::string code;
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Lists every invariant the record breaks; empty means valid. Never fails.
std::vector<Violation> ValidateRecord(const Record& record,
                                      const ValidationOptions& options = {});

// Age from the stored field, falling back to the date of birth.
std::optional<int> EffectiveAge(const Profile& profile,
                                const std::optional<CalendarDate>& as_of);

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_VALIDATION_H_
