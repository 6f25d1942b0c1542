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

#ifndef PRIVSYNTH_LLM_SIMULATED_RESPONDER_H_
#define PRIVSYNTH_LLM_SIMULATED_RESPONDER_H_

#include <string>

#include "absl/status/statusor.h"
#include "privsynth/llm/provider.h"

namespace privsynth::llm {

// Deterministic stand-in for a chat model. Produces well-formed replies for
// every prompt family in prompts.h from the request's task, variables and
// seed alone. The output is plausible enough to drive the pipelines end to
// end offline; it makes no attempt at realism.
absl::StatusOr<std::string> SimulateResponse(const GenerationRequest& request);

}  // namespace privsynth::llm

#endif  // PRIVSYNTH_LLM_SIMULATED_RESPONDER_H_
