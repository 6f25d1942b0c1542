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

#ifndef PRIVSYNTH_IO_CLI_H_
#define PRIVSYNTH_IO_CLI_H_

#include <memory>
#include <ostream>

#include "privsynth/io/config.h"
#include "privsynth/llm/provider.h"

namespace privsynth::io {

// Exit codes of RunCli.
inline constexpr int kExitOk = 0;
// A stage failed, or --strict saw failed or indeterminate items.
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

std::shared_ptr<llm::LlmProvider> MakeProvider(const PipelineConfig& config);

// Entry point for the `privsynth` binary. Subcommands: synthesize, sanitize,
// evaluate, diversity.
int RunCli(int argc, const char* const* argv, std::ostream& out,
           std::ostream& err);

}  // namespace privsynth::io

#endif  // PRIVSYNTH_IO_CLI_H_
