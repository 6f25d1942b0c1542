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

#ifndef PRIVSYNTH_CORE_PARALLEL_H_
#define PRIVSYNTH_CORE_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace privsynth {

// Runs fn(i) for every i in [0, n) on up to `workers` threads. Items are
// claimed from a shared counter; callers write results into pre-sized slots
// indexed by i so output order never depends on scheduling. workers <= 1 runs
// inline on the calling thread.
void ParallelFor(size_t n, size_t workers,
                 const std::function<void(size_t)>& fn);

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_PARALLEL_H_
