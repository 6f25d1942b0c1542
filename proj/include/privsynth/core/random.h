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

#ifndef PRIVSYNTH_CORE_RANDOM_H_
#define PRIVSYNTH_CORE_RANDOM_H_

#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <string_view>

namespace privsynth {

// All pipeline randomness flows through explicitly seeded engines; nothing
// reads from a global generator.
using Rng = std::mt19937_64;

uint64_t SplitMix64(uint64_t x);

// Stable 64-bit FNV-1a; unlike std::hash its value is fixed across builds.
uint64_t Fnv1a64(std::string_view data, uint64_t basis = 0xcbf29ce484222325ULL);

// Counter-based seed derivation: the seed for item `index` of `stream` is a
// pure function of (base, stream, index), so it does not depend on which
// worker processes the item or in what order.
uint64_t DeriveSeed(uint64_t base, std::string_view stream, uint64_t index);

// Uniform double in [0, 1) built from the top 53 bits of one draw.
double UniformUnit(Rng& rng);

// Uniform index in [0, n). Requires n > 0.
size_t UniformIndex(Rng& rng, size_t n);

bool Bernoulli(Rng& rng, double p);

// Index drawn with probability proportional to weights[i]. Requires a
// positive total weight; zero-weight entries are never drawn.
size_t WeightedIndex(Rng& rng, std::span<const double> weights);

// 128-bit random identifier rendered in UUID v4 layout.
std::string RandomId(Rng& rng);

}  // namespace privsynth

#endif  // PRIVSYNTH_CORE_RANDOM_H_
