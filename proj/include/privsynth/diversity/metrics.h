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

#ifndef PRIVSYNTH_DIVERSITY_METRICS_H_
#define PRIVSYNTH_DIVERSITY_METRICS_H_

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "absl/status/statusor.h"

namespace privsynth::diversity {

using Vector = std::vector<double>;

// Mean type-token ratio over every length-`window` sliding window. Sequences
// shorter than the window fall back to the TTR of the whole sequence.
absl::StatusOr<double> Mattr(std::span<const std::string> tokens,
                             size_t window);

// Distinct adjacent bigrams divided by total adjacent bigrams.
absl::StatusOr<double> BigramDiversity(std::span<const std::string> tokens);

// Base-2 entropy of the unigram distribution.
absl::StatusOr<double> ShannonEntropy(std::span<const std::string> tokens);

absl::StatusOr<double> MeanPairwiseCosine(std::span<const Vector> vectors);

// exp of the Shannon entropy (natural log) of the spectrum of K/n, where K is
// the cosine-similarity matrix of the inputs.
absl::StatusOr<double> VendiScore(std::span<const Vector> vectors);

// Entropy-based effective number for an eigenvalue list that already sums to
// one. Negative values are clamped to zero.
double ExpEntropy(std::span<const double> eigenvalues);

}  // namespace privsynth::diversity

#endif  // PRIVSYNTH_DIVERSITY_METRICS_H_
