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

#include "privsynth/diversity/metrics.h"

#include <algorithm>
#include <cmath>
#include <string_view>
#include <unordered_map>
#include <unordered_set>

#include "Eigen/Dense"
#include "fmt/format.h"
#include "privsynth/core/status.h"

namespace privsynth::diversity {
namespace {

absl::Status CheckDimensions(std::span<const Vector> vectors) {
  const size_t dim = vectors.front().size();
  if (dim == 0) {
    return MakeError(ErrorCode::kDimensionMismatch, "zero-length vector");
  }
  for (size_t i = 1; i < vectors.size(); ++i) {
    if (vectors[i].size() != dim) {
      return MakeError(ErrorCode::kDimensionMismatch,
                       fmt::format("vector {} has dimension {}, expected {}",
                                   i, vectors[i].size(), dim));
    }
  }
  return absl::OkStatus();
}

// Rows scaled to unit norm so that dot products are cosines.
absl::StatusOr<Eigen::MatrixXd> UnitRows(std::span<const Vector> vectors) {
  const Eigen::Index n = static_cast<Eigen::Index>(vectors.size());
  const Eigen::Index d = static_cast<Eigen::Index>(vectors.front().size());
  Eigen::MatrixXd x(n, d);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < d; ++j) x(i, j) = vectors[i][j];
    const double norm = x.row(i).norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) {
      return MakeError(ErrorCode::kInvalidArgument,
                       fmt::format("vector {} has zero or non-finite norm", i));
    }
    x.row(i) /= norm;
  }
  return x;
}

}  // namespace

absl::StatusOr<double> Mattr(std::span<const std::string> tokens,
                             size_t window) {
  if (window == 0) {
    return MakeError(ErrorCode::kInvalidArgument, "window must be positive");
  }
  if (tokens.empty()) {
    return MakeError(ErrorCode::kEmptyInput, "no tokens");
  }
  if (tokens.size() < window) {
    std::unordered_set<std::string_view> types(tokens.begin(), tokens.end());
    return static_cast<double>(types.size()) /
           static_cast<double>(tokens.size());
  }
  std::unordered_map<std::string_view, size_t> counts;
  for (size_t i = 0; i < window; ++i) ++counts[tokens[i]];
  // Integer sum of type counts keeps the mean exact until the final division.
  size_t type_sum = counts.size();
  for (size_t end = window; end < tokens.size(); ++end) {
    auto out = counts.find(tokens[end - window]);
    if (--out->second == 0) counts.erase(out);
    ++counts[tokens[end]];
    type_sum += counts.size();
  }
  const size_t windows = tokens.size() - window + 1;
  return static_cast<double>(type_sum) /
         (static_cast<double>(windows) * static_cast<double>(window));
}

absl::StatusOr<double> BigramDiversity(std::span<const std::string> tokens) {
  if (tokens.size() < 2) {
    return MakeError(ErrorCode::kTooShort,
                     fmt::format("need 2 tokens, got {}", tokens.size()));
  }
  std::unordered_set<std::string> bigrams;
  for (size_t i = 0; i + 1 < tokens.size(); ++i) {
    std::string key = tokens[i];
    key.push_back('\x1f');
    key += tokens[i + 1];
    bigrams.insert(std::move(key));
  }
  return static_cast<double>(bigrams.size()) /
         static_cast<double>(tokens.size() - 1);
}

absl::StatusOr<double> ShannonEntropy(std::span<const std::string> tokens) {
  if (tokens.empty()) return MakeError(ErrorCode::kEmptyInput, "no tokens");
  std::unordered_map<std::string_view, size_t> counts;
  for (const std::string& t : tokens) ++counts[t];
  const double total = static_cast<double>(tokens.size());
  double h = 0.0;
  for (const auto& [token, count] : counts) {
    const double p = static_cast<double>(count) / total;
    h -= p * std::log2(p);
  }
  return h;
}

absl::StatusOr<double> MeanPairwiseCosine(std::span<const Vector> vectors) {
  if (vectors.size() < 2) {
    return MakeError(ErrorCode::kTooShort,
                     fmt::format("need 2 vectors, got {}", vectors.size()));
  }
  PRIVSYNTH_RETURN_IF_ERROR(CheckDimensions(vectors));
  PRIVSYNTH_ASSIGN_OR_RETURN(Eigen::MatrixXd x, UnitRows(vectors));
  const Eigen::MatrixXd k = x * x.transpose();
  const Eigen::Index n = k.rows();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) sum += k(i, j);
  }
  return sum / (0.5 * static_cast<double>(n) * static_cast<double>(n - 1));
}

double ExpEntropy(std::span<const double> eigenvalues) {
  double h = 0.0;
  for (double lambda : eigenvalues) {
    if (lambda > 0.0) h -= lambda * std::log(lambda);
  }
  return std::exp(h);
}

absl::StatusOr<double> VendiScore(std::span<const Vector> vectors) {
  if (vectors.empty()) return MakeError(ErrorCode::kEmptyInput, "no vectors");
  PRIVSYNTH_RETURN_IF_ERROR(CheckDimensions(vectors));
  PRIVSYNTH_ASSIGN_OR_RETURN(Eigen::MatrixXd x, UnitRows(vectors));
  const double n = static_cast<double>(x.rows());
  // X X^T and X^T X share their nonzero spectrum; decompose the smaller one.
  const Eigen::MatrixXd gram = x.rows() <= x.cols()
                                   ? Eigen::MatrixXd(x * x.transpose() / n)
                                   : Eigen::MatrixXd(x.transpose() * x / n);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(
      gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    return MakeError(ErrorCode::kVendiFailure,
                     "eigendecomposition did not converge");
  }
  const Eigen::VectorXd& values = solver.eigenvalues();
  if (!values.allFinite()) {
    return MakeError(ErrorCode::kVendiFailure, "non-finite eigenvalues");
  }
  std::vector<double> lambdas(values.data(), values.data() + values.size());
  return ExpEntropy(lambdas);
}

}  // namespace privsynth::diversity
