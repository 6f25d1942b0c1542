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

// Reference implementations used only by tests. Each one evaluates the
// defining formula directly, with no code shared with the library.

#ifndef PRIVSYNTH_TESTS_ORACLES_H_
#define PRIVSYNTH_TESTS_ORACLES_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace privsynth::oracle {

using Matrix = std::vector<std::vector<double>>;

// Cyclic Jacobi rotations on a symmetric matrix until the off-diagonal mass
// vanishes. Returns the diagonal.
inline std::vector<double> JacobiEigenvalues(Matrix a) {
  const size_t n = a.size();
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (size_t p = 0; p < n; ++p)
      for (size_t q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-30) break;
    for (size_t p = 0; p < n; ++p) {
      for (size_t q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-300) continue;
        double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        double c = 1.0 / std::sqrt(t * t + 1.0);
        double s = t * c;
        for (size_t k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (size_t k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> out(n);
  for (size_t i = 0; i < n; ++i) out[i] = a[i][i];
  return out;
}

inline std::vector<double> Normalized(const std::vector<double>& v) {
  double norm = 0.0;
  for (double x : v) norm += x * x;
  norm = std::sqrt(norm);
  std::vector<double> out(v);
  for (double& x : out) x /= norm;
  return out;
}

inline double Dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// exp(-sum l ln l) over the spectrum of K/n, K the n x n cosine matrix.
inline double Vendi(const std::vector<std::vector<double>>& vectors) {
  const size_t n = vectors.size();
  std::vector<std::vector<double>> unit;
  for (const auto& v : vectors) unit.push_back(Normalized(v));
  Matrix k(n, std::vector<double>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) k[i][j] = Dot(unit[i], unit[j]) / n;
  double h = 0.0;
  for (double l : JacobiEigenvalues(k)) {
    if (l > 0) h -= l * std::log(l);
  }
  return std::exp(h);
}

inline double MeanCosine(const std::vector<std::vector<double>>& vectors) {
  double sum = 0.0;
  size_t pairs = 0;
  for (size_t i = 0; i < vectors.size(); ++i)
    for (size_t j = i + 1; j < vectors.size(); ++j, ++pairs)
      sum += Dot(Normalized(vectors[i]), Normalized(vectors[j]));
  return sum / pairs;
}

// Enumerates every window and counts its types with a fresh set.
inline double Mattr(const std::vector<std::string>& tokens, size_t window) {
  if (tokens.size() < window) {
    std::set<std::string> types(tokens.begin(), tokens.end());
    return static_cast<double>(types.size()) / tokens.size();
  }
  double sum = 0.0;
  size_t windows = tokens.size() - window + 1;
  for (size_t start = 0; start < windows; ++start) {
    std::set<std::string> types(tokens.begin() + start,
                                tokens.begin() + start + window);
    sum += static_cast<double>(types.size()) / window;
  }
  return sum / windows;
}

inline double BigramDiversity(const std::vector<std::string>& tokens) {
  std::set<std::pair<std::string, std::string>> distinct;
  for (size_t i = 0; i + 1 < tokens.size(); ++i)
    distinct.insert({tokens[i], tokens[i + 1]});
  return static_cast<double>(distinct.size()) / (tokens.size() - 1);
}

inline double Entropy(const std::vector<std::string>& tokens) {
  std::map<std::string, double> counts;
  for (const auto& t : tokens) counts[t] += 1.0;
  double h = 0.0;
  for (const auto& [t, c] : counts) {
    double p = c / tokens.size();
    h -= p * std::log2(p);
  }
  return h;
}

// Longest common subsequence by trying every subset of `a` (|a| <= 16).
inline size_t BruteForceLcs(const std::vector<std::string>& a,
                            const std::vector<std::string>& b) {
  size_t best = 0;
  const uint32_t limit = 1u << a.size();
  for (uint32_t mask = 0; mask < limit; ++mask) {
    size_t size = static_cast<size_t>(__builtin_popcount(mask));
    if (size <= best) continue;
    size_t j = 0;
    bool ok = true;
    for (size_t i = 0; i < a.size() && ok; ++i) {
      if (!(mask & (1u << i))) continue;
      while (j < b.size() && b[j] != a[i]) ++j;
      if (j == b.size()) ok = false;
      else ++j;
    }
    if (ok) best = size;
  }
  return best;
}

inline double RougeLF1(const std::vector<std::string>& candidate,
                       const std::vector<std::string>& reference) {
  if (candidate.empty() || reference.empty()) return 0.0;
  double lcs = static_cast<double>(BruteForceLcs(candidate, reference));
  if (lcs == 0) return 0.0;
  double p = lcs / candidate.size();
  double r = lcs / reference.size();
  return 2 * p * r / (p + r);
}

}  // namespace privsynth::oracle

#endif  // PRIVSYNTH_TESTS_ORACLES_H_
