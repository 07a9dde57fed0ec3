// Copyright 2026 The nswcat Authors. All Rights Reserved.
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "synthetic.hpp"

#include <cmath>
#include <numbers>
#include <string>
#include <vector>

namespace nswcat::testing {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double standard_normal(std::mt19937_64& rng) {
  double u1;
  do {
    u1 = uniform01(rng);
  } while (u1 == 0.0);
  const double u2 = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::uint64_t poisson(std::mt19937_64& rng, double lambda) {
  if (lambda <= 0) return 0;
  if (lambda > 30) {
    const double x = std::round(lambda + std::sqrt(lambda) * standard_normal(rng));
    return x < 0 ? 0 : static_cast<std::uint64_t>(x);
  }
  // Knuth's multiplication method.
  const double limit = std::exp(-lambda);
  std::uint64_t k = 0;
  double p = uniform01(rng);
  while (p > limit) {
    ++k;
    p *= uniform01(rng);
  }
  return k;
}

FeatureMatrix nsw_blob_corpus(std::size_t classes, std::size_t per_class, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  constexpr std::size_t kStyles = 2;

  // rates[c][s][leaf]: a shared background, a class signature, a style twist.
  std::vector<double> background(kLeafCount);
  for (auto& b : background) b = 0.2 + 1.5 * uniform01(rng);
  std::vector<std::vector<std::vector<double>>> rates(classes, std::vector<std::vector<double>>(kStyles));
  for (std::size_t c = 0; c < classes; ++c) {
    std::vector<double> signature(background);
    for (int i = 0; i < 6; ++i) signature[rng() % kLeafCount] += 1.5 + 3.0 * uniform01(rng);
    for (std::size_t s = 0; s < kStyles; ++s) {
      rates[c][s] = signature;
      for (int i = 0; i < 4; ++i) rates[c][s][rng() % kLeafCount] += 4.0 * uniform01(rng);
    }
  }

  FeatureMatrix m = empty_matrix(Representation::kFreq);
  for (std::size_t c = 0; c < classes; ++c) {
    for (std::size_t d = 0; d < per_class; ++d) {
      const auto& rate = rates[c][rng() % kStyles];
      // Document length scales every rate, adding over-dispersion.
      const double length = 0.5 + uniform01(rng);
      LeafCounts counts{};
      for (std::size_t j = 0; j < kLeafCount; ++j) counts[j] = poisson(rng, rate[j] * length);
      const std::uint64_t tokens = 400 + poisson(rng, 600.0 * length);
      std::vector<double> row(counts.begin(), counts.end());
      const auto derived = derived_features(counts, tokens);
      row.insert(row.end(), derived.begin(), derived.end());
      m.append("doc" + std::to_string(c) + "_" + std::to_string(d), "c" + std::to_string(c), row);
    }
  }
  return m;
}

FeatureMatrix gaussian_blobs(std::size_t classes, std::size_t per_class, std::size_t width, double separation,
                             std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> centres(classes, std::vector<double>(width, 0.0));
  for (std::size_t c = 0; c < classes; ++c) centres[c][c % width] = separation * static_cast<double>(1 + c / width);

  FeatureMatrix m;
  m.width = width;
  std::vector<double> row(width);
  for (std::size_t c = 0; c < classes; ++c)
    for (std::size_t d = 0; d < per_class; ++d) {
      for (std::size_t j = 0; j < width; ++j) row[j] = centres[c][j] + standard_normal(rng);
      m.append("p" + std::to_string(c) + "_" + std::to_string(d), "c" + std::to_string(c), row);
    }
  return m;
}

}  // namespace nswcat::testing
