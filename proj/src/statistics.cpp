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

#include "nswcat/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace nswcat::stats {

Moments moments(std::span<const double> xs) {
  Moments m;
  if (xs.empty()) return m;
  const double n = static_cast<double>(xs.size());
  double sum = 0;
  m.min = m.max = xs.front();
  for (double x : xs) {
    sum += x;
    m.min = std::min(m.min, x);
    m.max = std::max(m.max, x);
  }
  m.mean = sum / n;
  double m2 = 0, m3 = 0, m4 = 0;
  for (double x : xs) {
    const double d = x - m.mean;
    const double d2 = d * d;
    m2 += d2;
    m3 += d2 * d;
    m4 += d2 * d2;
  }
  m2 /= n, m3 /= n, m4 /= n;
  m.variance = m2;
  m.stddev = std::sqrt(m2);
  if (m2 > 0) {
    m.skewness = m3 / (m2 * m.stddev);
    m.kurtosis = m4 / (m2 * m2);
  }
  return m;
}

double quantile(std::span<const double> xs, double p) {
  if (xs.empty()) return 0;
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

Quartiles quartiles(std::span<const double> xs) { return {quantile(xs, 0.25), quantile(xs, 0.75)}; }

}  // namespace nswcat::stats
