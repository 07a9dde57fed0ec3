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

#pragma once

#include <span>

namespace nswcat::stats {

// Population moments of a sample. Degenerate inputs (empty, zero variance,
// zero mean) give 0 for the measures whose denominators vanish.
struct Moments {
  double mean = 0;
  double variance = 0;  // population
  double stddev = 0;
  double min = 0;
  double max = 0;
  double skewness = 0;  // third standardized central moment
  double kurtosis = 0;  // fourth standardized central moment, not excess

  double range() const { return max - min; }
  double coefficient_of_variation() const { return mean == 0 ? 0.0 : stddev / mean; }
};

Moments moments(std::span<const double> xs);

// Quantile with inclusive linear interpolation: position p*(n-1) in the
// sorted sample. `p` in [0, 1]; 0 for an empty sample.
double quantile(std::span<const double> xs, double p);

struct Quartiles {
  double q1 = 0;
  double q3 = 0;
  double iqr() const { return q3 - q1; }
  double quartile_deviation() const { return q3 + q1 > 0 ? (q3 - q1) / (q3 + q1) : 0.0; }
};

Quartiles quartiles(std::span<const double> xs);

}  // namespace nswcat::stats
