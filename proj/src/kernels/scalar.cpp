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

#include "nswcat/kernels.hpp"

namespace nswcat::kernels::scalar {

double squared_distance(const double* a, const double* b, std::size_t n) {
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc;
}

double weighted_squared_distance(const double* x, const double* m, const double* w, std::size_t n) {
  double acc = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - m[i];
    acc += w[i] * d * d;
  }
  return acc;
}

}  // namespace nswcat::kernels::scalar
