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
#include <string_view>

// Distance kernels used by the nearest-neighbour and Naive Bayes inner loops.
//
// Every kernel has a scalar reference in `scalar::` and vector variants
// selected at runtime from what the CPU supports. Vector variants sum in a
// different order, so they agree with the reference to rounding, not bit
// for bit; the choice is fixed per process, which keeps runs reproducible.
// Set NSWCAT_KERNELS=scalar in the environment to force the reference path.
namespace nswcat::kernels {

enum class Backend { kScalar, kAvx2, kNeon };

std::string_view backend_name(Backend b);
bool backend_supported(Backend b);
Backend active_backend();
// Throws ConfigError when `b` is not available in this build or on this CPU.
void set_backend(Backend b);

// sum_j (a_j - b_j)^2
double squared_distance(std::span<const double> a, std::span<const double> b);
// sum_j w_j (x_j - m_j)^2
double weighted_squared_distance(std::span<const double> x, std::span<const double> m,
                                 std::span<const double> w);

namespace scalar {
double squared_distance(const double* a, const double* b, std::size_t n);
double weighted_squared_distance(const double* x, const double* m, const double* w, std::size_t n);
}  // namespace scalar

#if defined(NSWCAT_HAVE_AVX2)
namespace avx2 {
double squared_distance(const double* a, const double* b, std::size_t n);
double weighted_squared_distance(const double* x, const double* m, const double* w, std::size_t n);
}  // namespace avx2
#endif

#if defined(NSWCAT_HAVE_NEON)
namespace neon {
double squared_distance(const double* a, const double* b, std::size_t n);
double weighted_squared_distance(const double* x, const double* m, const double* w, std::size_t n);
}  // namespace neon
#endif

}  // namespace nswcat::kernels
