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

#include <atomic>
#include <cstdlib>
#include <string>

#include "nswcat/error.hpp"
#include "nswcat/kernels.hpp"

namespace nswcat::kernels {

namespace {

struct Table {
  Backend backend;
  double (*squared_distance)(const double*, const double*, std::size_t);
  double (*weighted_squared_distance)(const double*, const double*, const double*, std::size_t);
};

constexpr Table kScalar{Backend::kScalar, scalar::squared_distance, scalar::weighted_squared_distance};
#if defined(NSWCAT_HAVE_AVX2)
constexpr Table kAvx2{Backend::kAvx2, avx2::squared_distance, avx2::weighted_squared_distance};
#endif
#if defined(NSWCAT_HAVE_NEON)
constexpr Table kNeon{Backend::kNeon, neon::squared_distance, neon::weighted_squared_distance};
#endif

const Table* table_for(Backend b) {
  switch (b) {
    case Backend::kScalar: return &kScalar;
#if defined(NSWCAT_HAVE_AVX2)
    case Backend::kAvx2: return &kAvx2;
#endif
#if defined(NSWCAT_HAVE_NEON)
    case Backend::kNeon: return &kNeon;
#endif
    default: return nullptr;
  }
}

const Table* initial_table() {
  if (const char* env = std::getenv("NSWCAT_KERNELS"); env && std::string(env) == "scalar") return &kScalar;
  for (Backend b : {Backend::kAvx2, Backend::kNeon})
    if (backend_supported(b)) return table_for(b);
  return &kScalar;
}

std::atomic<const Table*>& active() {
  static std::atomic<const Table*> table{initial_table()};
  return table;
}

void check_sizes(std::size_t a, std::size_t b) {
  if (a != b) throw DataError("kernel operands differ in length: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::kScalar: return "scalar";
    case Backend::kAvx2: return "avx2";
    case Backend::kNeon: return "neon";
  }
  return "?";
}

bool backend_supported(Backend b) {
  switch (b) {
    case Backend::kScalar:
      return true;
    case Backend::kAvx2:
#if defined(NSWCAT_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::kNeon:
#if defined(NSWCAT_HAVE_NEON)
      return true;  // Advanced SIMD is mandatory on AArch64.
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() { return active().load()->backend; }

void set_backend(Backend b) {
  if (!backend_supported(b)) throw ConfigError("kernel backend '" + std::string(backend_name(b)) + "' is not available");
  active().store(table_for(b));
}

double squared_distance(std::span<const double> a, std::span<const double> b) {
  check_sizes(a.size(), b.size());
  return active().load()->squared_distance(a.data(), b.data(), a.size());
}

double weighted_squared_distance(std::span<const double> x, std::span<const double> m, std::span<const double> w) {
  check_sizes(x.size(), m.size());
  check_sizes(x.size(), w.size());
  return active().load()->weighted_squared_distance(x.data(), m.data(), w.data(), x.size());
}

}  // namespace nswcat::kernels
