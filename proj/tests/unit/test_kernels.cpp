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

#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string_view>
#include <random>
#include <vector>

#include "nswcat/error.hpp"
#include "nswcat/kernels.hpp"

using namespace nswcat;
using kernels::Backend;

namespace {

constexpr Backend kBackends[] = {Backend::kScalar, Backend::kAvx2, Backend::kNeon};

// Restores the startup backend when a test case ends.
struct BackendGuard {
  Backend saved = kernels::active_backend();
  ~BackendGuard() { kernels::set_backend(saved); }
};

long double reference_sq(const std::vector<double>& a, const std::vector<double>& b) {
  long double acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const long double d = static_cast<long double>(a[i]) - b[i];
    acc += d * d;
  }
  return acc;
}

long double reference_wsq(const std::vector<double>& x, const std::vector<double>& m, const std::vector<double>& w) {
  long double acc = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const long double d = static_cast<long double>(x[i]) - m[i];
    acc += w[i] * d * d;
  }
  return acc;
}

// Every term is non-negative, so the relative error of any summation order is
// bounded by a few ulps times the length.
bool agrees(double got, long double want, std::size_t n) {
  return std::fabs(static_cast<long double>(got) - want) <= (n + 4) * 1e-16L * want + 1e-300L;
}

std::vector<double> random_vector(std::mt19937_64& rng, std::size_t n, double scale) {
  std::normal_distribution<double> normal(0.0, scale);
  std::vector<double> v(n);
  for (auto& x : v) x = normal(rng);
  return v;
}

}  // namespace

TEST_CASE("startup backend honours NSWCAT_KERNELS") {
  const char* env = std::getenv("NSWCAT_KERNELS");
  if (env && std::string_view(env) == "scalar") {
    CHECK(kernels::active_backend() == Backend::kScalar);
  } else if (kernels::backend_supported(Backend::kAvx2)) {
    CHECK(kernels::active_backend() == Backend::kAvx2);
  } else if (kernels::backend_supported(Backend::kNeon)) {
    CHECK(kernels::active_backend() == Backend::kNeon);
  }
}

TEST_CASE("scalar backend is always available") {
  CHECK(kernels::backend_supported(Backend::kScalar));
  CHECK(kernels::backend_name(Backend::kScalar) == "scalar");
}

TEST_CASE("every supported backend matches the reference") {
  BackendGuard guard;
  std::mt19937_64 rng(77);
  for (auto b : kBackends) {
    if (!kernels::backend_supported(b)) continue;
    kernels::set_backend(b);
    REQUIRE(kernels::active_backend() == b);
    for (std::size_t n = 0; n <= 300; ++n) {
      const double scale = n % 3 == 0 ? 1e3 : 1.0;
      const auto a = random_vector(rng, n, scale);
      const auto c = random_vector(rng, n, scale);
      auto w = random_vector(rng, n, 1.0);
      for (auto& x : w) x = std::fabs(x);
      INFO("backend " << kernels::backend_name(b) << " n=" << n);
      CHECK(agrees(kernels::squared_distance(a, c), reference_sq(a, c), n));
      CHECK(agrees(kernels::weighted_squared_distance(a, c, w), reference_wsq(a, c, w), n));
    }
  }
}

TEST_CASE("vector kernels agree with the scalar kernels directly") {
  std::mt19937_64 rng(8);
  for (std::size_t n = 0; n <= 300; n += 7) {
    const auto a = random_vector(rng, n, 10.0);
    const auto c = random_vector(rng, n, 10.0);
    const auto w = std::vector<double>(n, 0.5);
    const double s = kernels::scalar::squared_distance(a.data(), c.data(), n);
    const double ws = kernels::scalar::weighted_squared_distance(a.data(), c.data(), w.data(), n);
#if defined(NSWCAT_HAVE_AVX2)
    if (kernels::backend_supported(Backend::kAvx2)) {
      CHECK(kernels::avx2::squared_distance(a.data(), c.data(), n) == doctest::Approx(s).epsilon(1e-13));
      CHECK(kernels::avx2::weighted_squared_distance(a.data(), c.data(), w.data(), n) ==
            doctest::Approx(ws).epsilon(1e-13));
    }
#endif
#if defined(NSWCAT_HAVE_NEON)
    if (kernels::backend_supported(Backend::kNeon)) {
      CHECK(kernels::neon::squared_distance(a.data(), c.data(), n) == doctest::Approx(s).epsilon(1e-13));
      CHECK(kernels::neon::weighted_squared_distance(a.data(), c.data(), w.data(), n) ==
            doctest::Approx(ws).epsilon(1e-13));
    }
#endif
    CHECK(s >= 0);
    CHECK(ws >= 0);
  }
}

TEST_CASE("identical inputs give exactly zero") {
  BackendGuard guard;
  std::mt19937_64 rng(1);
  const auto a = random_vector(rng, 97, 5.0);
  for (auto b : kBackends) {
    if (!kernels::backend_supported(b)) continue;
    kernels::set_backend(b);
    CHECK(kernels::squared_distance(a, a) == 0.0);
  }
}

TEST_CASE("errors") {
  BackendGuard guard;
  const std::vector<double> a(3), b(4);
  CHECK_THROWS_AS(kernels::squared_distance(a, b), DataError);
  CHECK_THROWS_AS(kernels::weighted_squared_distance(a, a, b), DataError);
  for (auto b2 : kBackends)
    if (!kernels::backend_supported(b2)) CHECK_THROWS_AS(kernels::set_backend(b2), ConfigError);
}
