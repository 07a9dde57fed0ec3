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

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "golden.hpp"
#include "nswcat/error.hpp"
#include "nswcat/features.hpp"
#include "nswcat/statistics.hpp"
#include "oracles.hpp"
#include "synthetic.hpp"

using namespace nswcat;

namespace {

FrequencyVector from_counts(const LeafCounts& counts, std::uint64_t tokens, std::string id = "d") {
  FrequencyVector v;
  v.doc_id = std::move(id);
  for (std::size_t i = 0; i < kLeafCount; ++i) v.values[i] = static_cast<double>(counts[i]);
  const auto d = derived_features(counts, tokens);
  std::copy(d.begin(), d.end(), v.values.begin() + kLeafCount);
  return v;
}

bool close(double got, long double want) {
  const long double diff = std::fabs(static_cast<long double>(got) - want);
  return diff <= 1e-12L || diff <= 1e-9L * std::fabs(want);
}

// Count vectors covering sparse, dense, constant and heavy-tailed documents.
LeafCounts random_counts(std::mt19937_64& rng, int style) {
  LeafCounts c{};
  switch (style % 5) {
    case 0: break;  // all zero
    case 1: c[rng() % kLeafCount] = 1 + rng() % 1000; break;
    case 2:
      for (auto& x : c) x = testing::poisson(rng, 3.0);
      break;
    case 3: {
      const auto v = rng() % 50;
      c.fill(v);
      break;
    }
    default:
      for (auto& x : c) x = testing::uniform01(rng) < 0.7 ? 0 : static_cast<std::uint64_t>(std::exp(8 * testing::uniform01(rng)));
  }
  return c;
}

}  // namespace

TEST_CASE("widths") {
  CHECK(representation_width(Representation::kFreq) == 85);
  CHECK(representation_width(Representation::kStat) == 25);
  CHECK(representation_width(Representation::kUnion) == 110);
  CHECK(parse_representation("union") == Representation::kUnion);
  CHECK_FALSE(parse_representation("UNION").has_value());
}

TEST_CASE("a document without NSWs") {
  const LeafCounts zero{};
  const auto f = from_counts(zero, 40);
  CHECK(f.values[kLeafCount + derived::kWordTotal] == 40);
  CHECK(f.values[kLeafCount + derived::kEmptyTypes] == 56);
  CHECK(f.values[kLeafCount + derived::kNswPerWord] == 0);
  const auto s = statistical_vector(f);
  for (double v : s.values) CHECK(v == 0.0);
}

TEST_CASE("one of every leaf") {
  LeafCounts ones;
  ones.fill(1);
  const auto d = derived_features(ones, 560);
  CHECK(d[derived::kNswTotal] == 56);
  CHECK(d[derived::kStringTotal] == 15);
  CHECK(d[derived::kNumberTotal] == 21);
  CHECK(d[derived::kCombinedTotal] == 20);
  CHECK(d[derived::kNswPerWord] == doctest::Approx(0.1));
  CHECK(d[derived::kFilledPerLeaf] == 1.0);
  CHECK(d[derived::kFilledPerEmpty] == 0.0);  // no empty leaf
  const auto s = statistical_vector(from_counts(ones, 560)).values;
  CHECK(s[stat_slot::kMean] == 1.0);
  CHECK(s[stat_slot::kVariance] == 0.0);
  CHECK(s[stat_slot::kFlatness] == 0.0);
  CHECK(s[stat_slot::kAsymmetry] == 0.0);
}

TEST_CASE("group totals") {
  LeafCounts c{};
  const auto& tax = Taxonomy::builtin();
  c[*tax.find("phone_short")] = 2;
  c[*tax.find("phone_long")] = 3;
  c[*tax.find("acronym")] = 7;
  const auto d = derived_features(c, 100);
  CHECK(d[derived::kFirstGroup + *group_index("telephone")] == 5);
  CHECK(d[derived::kFirstGroup + *group_index("acronym")] >= 7);
  CHECK(d[derived::kDistinctTypes] == 3);
  CHECK(d[derived::kFilledPerEmpty] == doctest::Approx(3.0 / 53.0));
}

TEST_CASE("moments and quantiles on small inputs") {
  const std::vector<double> xs = {2, 4, 6};
  const auto m = stats::moments(xs);
  CHECK(m.mean == doctest::Approx(4.0));
  CHECK(m.variance == doctest::Approx(8.0 / 3.0));
  CHECK(m.range() == 4.0);
  CHECK(m.skewness == doctest::Approx(0.0));
  CHECK(m.kurtosis == doctest::Approx(1.5));
  CHECK(stats::quantile(xs, 0.25) == doctest::Approx(3.0));
  CHECK(stats::quantile(xs, 0.75) == doctest::Approx(5.0));

  const std::vector<double> threes(10, 3.0);
  const auto c = stats::moments(threes);
  CHECK(c.variance == 0.0);
  CHECK(c.coefficient_of_variation() == 0.0);
  CHECK(c.kurtosis == 0.0);
  CHECK(stats::quartiles(threes).quartile_deviation() == 0.0);
}

TEST_CASE("statistical features agree with the exact-integer oracle on 1000 vectors") {
  std::mt19937_64 rng(2024);
  std::size_t compared = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto counts = random_counts(rng, i);
    const auto got = statistical_vector(from_counts(counts, 1000)).values;
    const auto want = testing::stat_oracle(counts);
    for (std::size_t k = 0; k < kStatWidth; ++k) {
      INFO("vector " << i << " slot " << k << " got " << got[k] << " want " << static_cast<double>(want[k]));
      CHECK(close(got[k], want[k]));
      ++compared;
    }
  }
  CHECK(compared == 25000);
}

TEST_CASE("global statistics ignore the order of leaves") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto counts = random_counts(rng, 2 + i % 3);
    const auto a = statistical_vector(from_counts(counts, 10)).values;
    std::shuffle(counts.begin(), counts.end(), rng);
    const auto b = statistical_vector(from_counts(counts, 10)).values;
    for (std::size_t k = 0; k < stat_slot::kFirstSlice; ++k) CHECK(close(b[k], a[k]));
  }
}

TEST_CASE("union is freq followed by stat") {
  LeafCounts c{};
  c[3] = 4;
  const auto f = from_counts(c, 20, "x");
  const auto s = statistical_vector(f);
  const auto u = union_vector(f, s);
  REQUIRE(u.size() == kUnionWidth);
  CHECK(std::equal(f.values.begin(), f.values.end(), u.begin()));
  CHECK(std::equal(s.values.begin(), s.values.end(), u.begin() + kFreqWidth));
  auto other = s;
  other.doc_id = "y";
  CHECK_THROWS_AS(union_vector(f, other), DataError);
}

TEST_CASE("matrix text round trip is bit exact") {
  auto m = testing::nsw_blob_corpus(3, 10, 9);
  m.append("odd/one.txt", "c0", std::vector<double>(m.width, 0.1 + 1e-17));
  m.values[5] = 1.0 / 3.0;
  m.values[6] = -2.5e-300;
  const auto text = write_matrix(m);
  const auto back = read_matrix(text);
  CHECK(back.width == m.width);
  CHECK(back.representation == m.representation);
  CHECK(back.doc_ids == m.doc_ids);
  CHECK(back.labels == m.labels);
  CHECK(back.values == m.values);
  CHECK(write_matrix(back) == text);
}

TEST_CASE("empty matrix round trips") {
  const auto m = empty_matrix(Representation::kStat);
  const auto back = read_matrix(write_matrix(m));
  CHECK(back.rows() == 0);
  CHECK(back.width == kStatWidth);
}

TEST_CASE("malformed matrices are data errors") {
  const auto good = write_matrix(testing::nsw_blob_corpus(2, 2, 1));
  CHECK_THROWS_AS(read_matrix(""), DataError);
  CHECK_THROWS_AS(read_matrix(good.substr(0, good.size() - 3) + "x\n"), DataError);
  auto short_row = good;
  short_row.erase(short_row.rfind('\t'));
  CHECK_THROWS_AS(read_matrix(short_row + "\n"), DataError);
}

TEST_CASE("build_matrix on the golden corpus") {
  const auto corpus = load_corpus(testing::fixture_dir() / "golden");
  std::vector<std::vector<NswOccurrence>> occ;
  for (const auto& d : corpus.documents) occ.push_back(NswLexer::builtin().extract(d));
  for (auto rep : {Representation::kFreq, Representation::kStat, Representation::kUnion}) {
    const auto one = build_matrix(corpus.documents, occ, rep);
    const auto four = build_matrix(corpus.documents, occ, rep, Taxonomy::builtin(), 4);
    CHECK(one.rows() == 30);
    CHECK(one.width == representation_width(rep));
    CHECK(one.values.size() == 30 * one.width);
    CHECK(one.values == four.values);
    CHECK(one.labels[0] == "educational");
  }
}
