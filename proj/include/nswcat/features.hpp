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

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nswcat/corpus.hpp"
#include "nswcat/lexer.hpp"
#include "nswcat/taxonomy.hpp"

namespace nswcat {

enum class Representation { kFreq, kStat, kUnion };

inline constexpr std::size_t kDerivedWidth = 29;
inline constexpr std::size_t kFreqWidth = kLeafCount + kDerivedWidth;  // 85
inline constexpr std::size_t kStatWidth = 7 + 3 * 6;                   // 25
inline constexpr std::size_t kUnionWidth = kFreqWidth + kStatWidth;    // 110

std::size_t representation_width(Representation rep);
std::string_view representation_name(Representation rep);
std::optional<Representation> parse_representation(std::string_view name);

// Offsets inside the derived block (add kLeafCount for the slot in a frequency vector).
namespace derived {
inline constexpr std::size_t kNumberTotal = 0;
inline constexpr std::size_t kStringTotal = 1;
inline constexpr std::size_t kCombinedTotal = 2;
inline constexpr std::size_t kNswTotal = 3;
inline constexpr std::size_t kWordTotal = 4;
inline constexpr std::size_t kDistinctTypes = 5;
inline constexpr std::size_t kEmptyTypes = 6;
inline constexpr std::size_t kFilledPerLeaf = 7;
inline constexpr std::size_t kFilledPerEmpty = 8;
inline constexpr std::size_t kNswPerWord = 9;
inline constexpr std::size_t kFirstGroup = 10;  // followed by kGroupCount group totals
}  // namespace derived

// Offsets inside a statistical vector.
namespace stat_slot {
inline constexpr std::size_t kMean = 0;
inline constexpr std::size_t kRange = 1;
inline constexpr std::size_t kStddev = 2;
inline constexpr std::size_t kVariance = 3;
inline constexpr std::size_t kVariation = 4;
inline constexpr std::size_t kFlatness = 5;   // kurtosis
inline constexpr std::size_t kAsymmetry = 6;  // skewness
// Each superclass slice (STRING, NUMBER, STRING+NUMBER) then takes 6 slots:
// mean, q3, q1, interquartile range, quartile deviation coefficient, variation.
inline constexpr std::size_t kFirstSlice = 7;
inline constexpr std::size_t kSliceWidth = 6;
}  // namespace stat_slot

using LeafCounts = std::array<std::uint64_t, kLeafCount>;

struct FrequencyVector {
  std::string doc_id;
  std::array<double, kFreqWidth> values{};
};

struct StatFeatures {
  std::string doc_id;
  std::array<double, kStatWidth> values{};
};

LeafCounts count_leaves(std::span<const NswOccurrence> occurrences);

std::array<double, kDerivedWidth> derived_features(const LeafCounts& counts, std::uint64_t token_count,
                                                   const Taxonomy& tax = Taxonomy::builtin());

FrequencyVector frequency_vector(std::string doc_id, std::span<const NswOccurrence> occurrences,
                                 std::uint64_t token_count, const Taxonomy& tax = Taxonomy::builtin());

// Whole-vector measures over the 56 leaf counts, then per-slice quartile measures.
StatFeatures statistical_vector(const FrequencyVector& freq);

// Frequency block followed by the statistical block; the ids must agree.
std::vector<double> union_vector(const FrequencyVector& freq, const StatFeatures& stat);

// Term-by-document matrix: one row per document, row-major values.
struct FeatureMatrix {
  std::optional<Representation> representation;
  std::size_t width = 0;
  std::vector<std::string> doc_ids;
  std::vector<std::string> labels;
  std::vector<double> values;

  std::size_t rows() const noexcept { return doc_ids.size(); }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * width, width}; }
  void append(std::string doc_id, std::string label, std::span<const double> row);
};

FeatureMatrix empty_matrix(Representation rep);

// Rows follow document order. occurrences[i] must hold the NSWs of docs[i].
FeatureMatrix build_matrix(std::span<const LabeledDocument> docs,
                           std::span<const std::vector<NswOccurrence>> occurrences, Representation rep,
                           const Taxonomy& tax = Taxonomy::builtin(), unsigned threads = 1);

// Header `doc_id<TAB>label<TAB>f0...` then one row per document, shortest
// round-trip float text, so read_matrix(write_matrix(m)) is bit-exact.
std::string write_matrix(const FeatureMatrix& m);
FeatureMatrix read_matrix(std::string_view text, const std::string& origin = "<matrix>");

}  // namespace nswcat
