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

#include "nswcat/features.hpp"

#include <algorithm>

#include "nswcat/error.hpp"
#include "nswcat/parallel.hpp"
#include "nswcat/statistics.hpp"
#include "nswcat/text_io.hpp"

namespace nswcat {

std::size_t representation_width(Representation rep) {
  switch (rep) {
    case Representation::kFreq: return kFreqWidth;
    case Representation::kStat: return kStatWidth;
    case Representation::kUnion: return kUnionWidth;
  }
  return 0;
}

std::string_view representation_name(Representation rep) {
  switch (rep) {
    case Representation::kFreq: return "freq";
    case Representation::kStat: return "stat";
    case Representation::kUnion: return "union";
  }
  return "?";
}

std::optional<Representation> parse_representation(std::string_view name) {
  if (name == "freq") return Representation::kFreq;
  if (name == "stat") return Representation::kStat;
  if (name == "union") return Representation::kUnion;
  return std::nullopt;
}

LeafCounts count_leaves(std::span<const NswOccurrence> occurrences) {
  LeafCounts counts{};
  for (const auto& o : occurrences) ++counts.at(o.type);
  return counts;
}

std::array<double, kDerivedWidth> derived_features(const LeafCounts& counts, std::uint64_t token_count,
                                                   const Taxonomy& tax) {
  std::array<double, kDerivedWidth> d{};
  std::uint64_t by_super[3] = {0, 0, 0};
  std::size_t filled = 0;
  for (std::size_t id = 0; id < kLeafCount; ++id) {
    by_super[static_cast<int>(tax.leaf(id).superclass)] += counts[id];
    filled += counts[id] > 0;
  }
  const std::uint64_t total = by_super[0] + by_super[1] + by_super[2];
  const std::size_t empty = kLeafCount - filled;

  d[derived::kNumberTotal] = static_cast<double>(by_super[static_cast<int>(Superclass::kNumber)]);
  d[derived::kStringTotal] = static_cast<double>(by_super[static_cast<int>(Superclass::kString)]);
  d[derived::kCombinedTotal] = static_cast<double>(by_super[static_cast<int>(Superclass::kCombined)]);
  d[derived::kNswTotal] = static_cast<double>(total);
  d[derived::kWordTotal] = static_cast<double>(token_count);
  d[derived::kDistinctTypes] = static_cast<double>(filled);
  d[derived::kEmptyTypes] = static_cast<double>(empty);
  d[derived::kFilledPerLeaf] = static_cast<double>(filled) / static_cast<double>(kLeafCount);
  d[derived::kFilledPerEmpty] = empty == 0 ? 0.0 : static_cast<double>(filled) / static_cast<double>(empty);
  d[derived::kNswPerWord] = token_count == 0 ? 0.0 : static_cast<double>(total) / static_cast<double>(token_count);

  const auto& members = tax.group_members();
  for (std::size_t g = 0; g < kGroupCount; ++g) {
    std::uint64_t sum = 0;
    for (auto id : members[g]) sum += counts[id];
    d[derived::kFirstGroup + g] = static_cast<double>(sum);
  }
  return d;
}

FrequencyVector frequency_vector(std::string doc_id, std::span<const NswOccurrence> occurrences,
                                 std::uint64_t token_count, const Taxonomy& tax) {
  FrequencyVector v;
  v.doc_id = std::move(doc_id);
  const auto counts = count_leaves(occurrences);
  for (std::size_t id = 0; id < kLeafCount; ++id) v.values[id] = static_cast<double>(counts[id]);
  const auto d = derived_features(counts, token_count, tax);
  std::copy(d.begin(), d.end(), v.values.begin() + kLeafCount);
  return v;
}

StatFeatures statistical_vector(const FrequencyVector& freq) {
  StatFeatures s;
  s.doc_id = freq.doc_id;
  const std::span<const double> leaves(freq.values.data(), kLeafCount);

  const auto m = stats::moments(leaves);
  s.values[stat_slot::kMean] = m.mean;
  s.values[stat_slot::kRange] = m.range();
  s.values[stat_slot::kStddev] = m.stddev;
  s.values[stat_slot::kVariance] = m.variance;
  s.values[stat_slot::kVariation] = m.coefficient_of_variation();
  s.values[stat_slot::kFlatness] = m.kurtosis;
  s.values[stat_slot::kAsymmetry] = m.skewness;

  const std::span<const double> slices[3] = {
      leaves.subspan(0, kStringLeaves),
      leaves.subspan(kNumberBase, kNumberLeaves),
      leaves.subspan(0, kStringLeaves + kNumberLeaves),
  };
  for (std::size_t k = 0; k < 3; ++k) {
    const auto sm = stats::moments(slices[k]);
    const auto q = stats::quartiles(slices[k]);
    double* out = s.values.data() + stat_slot::kFirstSlice + k * stat_slot::kSliceWidth;
    out[0] = sm.mean;
    out[1] = q.q3;
    out[2] = q.q1;
    out[3] = q.iqr();
    out[4] = q.quartile_deviation();
    out[5] = sm.coefficient_of_variation();
  }
  return s;
}

std::vector<double> union_vector(const FrequencyVector& freq, const StatFeatures& stat) {
  if (freq.doc_id != stat.doc_id)
    throw DataError("union_vector: frequency vector of '" + freq.doc_id + "' paired with statistics of '" +
                    stat.doc_id + "'");
  std::vector<double> out(freq.values.begin(), freq.values.end());
  out.insert(out.end(), stat.values.begin(), stat.values.end());
  return out;
}

void FeatureMatrix::append(std::string doc_id, std::string label, std::span<const double> r) {
  if (r.size() != width)
    throw DataError("row for '" + doc_id + "' has width " + std::to_string(r.size()) + ", matrix width is " +
                    std::to_string(width));
  doc_ids.push_back(std::move(doc_id));
  labels.push_back(std::move(label));
  values.insert(values.end(), r.begin(), r.end());
}

FeatureMatrix empty_matrix(Representation rep) {
  FeatureMatrix m;
  m.representation = rep;
  m.width = representation_width(rep);
  return m;
}

FeatureMatrix build_matrix(std::span<const LabeledDocument> docs,
                           std::span<const std::vector<NswOccurrence>> occurrences, Representation rep,
                           const Taxonomy& tax, unsigned threads) {
  if (docs.size() != occurrences.size())
    throw DataError("build_matrix: " + std::to_string(docs.size()) + " documents but " +
                    std::to_string(occurrences.size()) + " occurrence lists");
  FeatureMatrix m = empty_matrix(rep);
  std::vector<std::vector<double>> rows(docs.size());
  parallel_for(docs.size(), threads, [&](std::size_t i) {
    for (const auto& o : occurrences[i])
      if (o.doc_id != docs[i].id)
        throw DataError("build_matrix: occurrence of '" + o.doc_id + "' listed under '" + docs[i].id + "'");
    const auto freq = frequency_vector(docs[i].id, occurrences[i], docs[i].token_count, tax);
    switch (rep) {
      case Representation::kFreq:
        rows[i].assign(freq.values.begin(), freq.values.end());
        break;
      case Representation::kStat: {
        const auto st = statistical_vector(freq);
        rows[i].assign(st.values.begin(), st.values.end());
        break;
      }
      case Representation::kUnion:
        rows[i] = union_vector(freq, statistical_vector(freq));
        break;
    }
  });
  m.values.reserve(docs.size() * m.width);
  for (std::size_t i = 0; i < docs.size(); ++i) m.append(docs[i].id, docs[i].label, rows[i]);
  return m;
}

std::string write_matrix(const FeatureMatrix& m) {
  std::string out = "doc_id\tlabel";
  for (std::size_t j = 0; j < m.width; ++j) out += "\tf" + std::to_string(j);
  out += '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += m.doc_ids[i];
    out += '\t';
    out += m.labels[i];
    for (double v : m.row(i)) {
      out += '\t';
      out += format_double(v);
    }
    out += '\n';
  }
  return out;
}

FeatureMatrix read_matrix(std::string_view text, const std::string& origin) {
  const auto lines = split_lines(text);
  if (lines.empty()) throw DataError(origin + ": empty matrix file (missing header)");
  const auto header = split(lines.front(), '\t');
  if (header.size() < 2 || header[0] != "doc_id" || header[1] != "label")
    throw DataError(origin + ": header must start with doc_id<TAB>label");
  FeatureMatrix m;
  m.width = header.size() - 2;
  for (std::size_t j = 0; j < m.width; ++j)
    if (header[j + 2] != "f" + std::to_string(j))
      throw DataError(origin + ": header column " + std::to_string(j + 3) + " should be f" + std::to_string(j));
  for (auto rep : {Representation::kFreq, Representation::kStat, Representation::kUnion})
    if (representation_width(rep) == m.width) m.representation = rep;

  std::vector<double> row(m.width);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto fields = split(lines[i], '\t');
    if (fields.size() != m.width + 2)
      throw DataError(origin + ":" + std::to_string(i + 1) + ": expected " + std::to_string(m.width + 2) +
                      " fields, got " + std::to_string(fields.size()));
    for (std::size_t j = 0; j < m.width; ++j) {
      try {
        row[j] = parse_double(fields[j + 2]);
      } catch (const DataError& e) {
        throw DataError(origin + ":" + std::to_string(i + 1) + ": column f" + std::to_string(j) + ": " + e.what());
      }
    }
    m.append(std::string(fields[0]), std::string(fields[1]), row);
  }
  return m;
}

}  // namespace nswcat
