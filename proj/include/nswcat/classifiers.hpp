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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "nswcat/features.hpp"

namespace nswcat {

enum class ClassifierKind : std::uint8_t { kNaiveBayes = 0, kKnn = 1, kTree = 2, kForest = 3 };

inline constexpr ClassifierKind kAllKinds[] = {ClassifierKind::kNaiveBayes, ClassifierKind::kKnn,
                                               ClassifierKind::kTree, ClassifierKind::kForest};

std::string_view kind_name(ClassifierKind k);     // "nb", "knn", "tree", "forest"
std::string_view kind_title(ClassifierKind k);    // "Naive Bayes", ...
std::optional<ClassifierKind> parse_kind(std::string_view name);

struct Hyperparameters {
  std::size_t knn_k = 5;
  bool knn_scale = false;  // per-feature min-max scaling fitted on the training rows
  std::size_t tree_min_leaf = 2;  // fewest training samples on each side of a split
  std::optional<std::size_t> tree_max_depth;
  std::size_t forest_trees = 100;
  std::uint64_t rng_seed = 0;
  unsigned threads = 1;  // forest building only; results do not depend on it

  // Throws ConfigError for zero where a positive value is required.
  void validate() const;
  // floor(sqrt(width)), at least 1.
  static std::size_t forest_features(std::size_t width);
};

// Rows with class indices into class_names.
struct TrainingSet {
  std::size_t width = 0;
  std::vector<std::string> class_names;
  std::vector<double> values;  // row-major
  std::vector<std::uint32_t> targets;

  std::size_t rows() const noexcept { return targets.size(); }
  std::span<const double> row(std::size_t i) const { return {values.data() + i * width, width}; }

  // class_names defaults to the sorted distinct labels of the matrix.
  static TrainingSet from_matrix(const FeatureMatrix& m, std::vector<std::string> class_names = {});
  TrainingSet subset(std::span<const std::size_t> rows) const;
};

struct NaiveBayesModel {
  std::vector<std::uint64_t> class_counts;
  std::vector<double> means;      // class-major, n_classes x width
  std::vector<double> variances;  // smoothed

  // Derived from the fields above by prepare().
  std::vector<double> inv_variances;
  std::vector<double> log_norm;  // log prior minus the Gaussian normalisers, per class

  void prepare(std::size_t width);
};

struct KnnModel {
  std::size_t k = 5;
  bool scaled = false;
  std::vector<double> offsets;  // per feature, subtracted then multiplied by scales
  std::vector<double> scales;
  std::vector<double> rows;  // stored already scaled
  std::vector<std::uint32_t> targets;
};

struct TreeNode {
  std::int32_t feature = -1;  // -1 marks a leaf
  double threshold = 0;       // x[feature] <= threshold goes left
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  std::uint32_t label = 0;    // majority class of the training samples here
};

struct TreeModel {
  std::vector<TreeNode> nodes;  // nodes[0] is the root
  std::uint32_t predict(std::span<const double> x) const;
  std::size_t depth() const;
};

struct ForestModel {
  std::vector<TreeModel> trees;
};

using ModelParams = std::variant<NaiveBayesModel, KnnModel, TreeModel, ForestModel>;

// Immutable after training; predict is safe to call from many threads.
struct Model {
  std::size_t feature_width = 0;
  std::vector<std::string> class_names;
  ModelParams params;

  ClassifierKind kind() const noexcept { return static_cast<ClassifierKind>(params.index()); }
  // Throws DataError when x.size() != feature_width.
  std::size_t predict_index(std::span<const double> x) const;
  const std::string& predict(std::span<const double> x) const { return class_names[predict_index(x)]; }
};

// Throws DataError on an empty set or a non-finite value.
Model train(ClassifierKind kind, const TrainingSet& data, const Hyperparameters& hp = {});

}  // namespace nswcat
