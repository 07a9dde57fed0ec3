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

#include "nswcat/classifiers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <set>

#include "nswcat/error.hpp"
#include "nswcat/kernels.hpp"
#include "nswcat/parallel.hpp"
#include "rng.hpp"

namespace nswcat {

std::string_view kind_name(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::kNaiveBayes: return "nb";
    case ClassifierKind::kKnn: return "knn";
    case ClassifierKind::kTree: return "tree";
    case ClassifierKind::kForest: return "forest";
  }
  return "?";
}

std::string_view kind_title(ClassifierKind k) {
  switch (k) {
    case ClassifierKind::kNaiveBayes: return "Naive Bayes";
    case ClassifierKind::kKnn: return "kNN";
    case ClassifierKind::kTree: return "Classification Tree";
    case ClassifierKind::kForest: return "Random Forest";
  }
  return "?";
}

std::optional<ClassifierKind> parse_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (kind_name(k) == name) return k;
  return std::nullopt;
}

void Hyperparameters::validate() const {
  if (knn_k == 0) throw ConfigError("knn_k must be positive");
  if (tree_min_leaf == 0) throw ConfigError("tree_min_leaf must be positive");
  if (tree_max_depth && *tree_max_depth == 0) throw ConfigError("tree_max_depth must be positive");
  if (forest_trees == 0) throw ConfigError("forest_trees must be positive");
}

std::size_t Hyperparameters::forest_features(std::size_t width) {
  auto m = static_cast<std::size_t>(std::sqrt(static_cast<double>(width)));
  while (m * m > width) --m;
  while ((m + 1) * (m + 1) <= width) ++m;
  return std::max<std::size_t>(1, m);
}

TrainingSet TrainingSet::from_matrix(const FeatureMatrix& m, std::vector<std::string> class_names) {
  if (class_names.empty()) {
    std::set<std::string> distinct(m.labels.begin(), m.labels.end());
    class_names.assign(distinct.begin(), distinct.end());
  }
  TrainingSet ts;
  ts.width = m.width;
  ts.class_names = std::move(class_names);
  ts.values = m.values;
  ts.targets.reserve(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto it = std::find(ts.class_names.begin(), ts.class_names.end(), m.labels[i]);
    if (it == ts.class_names.end())
      throw DataError("row " + std::to_string(i) + " (" + m.doc_ids[i] + ") has unknown label '" + m.labels[i] + "'");
    ts.targets.push_back(static_cast<std::uint32_t>(it - ts.class_names.begin()));
  }
  return ts;
}

TrainingSet TrainingSet::subset(std::span<const std::size_t> rows) const {
  TrainingSet out;
  out.width = width;
  out.class_names = class_names;
  out.values.reserve(rows.size() * width);
  out.targets.reserve(rows.size());
  for (auto r : rows) {
    const auto x = row(r);
    out.values.insert(out.values.end(), x.begin(), x.end());
    out.targets.push_back(targets[r]);
  }
  return out;
}

namespace {

using detail::uniform_below;

constexpr double kVarSmoothing = 1e-9;

// Lowest index among the largest counts.
template <typename T>
std::uint32_t argmax(std::span<const T> counts) {
  std::uint32_t best = 0;
  for (std::uint32_t c = 1; c < counts.size(); ++c)
    if (counts[c] > counts[best]) best = c;
  return best;
}

void check_training_set(const TrainingSet& data) {
  if (data.rows() == 0) throw DataError("training set is empty");
  if (data.class_names.empty()) throw DataError("training set has no classes");
  if (data.values.size() != data.rows() * data.width) throw DataError("training set values do not match its shape");
  for (std::size_t r = 0; r < data.rows(); ++r) {
    if (data.targets[r] >= data.class_names.size())
      throw DataError("row " + std::to_string(r) + " has class index out of range");
    const auto x = data.row(r);
    for (std::size_t c = 0; c < x.size(); ++c)
      if (!std::isfinite(x[c]))
        throw DataError("non-finite value at row " + std::to_string(r) + ", column " + std::to_string(c));
  }
}

NaiveBayesModel train_naive_bayes(const TrainingSet& data) {
  const std::size_t w = data.width;
  const std::size_t n_classes = data.class_names.size();
  NaiveBayesModel nb;
  nb.class_counts.assign(n_classes, 0);
  nb.means.assign(n_classes * w, 0.0);
  nb.variances.assign(n_classes * w, 0.0);

  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto c = data.targets[r];
    ++nb.class_counts[c];
    const auto x = data.row(r);
    for (std::size_t j = 0; j < w; ++j) nb.means[c * w + j] += x[j];
  }
  for (std::size_t c = 0; c < n_classes; ++c)
    if (nb.class_counts[c] > 0)
      for (std::size_t j = 0; j < w; ++j) nb.means[c * w + j] /= static_cast<double>(nb.class_counts[c]);
  for (std::size_t r = 0; r < data.rows(); ++r) {
    const auto c = data.targets[r];
    const auto x = data.row(r);
    for (std::size_t j = 0; j < w; ++j) {
      const double d = x[j] - nb.means[c * w + j];
      nb.variances[c * w + j] += d * d;
    }
  }
  for (std::size_t c = 0; c < n_classes; ++c)
    if (nb.class_counts[c] > 0)
      for (std::size_t j = 0; j < w; ++j) nb.variances[c * w + j] /= static_cast<double>(nb.class_counts[c]);

  // Smoothing is relative to the widest feature over the whole set. A set
  // of constant features would give zero, so fall back to the bare factor.
  double max_var = 0;
  for (std::size_t j = 0; j < w; ++j) {
    double mean = 0;
    for (std::size_t r = 0; r < data.rows(); ++r) mean += data.row(r)[j];
    mean /= static_cast<double>(data.rows());
    double var = 0;
    for (std::size_t r = 0; r < data.rows(); ++r) {
      const double d = data.row(r)[j] - mean;
      var += d * d;
    }
    max_var = std::max(max_var, var / static_cast<double>(data.rows()));
  }
  const double epsilon = max_var > 0 ? kVarSmoothing * max_var : kVarSmoothing;
  for (auto& v : nb.variances) v += epsilon;

  nb.prepare(w);
  return nb;
}

KnnModel train_knn(const TrainingSet& data, const Hyperparameters& hp) {
  const std::size_t w = data.width;
  KnnModel knn;
  knn.k = hp.knn_k;
  knn.scaled = hp.knn_scale;
  knn.rows = data.values;
  knn.targets = data.targets;
  if (knn.scaled) {
    knn.offsets.assign(w, 0.0);
    knn.scales.assign(w, 0.0);
    for (std::size_t j = 0; j < w; ++j) {
      double lo = data.row(0)[j], hi = lo;
      for (std::size_t r = 1; r < data.rows(); ++r) {
        lo = std::min(lo, data.row(r)[j]);
        hi = std::max(hi, data.row(r)[j]);
      }
      knn.offsets[j] = lo;
      knn.scales[j] = hi > lo ? 1.0 / (hi - lo) : 0.0;
    }
    for (std::size_t r = 0; r < data.rows(); ++r)
      for (std::size_t j = 0; j < w; ++j) knn.rows[r * w + j] = (knn.rows[r * w + j] - knn.offsets[j]) * knn.scales[j];
  }
  return knn;
}

double entropy(std::span<const std::size_t> counts, std::size_t n) {
  if (n == 0) return 0;
  double acc = 0;
  for (auto c : counts)
    if (c > 0) acc += static_cast<double>(c) * std::log(static_cast<double>(c));
  return std::log(static_cast<double>(n)) - acc / static_cast<double>(n);
}

class TreeBuilder {
 public:
  // features_per_split == 0 evaluates every feature; otherwise features are
  // drawn at random per node until that many non-constant ones were tried.
  TreeBuilder(const TrainingSet& data, const Hyperparameters& hp, std::size_t features_per_split,
              std::mt19937_64* rng)
      : data_(data), hp_(hp), features_per_split_(features_per_split), rng_(rng) {}

  TreeModel build(std::vector<std::uint32_t> samples) {
    tree_.nodes.clear();
    grow(samples, 0);
    return std::move(tree_);
  }

 private:
  struct Split {
    bool found = false;
    std::size_t feature = 0;
    double threshold = 0;
    double gain = 0;
  };

  std::uint32_t grow(std::span<std::uint32_t> samples, std::size_t depth) {
    const std::size_t n_classes = data_.class_names.size();
    std::vector<std::size_t> counts(n_classes, 0);
    for (auto s : samples) ++counts[data_.targets[s]];

    const auto index = static_cast<std::uint32_t>(tree_.nodes.size());
    tree_.nodes.push_back(TreeNode{-1, 0, 0, 0, argmax<std::size_t>(counts)});

    const bool pure = std::count_if(counts.begin(), counts.end(), [](auto c) { return c > 0; }) <= 1;
    if (pure || samples.size() < 2 * hp_.tree_min_leaf) return index;
    if (hp_.tree_max_depth && depth >= *hp_.tree_max_depth) return index;

    const Split split = best_split(samples, counts);
    if (!split.found) return index;

    const auto mid = std::stable_partition(samples.begin(), samples.end(), [&](std::uint32_t s) {
      return data_.row(s)[split.feature] <= split.threshold;
    });
    const auto n_left = static_cast<std::size_t>(mid - samples.begin());
    const auto left = grow(samples.first(n_left), depth + 1);
    const auto right = grow(samples.subspan(n_left), depth + 1);
    auto& node = tree_.nodes[index];
    node.feature = static_cast<std::int32_t>(split.feature);
    node.threshold = split.threshold;
    node.left = left;
    node.right = right;
    return index;
  }

  Split best_split(std::span<const std::uint32_t> samples, const std::vector<std::size_t>& counts) {
    const std::size_t n = samples.size();
    const double parent = entropy(counts, n);
    Split best;

    std::vector<std::size_t> order(data_.width);
    for (std::size_t j = 0; j < order.size(); ++j) order[j] = j;
    std::size_t budget = order.size();
    if (features_per_split_ > 0) budget = std::min(budget, features_per_split_);

    std::vector<std::pair<double, std::uint32_t>> column(n);
    std::vector<std::size_t> left(counts.size()), right(counts.size());
    std::size_t tried = 0;
    for (std::size_t pos = 0; pos < order.size() && tried < budget; ++pos) {
      if (features_per_split_ > 0) {
        const auto pick = pos + uniform_below(*rng_, order.size() - pos);
        std::swap(order[pos], order[pick]);
      }
      const std::size_t f = order[pos];
      for (std::size_t i = 0; i < n; ++i) column[i] = {data_.row(samples[i])[f], data_.targets[samples[i]]};
      std::sort(column.begin(), column.end());
      if (column.front().first == column.back().first) continue;
      ++tried;

      std::fill(left.begin(), left.end(), 0);
      right = counts;
      for (std::size_t i = 0; i + 1 < n; ++i) {
        ++left[column[i].second];
        --right[column[i].second];
        const double a = column[i].first, b = column[i + 1].first;
        if (a == b) continue;
        const std::size_t nl = i + 1, nr = n - nl;
        if (nl < hp_.tree_min_leaf || nr < hp_.tree_min_leaf) continue;
        const double gain =
            parent - (static_cast<double>(nl) * entropy(left, nl) + static_cast<double>(nr) * entropy(right, nr)) /
                         static_cast<double>(n);
        // Zero-gain splits are accepted so an impure node always splits when it can.
        if (!best.found || gain > best.gain || (gain == best.gain && f < best.feature)) {
          double t = a + (b - a) / 2;
          if (!(t < b)) t = a;
          best = Split{true, f, t, gain};
        }
      }
    }
    return best;
  }

  const TrainingSet& data_;
  const Hyperparameters& hp_;
  std::size_t features_per_split_;
  std::mt19937_64* rng_;
  TreeModel tree_;
};

std::vector<std::uint32_t> all_samples(const TrainingSet& data) {
  std::vector<std::uint32_t> s(data.rows());
  for (std::uint32_t i = 0; i < s.size(); ++i) s[i] = i;
  return s;
}

ForestModel train_forest(const TrainingSet& data, const Hyperparameters& hp) {
  ForestModel forest;
  forest.trees.resize(hp.forest_trees);
  const std::size_t per_split = Hyperparameters::forest_features(data.width);
  parallel_for(hp.forest_trees, hp.threads, [&](std::size_t t) {
    std::mt19937_64 rng(hp.rng_seed + t);
    std::vector<std::uint32_t> bag(data.rows());
    for (auto& s : bag) s = static_cast<std::uint32_t>(uniform_below(rng, data.rows()));
    TreeBuilder builder(data, hp, per_split, &rng);
    forest.trees[t] = builder.build(std::move(bag));
  });
  return forest;
}

}  // namespace

void NaiveBayesModel::prepare(std::size_t width) {
  const std::size_t n_classes = class_counts.size();
  std::uint64_t total = 0;
  for (auto c : class_counts) total += c;
  inv_variances.resize(variances.size());
  for (std::size_t i = 0; i < variances.size(); ++i) inv_variances[i] = 1.0 / variances[i];
  log_norm.assign(n_classes, -std::numeric_limits<double>::infinity());
  for (std::size_t c = 0; c < n_classes; ++c) {
    if (class_counts[c] == 0) continue;
    double acc = std::log(static_cast<double>(class_counts[c]) / static_cast<double>(total));
    for (std::size_t j = 0; j < width; ++j) acc -= 0.5 * std::log(2 * std::numbers::pi * variances[c * width + j]);
    log_norm[c] = acc;
  }
}

std::uint32_t TreeModel::predict(std::span<const double> x) const {
  std::uint32_t i = 0;
  while (nodes[i].feature >= 0) i = x[nodes[i].feature] <= nodes[i].threshold ? nodes[i].left : nodes[i].right;
  return nodes[i].label;
}

std::size_t TreeModel::depth() const {
  std::vector<std::size_t> d(nodes.size(), 0);
  std::size_t deepest = 0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    deepest = std::max(deepest, d[i]);
    if (nodes[i].feature >= 0) d[nodes[i].left] = d[nodes[i].right] = d[i] + 1;
  }
  return deepest;
}

std::size_t Model::predict_index(std::span<const double> x) const {
  if (x.size() != feature_width)
    throw DataError("feature vector has width " + std::to_string(x.size()) + ", model expects " +
                    std::to_string(feature_width));
  const std::size_t n_classes = class_names.size();
  const std::size_t w = feature_width;

  if (const auto* nb = std::get_if<NaiveBayesModel>(&params)) {
    std::size_t best = n_classes;
    double best_score = 0;
    for (std::size_t c = 0; c < n_classes; ++c) {
      if (nb->class_counts[c] == 0) continue;
      const std::span<const double> mean(nb->means.data() + c * w, w);
      const std::span<const double> inv(nb->inv_variances.data() + c * w, w);
      const double score = nb->log_norm[c] - 0.5 * kernels::weighted_squared_distance(x, mean, inv);
      if (best == n_classes || score > best_score) {
        best = c;
        best_score = score;
      }
    }
    return best == n_classes ? 0 : best;
  }

  if (const auto* knn = std::get_if<KnnModel>(&params)) {
    std::vector<double> query(x.begin(), x.end());
    if (knn->scaled)
      for (std::size_t j = 0; j < w; ++j) query[j] = (query[j] - knn->offsets[j]) * knn->scales[j];
    const std::size_t n = knn->targets.size();
    std::vector<std::pair<double, std::uint32_t>> dist(n);
    for (std::uint32_t r = 0; r < n; ++r)
      dist[r] = {kernels::squared_distance(query, std::span<const double>(knn->rows.data() + r * w, w)), r};
    const std::size_t k = std::min(knn->k, n);
    std::partial_sort(dist.begin(), dist.begin() + static_cast<std::ptrdiff_t>(k), dist.end());
    std::vector<std::size_t> votes(n_classes, 0);
    for (std::size_t i = 0; i < k; ++i) ++votes[knn->targets[dist[i].second]];
    return argmax<std::size_t>(votes);
  }

  if (const auto* tree = std::get_if<TreeModel>(&params)) return tree->predict(x);

  const auto& forest = std::get<ForestModel>(params);
  std::vector<std::size_t> votes(n_classes, 0);
  for (const auto& t : forest.trees) ++votes[t.predict(x)];
  return argmax<std::size_t>(votes);
}

Model train(ClassifierKind kind, const TrainingSet& data, const Hyperparameters& hp) {
  hp.validate();
  check_training_set(data);
  Model m;
  m.feature_width = data.width;
  m.class_names = data.class_names;
  switch (kind) {
    case ClassifierKind::kNaiveBayes:
      m.params = train_naive_bayes(data);
      break;
    case ClassifierKind::kKnn:
      m.params = train_knn(data, hp);
      break;
    case ClassifierKind::kTree:
      m.params = TreeBuilder(data, hp, 0, nullptr).build(all_samples(data));
      break;
    case ClassifierKind::kForest:
      m.params = train_forest(data, hp);
      break;
  }
  return m;
}

}  // namespace nswcat
