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
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nswcat/classifiers.hpp"
#include "nswcat/corpus.hpp"
#include "nswcat/features.hpp"
#include "nswcat/lexer.hpp"

namespace nswcat {

struct FoldAssignment {
  std::size_t k = 0;
  std::uint64_t seed = 0;
  bool stratified = true;
  std::vector<std::size_t> fold;  // per document, 0..k-1

  std::vector<std::size_t> test_rows(std::size_t f) const;
  std::vector<std::size_t> train_rows(std::size_t f) const;
};

// Stratified: each class is shuffled and dealt round-robin, the dealing
// position carrying over from one class to the next, so per-class and
// overall fold sizes both differ by at most one.
FoldAssignment kfold_split(std::span<const std::string> labels, std::size_t k, std::uint64_t seed,
                           bool stratified = true);

// correct / total; throws DataError when total is 0 or correct > total.
double accuracy(std::uint64_t correct, std::uint64_t total);

struct EvaluationReport {
  std::string kind;            // classifier kind name
  std::string representation;  // "freq", "stat", "union" or empty
  std::uint64_t correct = 0;
  std::uint64_t total = 0;
  double accuracy = 0;
  std::vector<std::string> class_names;
  std::vector<std::vector<std::uint64_t>> confusion;  // [true][predicted]
  std::vector<double> per_class_accuracy;             // recall per class
  std::uint64_t seed = 0;
  Hyperparameters hyperparameters;
};

// Learns on `train` and returns one class index per row of `test`.
using FitPredict = std::function<std::vector<std::uint32_t>(const TrainingSet& train, const TrainingSet& test)>;

// Out-of-fold predictions pooled over all folds. Folds run on `threads`
// workers; the report does not depend on the thread count.
EvaluationReport cross_validate(const TrainingSet& data, const FitPredict& learner, const FoldAssignment& folds,
                                unsigned threads = 1);
EvaluationReport cross_validate(const FeatureMatrix& matrix, ClassifierKind kind, const Hyperparameters& hp,
                                const FoldAssignment& folds, unsigned threads = 1);

struct ExperimentConfig {
  std::size_t k = 5;
  std::uint64_t seed = 0;  // folds and forests; overrides hyperparameters.rng_seed
  bool stratified = true;
  std::vector<Representation> reps{Representation::kFreq, Representation::kStat, Representation::kUnion};
  std::vector<ClassifierKind> kinds{ClassifierKind::kNaiveBayes, ClassifierKind::kKnn, ClassifierKind::kTree,
                                    ClassifierKind::kForest};
  Hyperparameters hyperparameters;
  ClassifierKind per_class_kind = ClassifierKind::kForest;  // source of the per-class table
  unsigned threads = 1;
};

struct ReportBundle {
  std::vector<std::string> class_names;
  std::vector<EvaluationReport> reports;  // representation-major, in config order
  ExperimentConfig config;

  // Arithmetic mean of the accuracies reported for `rep`.
  std::optional<double> mean_accuracy(Representation rep) const;
  const EvaluationReport* find(Representation rep, ClassifierKind kind) const;
};

// Runs every (representation, classifier) cell of the config. Errors carry
// the stage that failed ("load corpus", "extract", "featurize", "cross-validate").
ReportBundle run_experiment(const std::filesystem::path& corpus_root, const ExperimentConfig& config,
                            const NswLexer& lexer = NswLexer::builtin());
ReportBundle run_experiment(const Corpus& corpus, std::span<const std::vector<NswOccurrence>> occurrences,
                            const ExperimentConfig& config, const Taxonomy& tax = Taxonomy::builtin());

// Key/value lines for one cell, ending with the labelled confusion rows.
std::string format_report(const EvaluationReport& r);
// One row per cell plus a mean row per representation; percents with 2 decimals.
std::string format_summary(const ReportBundle& b);
// Category rows by representation columns with AVG row and column, for config.per_class_kind.
std::string format_per_class(const ReportBundle& b);

// Writes <rep>_<kind>.txt per cell, summary.tsv and per_class.tsv.
void write_reports(const ReportBundle& b, const std::filesystem::path& out_dir);

}  // namespace nswcat
