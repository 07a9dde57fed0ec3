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

#include "nswcat/harness.hpp"

#include <algorithm>
#include <map>
#include <random>

#include "nswcat/error.hpp"
#include "nswcat/parallel.hpp"
#include "nswcat/text_io.hpp"
#include "rng.hpp"

namespace nswcat {

std::vector<std::size_t> FoldAssignment::test_rows(std::size_t f) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < fold.size(); ++i)
    if (fold[i] == f) rows.push_back(i);
  return rows;
}

std::vector<std::size_t> FoldAssignment::train_rows(std::size_t f) const {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < fold.size(); ++i)
    if (fold[i] != f) rows.push_back(i);
  return rows;
}

FoldAssignment kfold_split(std::span<const std::string> labels, std::size_t k, std::uint64_t seed, bool stratified) {
  if (k < 2) throw ConfigError("k must be at least 2, got " + std::to_string(k));
  FoldAssignment fa{k, seed, stratified, std::vector<std::size_t>(labels.size(), 0)};
  std::mt19937_64 rng(seed);

  std::vector<std::vector<std::size_t>> groups;
  if (stratified) {
    std::map<std::string_view, std::vector<std::size_t>> by_class;
    for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
    for (auto& [name, members] : by_class) {
      if (members.size() < k)
        throw DataError("class '" + std::string(name) + "' has " + std::to_string(members.size()) +
                        " documents, fewer than k=" + std::to_string(k));
      groups.push_back(std::move(members));
    }
  } else {
    if (labels.size() < k)
      throw DataError(std::to_string(labels.size()) + " documents cannot fill k=" + std::to_string(k) + " folds");
    groups.emplace_back(labels.size());
    for (std::size_t i = 0; i < labels.size(); ++i) groups[0][i] = i;
  }

  std::size_t offset = 0;
  for (auto& members : groups) {
    detail::shuffle(members, rng);
    for (std::size_t i = 0; i < members.size(); ++i) fa.fold[members[i]] = (offset + i) % k;
    offset += members.size();
  }
  return fa;
}

double accuracy(std::uint64_t correct, std::uint64_t total) {
  if (total == 0) throw DataError("accuracy over zero test cases");
  if (correct > total) throw DataError("correct count exceeds total");
  return static_cast<double>(correct) / static_cast<double>(total);
}

namespace {

template <typename Fn>
auto with_context(const std::string& context, Fn&& fn) {
  try {
    return fn();
  } catch (const ConfigError& e) {
    throw ConfigError(context + ": " + e.what());
  } catch (const DataError& e) {
    throw DataError(context + ": " + e.what());
  } catch (const Error& e) {
    throw Error(context + ": " + e.what());
  }
}

EvaluationReport tally(const TrainingSet& data, const FoldAssignment& folds,
                       const std::vector<std::vector<std::uint32_t>>& predictions) {
  const std::size_t n_classes = data.class_names.size();
  EvaluationReport r;
  r.class_names = data.class_names;
  r.confusion.assign(n_classes, std::vector<std::uint64_t>(n_classes, 0));
  for (std::size_t f = 0; f < folds.k; ++f) {
    const auto rows = folds.test_rows(f);
    for (std::size_t i = 0; i < rows.size(); ++i) ++r.confusion[data.targets[rows[i]]][predictions[f][i]];
  }
  r.per_class_accuracy.assign(n_classes, 0.0);
  for (std::size_t c = 0; c < n_classes; ++c) {
    std::uint64_t row_sum = 0;
    for (auto v : r.confusion[c]) row_sum += v;
    r.total += row_sum;
    r.correct += r.confusion[c][c];
    if (row_sum > 0) r.per_class_accuracy[c] = accuracy(r.confusion[c][c], row_sum);
  }
  r.accuracy = accuracy(r.correct, r.total);
  r.seed = folds.seed;
  return r;
}

FitPredict model_learner(ClassifierKind kind, const Hyperparameters& hp) {
  return [kind, hp](const TrainingSet& train_set, const TrainingSet& test) {
    const Model m = train(kind, train_set, hp);
    std::vector<std::uint32_t> out(test.rows());
    for (std::size_t i = 0; i < test.rows(); ++i) out[i] = static_cast<std::uint32_t>(m.predict_index(test.row(i)));
    return out;
  };
}

std::vector<std::vector<std::uint32_t>> run_folds(const TrainingSet& data, const FitPredict& learner,
                                                  const FoldAssignment& folds, unsigned threads) {
  if (folds.fold.size() != data.rows())
    throw DataError("fold assignment covers " + std::to_string(folds.fold.size()) + " documents, matrix has " +
                    std::to_string(data.rows()));
  std::vector<std::vector<std::uint32_t>> predictions(folds.k);
  parallel_for(folds.k, threads, [&](std::size_t f) {
    with_context("fold " + std::to_string(f), [&] {
      const auto train_rows = folds.train_rows(f);
      const auto test_rows = folds.test_rows(f);
      if (train_rows.empty() || test_rows.empty()) throw DataError("fold is empty");
      predictions[f] = learner(data.subset(train_rows), data.subset(test_rows));
      if (predictions[f].size() != test_rows.size()) throw DataError("learner returned the wrong number of labels");
      for (auto p : predictions[f])
        if (p >= data.class_names.size()) throw DataError("learner returned an unknown class index");
      return 0;
    });
  });
  return predictions;
}

}  // namespace

EvaluationReport cross_validate(const TrainingSet& data, const FitPredict& learner, const FoldAssignment& folds,
                                unsigned threads) {
  return tally(data, folds, run_folds(data, learner, folds, threads));
}

EvaluationReport cross_validate(const FeatureMatrix& matrix, ClassifierKind kind, const Hyperparameters& hp,
                                const FoldAssignment& folds, unsigned threads) {
  const auto data = TrainingSet::from_matrix(matrix);
  auto r = cross_validate(data, model_learner(kind, hp), folds, threads);
  r.kind = kind_name(kind);
  if (matrix.representation) r.representation = representation_name(*matrix.representation);
  r.hyperparameters = hp;
  return r;
}

std::optional<double> ReportBundle::mean_accuracy(Representation rep) const {
  const auto name = representation_name(rep);
  double sum = 0;
  std::size_t n = 0;
  for (const auto& r : reports)
    if (r.representation == name) {
      sum += r.accuracy;
      ++n;
    }
  if (n == 0) return std::nullopt;
  return sum / static_cast<double>(n);
}

const EvaluationReport* ReportBundle::find(Representation rep, ClassifierKind kind) const {
  for (const auto& r : reports)
    if (r.representation == representation_name(rep) && r.kind == kind_name(kind)) return &r;
  return nullptr;
}

ReportBundle run_experiment(const Corpus& corpus, std::span<const std::vector<NswOccurrence>> occurrences,
                            const ExperimentConfig& config, const Taxonomy& tax) {
  // One seed drives both the fold split and the forests.
  auto hp = config.hyperparameters;
  hp.rng_seed = config.seed;
  hp.validate();
  if (config.reps.empty() || config.kinds.empty()) throw ConfigError("experiment needs a representation and a classifier");
  const auto& docs = corpus.documents;

  std::vector<std::string> labels;
  for (const auto& d : docs) labels.push_back(d.label);
  const auto folds = with_context("split folds", [&] { return kfold_split(labels, config.k, config.seed, config.stratified); });

  std::vector<TrainingSet> sets;
  for (auto rep : config.reps) {
    auto m = with_context("featurize " + std::string(representation_name(rep)),
                          [&] { return build_matrix(docs, occurrences, rep, tax, config.threads); });
    sets.push_back(TrainingSet::from_matrix(m, corpus.categories));
  }

  // Every (cell, fold) pair is an independent job; results land in fixed slots.
  const std::size_t n_cells = config.reps.size() * config.kinds.size();
  std::vector<std::vector<std::vector<std::uint32_t>>> predictions(n_cells,
                                                                   std::vector<std::vector<std::uint32_t>>(config.k));
  parallel_for(n_cells * config.k, config.threads, [&](std::size_t job) {
    const std::size_t cell = job / config.k, f = job % config.k;
    const auto rep = config.reps[cell / config.kinds.size()];
    const auto kind = config.kinds[cell % config.kinds.size()];
    const auto& data = sets[cell / config.kinds.size()];
    with_context("cross-validate " + std::string(representation_name(rep)) + "/" + std::string(kind_name(kind)) +
                     ", fold " + std::to_string(f),
                 [&] {
                   auto learner = model_learner(kind, hp);
                   predictions[cell][f] = learner(data.subset(folds.train_rows(f)), data.subset(folds.test_rows(f)));
                   return 0;
                 });
  });

  ReportBundle bundle;
  bundle.class_names = corpus.categories;
  bundle.config = config;
  bundle.config.hyperparameters = hp;
  for (std::size_t cell = 0; cell < n_cells; ++cell) {
    const auto rep = config.reps[cell / config.kinds.size()];
    const auto kind = config.kinds[cell % config.kinds.size()];
    auto r = tally(sets[cell / config.kinds.size()], folds, predictions[cell]);
    r.kind = kind_name(kind);
    r.representation = representation_name(rep);
    r.hyperparameters = hp;
    bundle.reports.push_back(std::move(r));
  }
  return bundle;
}

ReportBundle run_experiment(const std::filesystem::path& corpus_root, const ExperimentConfig& config,
                            const NswLexer& lexer) {
  const auto corpus =
      with_context("load corpus", [&] { return load_corpus(corpus_root, lexer.tokenizer(), config.threads); });
  std::vector<std::vector<NswOccurrence>> occurrences(corpus.documents.size());
  with_context("extract", [&] {
    parallel_for(corpus.documents.size(), config.threads,
                 [&](std::size_t i) { occurrences[i] = lexer.extract(corpus.documents[i]); });
    return 0;
  });
  return run_experiment(corpus, occurrences, config, lexer.taxonomy());
}

namespace {

std::string percent(double fraction) { return format_fixed(100.0 * fraction, 2); }

std::string join_tab(const std::vector<std::string>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += '\t';
    out += xs[i];
  }
  return out;
}

}  // namespace

std::string format_report(const EvaluationReport& r) {
  const auto& hp = r.hyperparameters;
  std::string out;
  auto kv = [&](std::string_view key, const std::string& value) {
    out.append(key);
    out += '\t';
    out += value;
    out += '\n';
  };
  kv("kind", r.kind);
  kv("rep", r.representation);
  kv("correct", std::to_string(r.correct));
  kv("total", std::to_string(r.total));
  kv("accuracy", format_double(r.accuracy));
  kv("accuracy_percent", percent(r.accuracy));
  kv("seed", std::to_string(r.seed));
  kv("knn_k", std::to_string(hp.knn_k));
  kv("knn_scale", hp.knn_scale ? "1" : "0");
  kv("tree_min_leaf", std::to_string(hp.tree_min_leaf));
  kv("tree_max_depth", hp.tree_max_depth ? std::to_string(*hp.tree_max_depth) : "none");
  kv("forest_trees", std::to_string(hp.forest_trees));
  kv("classes", join_tab(r.class_names));
  for (std::size_t c = 0; c < r.class_names.size(); ++c) {
    std::vector<std::string> row{r.class_names[c]};
    for (auto v : r.confusion[c]) row.push_back(std::to_string(v));
    kv("confusion", join_tab(row));
  }
  for (std::size_t c = 0; c < r.class_names.size(); ++c)
    kv("per_class", r.class_names[c] + "\t" + format_double(r.per_class_accuracy[c]));
  return out;
}

std::string format_summary(const ReportBundle& b) {
  std::string out = "representation\tclassifier\tcorrect\ttotal\taccuracy\taccuracy_percent\n";
  for (auto rep : b.config.reps) {
    for (auto kind : b.config.kinds) {
      const auto* r = b.find(rep, kind);
      if (!r) continue;
      out += join_tab({r->representation, std::string(kind_title(kind)), std::to_string(r->correct),
                       std::to_string(r->total), format_double(r->accuracy), percent(r->accuracy)});
      out += '\n';
    }
    if (auto mean = b.mean_accuracy(rep)) {
      out += join_tab({std::string(representation_name(rep)), "Mean", "", "", format_double(*mean), percent(*mean)});
      out += '\n';
    }
  }
  return out;
}

std::string format_per_class(const ReportBundle& b) {
  const auto kind = b.config.per_class_kind;
  std::vector<Representation> reps;
  for (auto rep : b.config.reps)
    if (b.find(rep, kind)) reps.push_back(rep);

  std::vector<std::string> header{"category"};
  for (auto rep : reps) header.emplace_back(representation_name(rep));
  header.emplace_back("AVG");
  std::string out = join_tab(header) + "\n";
  if (reps.empty()) return out;

  std::vector<double> col_sum(reps.size(), 0.0);
  for (std::size_t c = 0; c < b.class_names.size(); ++c) {
    std::vector<std::string> row{b.class_names[c]};
    double row_sum = 0;
    for (std::size_t i = 0; i < reps.size(); ++i) {
      const double v = b.find(reps[i], kind)->per_class_accuracy[c];
      row.push_back(percent(v));
      row_sum += v;
      col_sum[i] += v;
    }
    row.push_back(percent(row_sum / static_cast<double>(reps.size())));
    out += join_tab(row) + "\n";
  }
  std::vector<std::string> avg{"AVG"};
  double total = 0;
  for (double s : col_sum) {
    const double mean = s / static_cast<double>(b.class_names.size());
    avg.push_back(percent(mean));
    total += mean;
  }
  avg.push_back(percent(total / static_cast<double>(reps.size())));
  out += join_tab(avg) + "\n";
  return out;
}

void write_reports(const ReportBundle& b, const std::filesystem::path& out_dir) {
  std::error_code ec;
  std::filesystem::create_directories(out_dir, ec);
  if (ec) throw ConfigError("cannot create output directory " + out_dir.string() + ": " + ec.message());
  for (const auto& r : b.reports) write_file(out_dir / (r.representation + "_" + r.kind + ".txt"), format_report(r));
  write_file(out_dir / "summary.tsv", format_summary(b));
  write_file(out_dir / "per_class.tsv", format_per_class(b));
}

}  // namespace nswcat
