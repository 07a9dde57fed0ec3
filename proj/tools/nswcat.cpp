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

// nswcat: NSW extraction, featurization, training and cross-validated evaluation.
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nswcat/builtin_data.hpp"
#include "nswcat/classifiers.hpp"
#include "nswcat/corpus.hpp"
#include "nswcat/error.hpp"
#include "nswcat/features.hpp"
#include "nswcat/harness.hpp"
#include "nswcat/lexer.hpp"
#include "nswcat/model_io.hpp"
#include "nswcat/parallel.hpp"
#include "nswcat/text_io.hpp"

namespace {

using namespace nswcat;

constexpr int kUsage = 1;
constexpr int kDataError = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Taxonomy, lexicon and rules, each either loaded from a file or builtin.
struct ResourceOptions {
  std::string taxonomy, lexicon, rules;
};

class Resources {
 public:
  explicit Resources(const ResourceOptions& o) {
    if (o.taxonomy.empty() && o.lexicon.empty() && o.rules.empty()) {
      lexer_ = &NswLexer::builtin();
      return;
    }
    tax_ = o.taxonomy.empty() ? Taxonomy::builtin() : Taxonomy::load(o.taxonomy);
    lex_ = o.lexicon.empty() ? Lexicon::parse(builtin::kLexiconTsv, tax_, "builtin:lexicon.tsv")
                             : Lexicon::load(o.lexicon, tax_);
    rules_ = o.rules.empty() ? RuleSet::parse(builtin::kRulesTsv, tax_, "builtin:rules.tsv")
                             : RuleSet::load(o.rules, tax_);
    owned_ = std::make_unique<NswLexer>(tax_, lex_, rules_);
    lexer_ = owned_.get();
  }
  const NswLexer& lexer() const { return *lexer_; }

 private:
  Taxonomy tax_;
  Lexicon lex_;
  RuleSet rules_;
  std::unique_ptr<NswLexer> owned_;
  const NswLexer* lexer_ = nullptr;
};

void add_resource_options(CLI::App* cmd, ResourceOptions& o) {
  cmd->add_option("--taxonomy", o.taxonomy, "Taxonomy manifest (default: builtin)");
  cmd->add_option("--lexicon", o.lexicon, "Lexicon file (default: builtin)");
  cmd->add_option("--rules", o.rules, "Rules file (default: builtin)");
}

void report_skipped(const Corpus& corpus) {
  for (const auto& s : corpus.skipped) std::cerr << "warning: skipped " << s.path << ": " << s.message << "\n";
}

std::vector<std::vector<NswOccurrence>> extract_all(const Corpus& corpus, const NswLexer& lexer, unsigned threads) {
  std::vector<std::vector<NswOccurrence>> occ(corpus.documents.size());
  parallel_for(corpus.documents.size(), threads,
               [&](std::size_t i) { occ[i] = lexer.extract(corpus.documents[i]); });
  return occ;
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty() || out_path == "-")
    std::cout << text;
  else
    write_file(out_path, text);
}

Representation rep_from(const std::string& name) {
  auto rep = parse_representation(name);
  if (!rep) throw UsageError("unknown representation '" + name + "' (want freq, stat or union)");
  return *rep;
}

ClassifierKind kind_from(const std::string& name) {
  auto kind = parse_kind(name);
  if (!kind) throw UsageError("unknown classifier '" + name + "' (want nb, knn, tree or forest)");
  return *kind;
}

struct HyperOptions {
  std::size_t knn_k = 5;
  bool knn_scale = false;
  std::size_t min_leaf = 2;
  std::size_t max_depth = 0;
  std::size_t trees = 100;
  std::uint64_t seed = 0;

  Hyperparameters build(unsigned threads) const {
    Hyperparameters hp;
    hp.knn_k = knn_k;
    hp.knn_scale = knn_scale;
    hp.tree_min_leaf = min_leaf;
    if (max_depth > 0) hp.tree_max_depth = max_depth;
    hp.forest_trees = trees;
    hp.rng_seed = seed;
    hp.threads = threads;
    return hp;
  }
};

void add_tree_options(CLI::App* cmd, HyperOptions& h) {
  cmd->add_option("--min-leaf", h.min_leaf, "Fewest samples on each side of a tree split")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--max-depth", h.max_depth, "Tree depth limit (0: unbounded)");
  cmd->add_option("--trees", h.trees, "Trees in a forest")->check(CLI::PositiveNumber);
  cmd->add_flag("--scale", h.knn_scale, "Min-max scale features for kNN");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Non-standard word extraction and NSW-based text categorization"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads (results do not depend on it)")
      ->check(CLI::PositiveNumber);

  // extract
  ResourceOptions extract_res;
  std::string extract_corpus, extract_out;
  auto* extract = app.add_subcommand("extract", "List NSW occurrences of every document");
  extract->add_option("corpus", extract_corpus, "Corpus root (<root>/<category>/*.txt)")->required();
  extract->add_option("--out", extract_out, "Output file (default: stdout)");
  add_resource_options(extract, extract_res);

  // featurize
  ResourceOptions feat_res;
  std::string feat_corpus, feat_rep, feat_out;
  auto* featurize = app.add_subcommand("featurize", "Write the term-by-document matrix");
  featurize->add_option("corpus", feat_corpus, "Corpus root")->required();
  featurize->add_option("--rep", feat_rep, "freq, stat or union")->required();
  featurize->add_option("--out", feat_out, "Matrix file")->required();
  add_resource_options(featurize, feat_res);

  // stats
  ResourceOptions stats_res;
  std::string stats_corpus, stats_out;
  auto* stats = app.add_subcommand("stats", "Per-category token and NSW counts");
  stats->add_option("corpus", stats_corpus, "Corpus root")->required();
  stats->add_option("--out", stats_out, "Output file (default: stdout)");
  add_resource_options(stats, stats_res);

  // train
  std::string train_matrix, train_kind, train_out;
  HyperOptions train_hp;
  auto* train_cmd = app.add_subcommand("train", "Train a classifier on a matrix file");
  train_cmd->add_option("--matrix", train_matrix, "Matrix file from featurize")->required();
  train_cmd->add_option("--kind", train_kind, "nb, knn, tree or forest")->required();
  train_cmd->add_option("--seed", train_hp.seed, "Random seed");
  train_cmd->add_option("--k", train_hp.knn_k, "Neighbours for kNN")->check(CLI::PositiveNumber);
  train_cmd->add_option("--out", train_out, "Model file")->required();
  add_tree_options(train_cmd, train_hp);

  // predict
  std::string predict_model, predict_matrix, predict_out;
  auto* predict = app.add_subcommand("predict", "Label the rows of a matrix file with a trained model");
  predict->add_option("--model", predict_model, "Model file")->required();
  predict->add_option("--matrix", predict_matrix, "Matrix file")->required();
  predict->add_option("--out", predict_out, "Output file (default: stdout)");

  // evaluate
  ResourceOptions eval_res;
  std::string eval_corpus, eval_out;
  std::size_t eval_k = 5;
  std::vector<std::string> eval_reps{"freq", "stat", "union"};
  std::vector<std::string> eval_kinds{"nb", "knn", "tree", "forest"};
  std::string eval_per_class = "forest";
  bool eval_plain = false;
  HyperOptions eval_hp;
  auto* evaluate = app.add_subcommand("evaluate", "Cross-validate every classifier on every representation");
  evaluate->add_option("--corpus", eval_corpus, "Corpus root")->required();
  evaluate->add_option("--k", eval_k, "Number of folds")->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
  evaluate->add_option("--seed", eval_hp.seed, "Seed for folds and forests");
  evaluate->add_option("--reps", eval_reps, "Representations")->delimiter(',');
  evaluate->add_option("--kinds", eval_kinds, "Classifiers")->delimiter(',');
  evaluate->add_option("--per-class", eval_per_class, "Classifier for per_class.tsv");
  evaluate->add_option("--knn-k", eval_hp.knn_k, "Neighbours for kNN")->check(CLI::PositiveNumber);
  evaluate->add_flag("--no-stratify", eval_plain, "Plain random folds");
  evaluate->add_option("--out-dir", eval_out, "Report directory")->required();
  add_tree_options(evaluate, eval_hp);
  add_resource_options(evaluate, eval_res);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*extract) {
      Resources res(extract_res);
      const auto corpus = load_corpus(extract_corpus, res.lexer().tokenizer(), threads);
      report_skipped(corpus);
      std::vector<NswOccurrence> all;
      for (auto& occ : extract_all(corpus, res.lexer(), threads))
        all.insert(all.end(), std::make_move_iterator(occ.begin()), std::make_move_iterator(occ.end()));
      emit(extract_out, format_occurrences(std::move(all), res.lexer().taxonomy()));
    } else if (*featurize) {
      const auto rep = rep_from(feat_rep);
      Resources res(feat_res);
      const auto corpus = load_corpus(feat_corpus, res.lexer().tokenizer(), threads);
      report_skipped(corpus);
      const auto occ = extract_all(corpus, res.lexer(), threads);
      emit(feat_out, write_matrix(build_matrix(corpus.documents, occ, rep, res.lexer().taxonomy(), threads)));
    } else if (*stats) {
      Resources res(stats_res);
      const auto corpus = load_corpus(stats_corpus, res.lexer().tokenizer(), threads);
      report_skipped(corpus);
      const auto occ = extract_all(corpus, res.lexer(), threads);
      std::vector<std::uint64_t> counts;
      for (const auto& o : occ) counts.push_back(o.size());
      const auto table = corpus_stats(corpus.documents, counts);
      for (const auto& row : table.per_class)
        if (row.zero_tokens) std::cerr << "warning: category '" << row.category << "' has no tokens\n";
      emit(stats_out, format_stats_tsv(table));
    } else if (*train_cmd) {
      const auto kind = kind_from(train_kind);
      const auto matrix = read_matrix(read_file(train_matrix), train_matrix);
      const auto model = train(kind, TrainingSet::from_matrix(matrix), train_hp.build(threads));
      save_model(train_out, model);
    } else if (*predict) {
      const auto model = load_model(predict_model);
      const auto matrix = read_matrix(read_file(predict_matrix), predict_matrix);
      std::string out = "doc_id\tlabel\tpredicted\n";
      for (std::size_t i = 0; i < matrix.rows(); ++i)
        out += matrix.doc_ids[i] + "\t" + matrix.labels[i] + "\t" + model.predict(matrix.row(i)) + "\n";
      emit(predict_out, out);
    } else if (*evaluate) {
      ExperimentConfig config;
      config.k = eval_k;
      config.seed = eval_hp.seed;
      config.stratified = !eval_plain;
      config.reps.clear();
      for (const auto& r : eval_reps) config.reps.push_back(rep_from(r));
      config.kinds.clear();
      for (const auto& k : eval_kinds) config.kinds.push_back(kind_from(k));
      config.per_class_kind = kind_from(eval_per_class);
      // Folds and cells already run in parallel; forests build serially inside each job.
      config.hyperparameters = eval_hp.build(1);
      config.threads = threads;
      Resources res(eval_res);
      const auto corpus = load_corpus(eval_corpus, res.lexer().tokenizer(), threads);
      report_skipped(corpus);
      const auto occ = extract_all(corpus, res.lexer(), threads);
      const auto bundle = run_experiment(corpus, occ, config, res.lexer().taxonomy());
      write_reports(bundle, eval_out);
      std::cout << format_summary(bundle);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const nswcat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kDataError;
  }
  return 0;
}
