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

#include "nswcat/corpus.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "nswcat/error.hpp"
#include "nswcat/parallel.hpp"
#include "nswcat/text_io.hpp"
#include "nswcat/utf8.hpp"

namespace fs = std::filesystem;

namespace nswcat {

namespace {

bool hidden(const fs::path& p) {
  const auto name = p.filename().string();
  return !name.empty() && name.front() == '.';
}

}  // namespace

Corpus load_corpus(const fs::path& root, const Tokenizer& tokenizer, unsigned threads) {
  std::error_code ec;
  if (!fs::exists(root, ec)) throw ConfigError("corpus root does not exist: " + root.string());
  if (!fs::is_directory(root, ec)) throw ConfigError("corpus root is not a directory: " + root.string());

  struct Pending {
    fs::path path;
    std::string id;
    std::string label;
  };
  std::vector<Pending> files;
  Corpus corpus;

  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory() || hidden(entry.path())) continue;
    corpus.categories.push_back(entry.path().filename().string());
  }
  std::sort(corpus.categories.begin(), corpus.categories.end());
  if (corpus.categories.empty()) throw ConfigError("corpus root has no category directories: " + root.string());

  for (const auto& cat : corpus.categories) {
    std::size_t n = 0;
    for (const auto& entry : fs::directory_iterator(root / cat)) {
      if (!entry.is_regular_file() || hidden(entry.path()) || entry.path().extension() != ".txt") continue;
      files.push_back({entry.path(), cat + "/" + entry.path().filename().string(), cat});
      ++n;
    }
    if (n == 0) throw DataError("category '" + cat + "' has no .txt files; every category needs at least one");
  }
  std::sort(files.begin(), files.end(), [](const Pending& a, const Pending& b) { return a.id < b.id; });

  std::vector<std::optional<LabeledDocument>> loaded(files.size());
  std::vector<std::string> problems(files.size());
  parallel_for(files.size(), threads, [&](std::size_t i) {
    std::string text;
    try {
      text = read_file(files[i].path);
    } catch (const ConfigError& e) {
      problems[i] = e.what();
      return;
    }
    if (auto bad = utf8::first_invalid(text)) {
      problems[i] = "invalid UTF-8 at byte " + std::to_string(*bad);
      return;
    }
    LabeledDocument doc;
    doc.id = files[i].id;
    doc.label = files[i].label;
    doc.token_count = tokenizer.tokenize(text).size();
    doc.text = std::move(text);
    loaded[i] = std::move(doc);
  });

  for (std::size_t i = 0; i < files.size(); ++i) {
    if (loaded[i]) {
      corpus.documents.push_back(std::move(*loaded[i]));
    } else {
      corpus.skipped.push_back({files[i].id, problems[i]});
    }
  }
  for (const auto& cat : corpus.categories) {
    const bool any = std::any_of(corpus.documents.begin(), corpus.documents.end(),
                                 [&](const LabeledDocument& d) { return d.label == cat; });
    if (!any) throw DataError("category '" + cat + "' has no readable documents");
  }
  return corpus;
}

bool CorpusStats::has_warning() const {
  if (overall.zero_tokens) return true;
  return std::any_of(per_class.begin(), per_class.end(), [](const StatsRow& r) { return r.zero_tokens; });
}

namespace {

void finish(StatsRow& row) {
  row.zero_tokens = row.tokens == 0;
  row.nsw_percent = row.zero_tokens ? 0.0 : 100.0 * static_cast<double>(row.nsws) / static_cast<double>(row.tokens);
}

}  // namespace

CorpusStats corpus_stats(std::span<const LabeledDocument> docs, std::span<const std::uint64_t> nsw_counts) {
  if (docs.size() != nsw_counts.size())
    throw DataError("corpus_stats: " + std::to_string(docs.size()) + " documents but " +
                    std::to_string(nsw_counts.size()) + " NSW counts");
  CorpusStats stats;
  std::map<std::string, std::size_t> row_of;
  for (std::size_t i = 0; i < docs.size(); ++i) {
    auto [it, inserted] = row_of.emplace(docs[i].label, stats.per_class.size());
    if (inserted) stats.per_class.push_back(StatsRow{docs[i].label});
    auto& row = stats.per_class[it->second];
    row.tokens += docs[i].token_count;
    row.nsws += nsw_counts[i];
  }
  stats.overall.category = "OVERALL";
  for (auto& row : stats.per_class) {
    finish(row);
    stats.overall.tokens += row.tokens;
    stats.overall.nsws += row.nsws;
  }
  finish(stats.overall);
  return stats;
}

std::string format_stats_tsv(const CorpusStats& stats) {
  std::string out = "category\ttokens\tnsws\tnsw_percent\n";
  auto row = [&](const StatsRow& r) {
    out += r.category + "\t" + std::to_string(r.tokens) + "\t" + std::to_string(r.nsws) + "\t" +
           format_fixed(r.nsw_percent, 2) + "\n";
  };
  for (const auto& r : stats.per_class) row(r);
  row(stats.overall);
  return out;
}

}  // namespace nswcat
