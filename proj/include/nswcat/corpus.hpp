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
#include <span>
#include <string>
#include <vector>

#include "nswcat/tokenizer.hpp"

namespace nswcat {

struct LabeledDocument {
  std::string id;  // path relative to the corpus root, '/' separated
  std::string text;
  std::string label;
  std::size_t token_count = 0;
};

// A file that could not be loaded; the rest of the corpus still is.
struct FileIssue {
  std::string path;
  std::string message;
};

struct Corpus {
  std::vector<LabeledDocument> documents;  // sorted by id
  std::vector<std::string> categories;     // sorted
  std::vector<FileIssue> skipped;
};

// Loads `<root>/<category>/<file>.txt`. Throws ConfigError when the root is
// missing and DataError when a category ends up with no readable document.
Corpus load_corpus(const std::filesystem::path& root, const Tokenizer& tokenizer = Tokenizer::builtin(),
                   unsigned threads = 1);

struct StatsRow {
  std::string category;
  std::uint64_t tokens = 0;
  std::uint64_t nsws = 0;
  double nsw_percent = 0.0;
  bool zero_tokens = false;  // percent forced to 0
};

struct CorpusStats {
  std::vector<StatsRow> per_class;  // order of first appearance
  StatsRow overall;

  bool has_warning() const;
};

// Per-class and overall token/NSW totals; nsw_counts[i] belongs to docs[i].
CorpusStats corpus_stats(std::span<const LabeledDocument> docs, std::span<const std::uint64_t> nsw_counts);

// `category<TAB>tokens<TAB>nsws<TAB>nsw_percent`, percents with 2 decimals,
// closed by an OVERALL row.
std::string format_stats_tsv(const CorpusStats& stats);

}  // namespace nswcat
