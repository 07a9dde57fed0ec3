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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nswcat/corpus.hpp"
#include "nswcat/lexicon.hpp"
#include "nswcat/rules.hpp"
#include "nswcat/taxonomy.hpp"
#include "nswcat/tokenizer.hpp"

namespace nswcat {

struct NswOccurrence {
  std::string doc_id;
  std::size_t type = 0;
  std::size_t begin = 0;  // byte offsets into the document text
  std::size_t end = 0;
  std::string surface;
};

struct TokenMatch {
  std::size_t type = 0;
  std::size_t consumed = 0;  // tokens covered, 1..kMaxWindow
  int priority = 0;
};

// Rule engine combining pattern rules and the lookup dictionary.
//
// At each position every rule and lexicon entry is tried; the winner is the
// highest priority, then the longest match, then the earliest definition
// (rules before lexicon entries). The scan is greedy left to right, so
// occurrences never overlap. Holds references: taxonomy, lexicon and rules
// must outlive the lexer.
class NswLexer {
 public:
  NswLexer(const Taxonomy& tax, const Lexicon& lex, const RuleSet& rules);
  static const NswLexer& builtin();

  std::optional<TokenMatch> classify(std::span<const Token> tokens, std::size_t pos) const;

  std::vector<NswOccurrence> extract(const LabeledDocument& doc) const;
  std::vector<NswOccurrence> extract(std::string_view doc_id, std::string_view text) const;

  const Taxonomy& taxonomy() const noexcept { return *tax_; }
  const Lexicon& lexicon() const noexcept { return *lex_; }
  const RuleSet& rules() const noexcept { return *rules_; }
  const Tokenizer& tokenizer() const noexcept { return tokenizer_; }

 private:
  class Scan;

  const Taxonomy* tax_;
  const Lexicon* lex_;
  const RuleSet* rules_;
  Tokenizer tokenizer_;
};

std::optional<TokenMatch> classify_token(std::span<const Token> tokens, std::size_t pos, const Lexicon& lex,
                                         const RuleSet& rules, const Taxonomy& tax = Taxonomy::builtin());

std::vector<NswOccurrence> extract_nsws(const LabeledDocument& doc, const Lexicon& lex, const RuleSet& rules,
                                        const Taxonomy& tax = Taxonomy::builtin());

// `doc_id<TAB>start<TAB>end<TAB>type_name<TAB>surface` lines sorted by (doc_id, start).
std::string format_occurrences(std::vector<NswOccurrence> occurrences, const Taxonomy& tax);

}  // namespace nswcat
