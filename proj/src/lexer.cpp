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

#include "nswcat/lexer.hpp"

#include <algorithm>
#include <cstdint>

namespace nswcat {

// Per-document matching state; memoizes pattern results per token since
// many rules share patterns.
class NswLexer::Scan {
 public:
  Scan(const NswLexer& lexer, std::span<const Token> tokens)
      : lexer_(lexer), tokens_(tokens), cache_(tokens.size() * lexer.rules_->patterns().size(), -1) {}

  std::optional<TokenMatch> classify(std::size_t pos) {
    const RuleSet& rules = *lexer_.rules_;
    std::optional<TokenMatch> best;
    // Only a strictly better match replaces the current one, so among equals
    // the earliest definition wins.
    auto consider = [&](TokenMatch m) {
      if (!best || m.priority > best->priority || (m.priority == best->priority && m.consumed > best->consumed))
        best = m;
    };

    const auto& rule_list = rules.rules();
    for (std::size_t r = 0; r < rule_list.size(); ++r) {
      const Rule& rule = rule_list[r];
      const std::size_t n = rule.elements.size();
      if (pos + n > tokens_.size()) continue;
      if (best && (rule.priority < best->priority || (rule.priority == best->priority && n <= best->consumed)))
        continue;
      bool ok = true;
      for (std::size_t k = 0; ok && k < n; ++k) ok = element_matches(rule.elements[k], pos + k);
      if (ok) consider({rule.type, n, rule.priority});
    }

    const Lexicon& lex = *lexer_.lex_;
    for (std::size_t idx : lex.candidates(tokens_[pos].text)) {
      const LexiconEntry& e = lex.entries()[idx];
      const std::size_t n = e.parts.size();
      if (pos + n > tokens_.size()) continue;
      bool ok = true;
      for (std::size_t k = 0; ok && k < n; ++k) ok = e.part_matches(k, tokens_[pos + k].text);
      if (ok) consider({e.type, n, e.priority(*lexer_.tax_)});
    }
    return best;
  }

 private:
  bool element_matches(const RuleElement& el, std::size_t token_index) {
    const RuleSet& rules = *lexer_.rules_;
    const std::string_view text = tokens_[token_index].text;
    for (const auto& c : el.conditions) {
      bool hit;
      if (c.kind == Condition::Kind::kPattern) {
        auto& slot = cache_[token_index * rules.patterns().size() + c.index];
        if (slot < 0) slot = rules.patterns()[c.index].matches(text) ? 1 : 0;
        hit = (slot == 1) != c.negated;
      } else {
        hit = rules.condition_holds(c, text);
      }
      if (!hit) return false;
    }
    return true;
  }

  const NswLexer& lexer_;
  std::span<const Token> tokens_;
  std::vector<std::int8_t> cache_;
};

NswLexer::NswLexer(const Taxonomy& tax, const Lexicon& lex, const RuleSet& rules)
    : tax_(&tax), lex_(&lex), rules_(&rules), tokenizer_(lex, rules) {}

const NswLexer& NswLexer::builtin() {
  static const NswLexer lexer(Taxonomy::builtin(), Lexicon::builtin(), RuleSet::builtin());
  return lexer;
}

std::optional<TokenMatch> NswLexer::classify(std::span<const Token> tokens, std::size_t pos) const {
  if (pos >= tokens.size()) return std::nullopt;
  Scan scan(*this, tokens);
  return scan.classify(pos);
}

std::vector<NswOccurrence> NswLexer::extract(std::string_view doc_id, std::string_view text) const {
  const auto tokens = tokenizer_.tokenize(text);
  Scan scan(*this, tokens);
  std::vector<NswOccurrence> out;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    auto m = scan.classify(pos);
    if (!m) {
      ++pos;
      continue;
    }
    const std::size_t begin = tokens[pos].begin;
    const std::size_t end = tokens[pos + m->consumed - 1].end;
    out.push_back(NswOccurrence{std::string(doc_id), m->type, begin, end, std::string(text.substr(begin, end - begin))});
    pos += m->consumed;
  }
  return out;
}

std::vector<NswOccurrence> NswLexer::extract(const LabeledDocument& doc) const { return extract(doc.id, doc.text); }

std::optional<TokenMatch> classify_token(std::span<const Token> tokens, std::size_t pos, const Lexicon& lex,
                                         const RuleSet& rules, const Taxonomy& tax) {
  return NswLexer(tax, lex, rules).classify(tokens, pos);
}

std::vector<NswOccurrence> extract_nsws(const LabeledDocument& doc, const Lexicon& lex, const RuleSet& rules,
                                        const Taxonomy& tax) {
  return NswLexer(tax, lex, rules).extract(doc);
}

std::string format_occurrences(std::vector<NswOccurrence> occurrences, const Taxonomy& tax) {
  std::stable_sort(occurrences.begin(), occurrences.end(), [](const NswOccurrence& a, const NswOccurrence& b) {
    return a.doc_id != b.doc_id ? a.doc_id < b.doc_id : a.begin < b.begin;
  });
  std::string out;
  for (const auto& o : occurrences) {
    // Multi-token surfaces may span line breaks; keep the dump one line per occurrence.
    std::string surface = o.surface;
    std::replace_if(surface.begin(), surface.end(), [](char c) { return c == '\t' || c == '\n' || c == '\r'; }, ' ');
    out += o.doc_id + "\t" + std::to_string(o.begin) + "\t" + std::to_string(o.end) + "\t" + tax.leaf(o.type).name +
           "\t" + surface + "\n";
  }
  return out;
}

}  // namespace nswcat
