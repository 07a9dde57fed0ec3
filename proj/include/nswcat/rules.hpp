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
#include <filesystem>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "nswcat/pattern.hpp"
#include "nswcat/taxonomy.hpp"

namespace nswcat {

class Lexicon;

struct WordList {
  std::string name;
  bool case_insensitive = false;
  std::unordered_set<std::string> words;

  bool contains(std::string_view token) const;
};

// A single test applied to a token.
struct Condition {
  enum class Kind { kPattern, kList, kLiteral };
  Kind kind = Kind::kPattern;
  std::size_t index = 0;  // into RuleSet patterns or lists
  std::string literal;
  bool negated = false;
};

// One token position of a rule: all conditions must hold.
struct RuleElement {
  std::vector<Condition> conditions;
};

struct Rule {
  std::size_t type = 0;
  int priority = 0;
  std::vector<RuleElement> elements;
  std::size_t line = 0;
};

// Ordered NSW rules plus the word lists and tokenizer hints they rely on.
//
// File format, one directive per line, fields separated by TAB:
//   list     <name>  cs|ci  <word> <word> ...     (space separated; repeatable)
//   keepdot  <element>                            (token stems that keep a final '.')
//   rule     <type>  <priority>  <element>...     (1 to 6 elements)
// with element   := condition ('&&' condition)*
//      condition := ['!'] (re:<pattern> | in:<list> | is:<literal>)
class RuleSet {
 public:
  static RuleSet parse(std::string_view text, const Taxonomy& tax, const std::string& origin = "<rules>");
  static RuleSet load(const std::filesystem::path& path, const Taxonomy& tax);
  static const RuleSet& builtin();

  const std::vector<Rule>& rules() const noexcept { return rules_; }
  const std::vector<TokenPattern>& patterns() const noexcept { return patterns_; }
  const std::vector<WordList>& lists() const noexcept { return lists_; }
  const std::vector<RuleElement>& keep_period() const noexcept { return keep_period_; }

  bool condition_holds(const Condition& c, std::string_view token) const;
  bool element_matches(const RuleElement& e, std::string_view token) const;

  // Leaves of the NUMBER and COMBINED superclasses with no rule and no lexicon entry.
  std::vector<std::size_t> coverage_gaps(const Taxonomy& tax, const Lexicon& lex) const;

 private:
  std::vector<Rule> rules_;
  std::vector<TokenPattern> patterns_;
  std::vector<WordList> lists_;
  std::vector<RuleElement> keep_period_;
};

}  // namespace nswcat
