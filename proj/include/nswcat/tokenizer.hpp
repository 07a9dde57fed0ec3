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
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

#include "nswcat/rules.hpp"

namespace nswcat {

class Lexicon;

// A token is a byte span of the source text; `text` views into that text.
struct Token {
  std::size_t begin = 0;
  std::size_t end = 0;
  std::string_view text;
};

// Word/punctuation tokenizer.
//
// Text is split at whitespace. Leading opening brackets and quotes and
// trailing sentence punctuation are split off each chunk, except that:
//   - chunks made only of punctuation or symbols stay whole (":-)", "...");
//   - forms listed in the lexicon stay whole ("dr.", "d.o.o.");
//   - a final period stays attached when the rest of the chunk matches a
//     `keepdot` element of the rule set ("15.", "XIV.", "2023.");
//   - a closing bracket stays when the chunk's brackets balance ("printf()");
//   - a closing quote stays after a digit ("45°20'").
// Runs of split-off periods form one token ("...").
class Tokenizer {
 public:
  Tokenizer() = default;
  Tokenizer(const Lexicon& lex, const RuleSet& rules);
  static const Tokenizer& builtin();

  std::vector<Token> tokenize(std::string_view text) const;

 private:
  bool is_protected(std::string_view s) const;
  bool keeps_period(std::string_view stem) const;
  void split_chunk(std::string_view text, std::size_t begin, std::size_t end, std::vector<Token>& out) const;

  std::unordered_set<std::string> exact_;
  std::unordered_set<std::string> folded_;
  const RuleSet* rules_ = nullptr;
};

// Tokenizes with the built-in lexicon and rules.
std::vector<Token> tokenize(std::string_view text);

}  // namespace nswcat
