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
#include <unordered_map>
#include <vector>

#include "nswcat/taxonomy.hpp"

namespace nswcat {

// Lexicon entries compete with rules; these are their fixed priorities.
// COMBINED entries outrank NUMBER rules, STRING entries sit below them.
inline constexpr int kLexiconStringPriority = 50;
inline constexpr int kLexiconCombinedPriority = 280;

// Longest NSW the lexer will consider, in tokens.
inline constexpr std::size_t kMaxWindow = 6;

struct LexiconEntry {
  std::string surface;
  std::vector<std::string> parts;  // surface split on spaces; one per token
  std::size_t type = 0;
  bool case_insensitive = false;
  std::size_t line = 0;

  int priority(const Taxonomy& tax) const;
  bool part_matches(std::size_t i, std::string_view token) const;
};

// Lookup dictionary: surface form -> taxonomy leaf.
class Lexicon {
 public:
  // Parses `surface<TAB>type_name[<TAB>ci]`; '#' starts a comment line.
  static Lexicon parse(std::string_view text, const Taxonomy& tax, const std::string& origin = "<lexicon>");
  static Lexicon load(const std::filesystem::path& path, const Taxonomy& tax);
  static const Lexicon& builtin();

  const std::vector<LexiconEntry>& entries() const noexcept { return entries_; }
  bool empty() const noexcept { return entries_.empty(); }

  // Entries whose first part can match `token`, in file order.
  std::vector<std::size_t> candidates(std::string_view token) const;

  // Forms the tokenizer must not split (every part of every entry).
  std::vector<std::string> protected_forms() const;
  std::vector<std::string> protected_forms_ci() const;

 private:
  std::vector<LexiconEntry> entries_;
  std::unordered_map<std::string, std::vector<std::size_t>> exact_index_;
  std::unordered_map<std::string, std::vector<std::size_t>> folded_index_;
};

}  // namespace nswcat
