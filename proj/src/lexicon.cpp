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

#include "nswcat/lexicon.hpp"

#include <algorithm>
#include <unordered_set>

#include "nswcat/builtin_data.hpp"
#include "nswcat/error.hpp"
#include "nswcat/text_io.hpp"
#include "nswcat/utf8.hpp"

namespace nswcat {

int LexiconEntry::priority(const Taxonomy& tax) const {
  return tax.leaf(type).superclass == Superclass::kCombined ? kLexiconCombinedPriority : kLexiconStringPriority;
}

bool LexiconEntry::part_matches(std::size_t i, std::string_view token) const {
  if (!case_insensitive) return parts[i] == token;
  return parts[i] == utf8::to_lower(token);
}

Lexicon Lexicon::parse(std::string_view text, const Taxonomy& tax, const std::string& origin) {
  auto fail = [&](std::size_t line, const std::string& why) {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + why);
  };

  Lexicon lex;
  std::unordered_set<std::string> seen;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = lines[i];
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 2 || fields.size() > 3) fail(lineno, "expected surface<TAB>type[<TAB>ci]");

    LexiconEntry e;
    e.line = lineno;
    e.surface = std::string(trim(fields[0]));
    if (e.surface.empty()) fail(lineno, "empty surface form");
    const auto type_name = trim(fields[1]);
    auto type = tax.find(type_name);
    if (!type) fail(lineno, "unknown NSW type '" + std::string(type_name) + "'");
    e.type = *type;
    if (tax.leaf(e.type).superclass == Superclass::kNumber)
      fail(lineno, "lexicon entries must be STRING or COMBINED leaves, '" + std::string(type_name) + "' is NUMBER");
    if (fields.size() == 3) {
      const auto flag = trim(fields[2]);
      if (flag == "ci") {
        e.case_insensitive = true;
      } else if (!flag.empty()) {
        fail(lineno, "unknown flag '" + std::string(flag) + "' (only 'ci' is allowed)");
      }
    }
    if (!seen.insert(e.surface).second) fail(lineno, "duplicate surface form '" + e.surface + "'");

    for (auto p : split(e.surface, ' '))
      if (!p.empty()) e.parts.emplace_back(e.case_insensitive ? utf8::to_lower(p) : std::string(p));
    if (e.parts.size() > kMaxWindow) fail(lineno, "entry spans more than " + std::to_string(kMaxWindow) + " tokens");

    const std::size_t idx = lex.entries_.size();
    (e.case_insensitive ? lex.folded_index_ : lex.exact_index_)[e.parts.front()].push_back(idx);
    lex.entries_.push_back(std::move(e));
  }
  return lex;
}

Lexicon Lexicon::load(const std::filesystem::path& path, const Taxonomy& tax) {
  return parse(read_file(path), tax, path.string());
}

const Lexicon& Lexicon::builtin() {
  static const Lexicon lex = parse(builtin::kLexiconTsv, Taxonomy::builtin(), "builtin:lexicon.tsv");
  return lex;
}

std::vector<std::size_t> Lexicon::candidates(std::string_view token) const {
  std::vector<std::size_t> out;
  if (auto it = exact_index_.find(std::string(token)); it != exact_index_.end()) out = it->second;
  if (!folded_index_.empty()) {
    if (auto it = folded_index_.find(utf8::to_lower(token)); it != folded_index_.end())
      out.insert(out.end(), it->second.begin(), it->second.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Lexicon::protected_forms() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (!e.case_insensitive) out.insert(out.end(), e.parts.begin(), e.parts.end());
  return out;
}

std::vector<std::string> Lexicon::protected_forms_ci() const {
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.case_insensitive) out.insert(out.end(), e.parts.begin(), e.parts.end());
  return out;
}

}  // namespace nswcat
