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

#include "nswcat/taxonomy.hpp"

#include <charconv>
#include <map>

#include "nswcat/builtin_data.hpp"
#include "nswcat/error.hpp"
#include "nswcat/text_io.hpp"

namespace nswcat {

std::string_view superclass_name(Superclass s) {
  switch (s) {
    case Superclass::kString: return "STRING";
    case Superclass::kNumber: return "NUMBER";
    case Superclass::kCombined: return "COMBINED";
  }
  return "?";
}

std::optional<Superclass> parse_superclass(std::string_view name) {
  if (name == "STRING") return Superclass::kString;
  if (name == "NUMBER") return Superclass::kNumber;
  if (name == "COMBINED") return Superclass::kCombined;
  return std::nullopt;
}

std::optional<std::size_t> group_index(std::string_view name) {
  for (std::size_t i = 0; i < kGroupNames.size(); ++i)
    if (kGroupNames[i] == name) return i;
  return std::nullopt;
}

namespace {

Superclass expected_superclass(std::size_t id) {
  if (id < kNumberBase) return Superclass::kString;
  if (id < kCombinedBase) return Superclass::kNumber;
  return Superclass::kCombined;
}

}  // namespace

Taxonomy Taxonomy::parse(std::string_view text, const std::string& origin) {
  auto fail = [&](std::size_t line, const std::string& why) -> void {
    throw ConfigError(origin + ":" + std::to_string(line) + ": " + why);
  };

  std::map<std::size_t, NswType> by_id;
  std::map<std::string, std::size_t, std::less<>> names;
  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = lines[i];
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    if (fields.size() < 3 || fields.size() > 4) fail(lineno, "expected id, name, superclass[, groups]");

    NswType t;
    const auto id_field = trim(fields[0]);
    auto [ptr, ec] = std::from_chars(id_field.data(), id_field.data() + id_field.size(), t.id);
    if (ec != std::errc() || ptr != id_field.data() + id_field.size()) fail(lineno, "bad id '" + std::string(id_field) + "'");
    t.name = std::string(trim(fields[1]));
    if (t.name.empty()) fail(lineno, "empty leaf name");
    auto sc = parse_superclass(trim(fields[2]));
    if (!sc) fail(lineno, "unknown superclass '" + std::string(fields[2]) + "'");
    t.superclass = *sc;
    if (fields.size() == 4 && !trim(fields[3]).empty()) {
      for (auto g : split(trim(fields[3]), ',')) {
        auto gi = group_index(trim(g));
        if (!gi) fail(lineno, "unknown group '" + std::string(g) + "'");
        t.groups.push_back(*gi);
      }
    }

    if (auto it = names.find(t.name); it != names.end())
      fail(lineno, "duplicate leaf name '" + t.name + "' (first defined with id " + std::to_string(it->second) + ")");
    if (by_id.count(t.id)) fail(lineno, "duplicate leaf id " + std::to_string(t.id));
    if (t.id >= kLeafCount) fail(lineno, "leaf id " + std::to_string(t.id) + " out of range 0.." + std::to_string(kLeafCount - 1));
    if (t.superclass != expected_superclass(t.id))
      fail(lineno, "leaf id " + std::to_string(t.id) + " must be " + std::string(superclass_name(expected_superclass(t.id))) +
                       " (ids are laid out STRING 0-14, NUMBER 15-35, COMBINED 36-55)");
    names.emplace(t.name, t.id);
    by_id.emplace(t.id, std::move(t));
  }

  for (std::size_t id = 0; id < kLeafCount; ++id) {
    if (!by_id.count(id))
      throw ConfigError(origin + ": missing leaf id " + std::to_string(id) + " (a " +
                        std::string(superclass_name(expected_superclass(id))) + " slot); taxonomy needs exactly " +
                        std::to_string(kLeafCount) + " leaves");
  }

  Taxonomy tax;
  for (auto& [id, t] : by_id) {
    for (auto g : t.groups) tax.group_members_[g].push_back(id);
    tax.leaves_.push_back(std::move(t));
  }
  for (std::size_t g = 0; g < kGroupCount; ++g)
    if (tax.group_members_[g].empty())
      throw ConfigError(origin + ": derived group '" + std::string(kGroupNames[g]) + "' has no member leaves");
  return tax;
}

Taxonomy Taxonomy::load(const std::filesystem::path& path) { return parse(read_file(path), path.string()); }

const Taxonomy& Taxonomy::builtin() {
  static const Taxonomy tax = parse(builtin::kTaxonomyTsv, "builtin:taxonomy.tsv");
  return tax;
}

std::optional<std::size_t> Taxonomy::find(std::string_view name) const {
  for (const auto& t : leaves_)
    if (t.name == name) return t.id;
  return std::nullopt;
}

}  // namespace nswcat
