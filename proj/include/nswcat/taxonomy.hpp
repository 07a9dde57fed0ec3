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

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace nswcat {

enum class Superclass { kString, kNumber, kCombined };

std::string_view superclass_name(Superclass s);
std::optional<Superclass> parse_superclass(std::string_view name);

inline constexpr std::size_t kStringLeaves = 15;
inline constexpr std::size_t kNumberLeaves = 21;
inline constexpr std::size_t kCombinedLeaves = 20;
inline constexpr std::size_t kLeafCount = kStringLeaves + kNumberLeaves + kCombinedLeaves;

// First id of each superclass block; leaf ids are laid out STRING, NUMBER, COMBINED.
inline constexpr std::size_t kNumberBase = kStringLeaves;
inline constexpr std::size_t kCombinedBase = kStringLeaves + kNumberLeaves;

// The cross-leaf totals that close the derived feature block, in slot order.
inline constexpr std::size_t kGroupCount = 19;
inline constexpr std::array<std::string_view, kGroupCount> kGroupNames = {
    "full_date",      "incomplete_date", "references",       "numeration",
    "telephone",      "range",           "decimal",          "fraction",
    "road",           "electronic",      "ordinal",          "nominal",
    "roman",          "abbreviation",    "measurement_unit", "acronym",
    "office",         "formula",         "jargon"};

std::optional<std::size_t> group_index(std::string_view name);

struct NswType {
  std::size_t id = 0;
  std::string name;
  Superclass superclass = Superclass::kString;
  std::vector<std::size_t> groups;  // indices into kGroupNames
};

// The validated 56-leaf taxonomy. Leaves are indexed by id.
class Taxonomy {
 public:
  // Parses `id<TAB>name<TAB>superclass[<TAB>group,group...]`; '#' starts a comment line.
  static Taxonomy parse(std::string_view text, const std::string& origin = "<taxonomy>");
  static Taxonomy load(const std::filesystem::path& path);
  // The manifest shipped in data/taxonomy.tsv, compiled into the library.
  static const Taxonomy& builtin();

  const std::vector<NswType>& leaves() const noexcept { return leaves_; }
  const NswType& leaf(std::size_t id) const { return leaves_.at(id); }
  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t size() const noexcept { return leaves_.size(); }

  // Leaf ids belonging to each derived group.
  const std::array<std::vector<std::size_t>, kGroupCount>& group_members() const noexcept {
    return group_members_;
  }

 private:
  std::vector<NswType> leaves_;
  std::array<std::vector<std::size_t>, kGroupCount> group_members_;
};

}  // namespace nswcat
