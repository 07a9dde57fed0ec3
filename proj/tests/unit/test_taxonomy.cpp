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

#include <doctest.h>

#include <string>

#include "nswcat/builtin_data.hpp"
#include "nswcat/error.hpp"
#include "nswcat/lexicon.hpp"
#include "nswcat/rules.hpp"
#include "nswcat/taxonomy.hpp"
#include "nswcat/text_io.hpp"

using namespace nswcat;

namespace {

std::string error_of(auto&& fn) {
  try {
    fn();
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

// The shipped manifest with every line for which `drop(line)` holds removed.
std::string manifest_without(auto&& drop) {
  std::string out;
  for (auto line : split_lines(builtin::kTaxonomyTsv))
    if (!drop(line)) out.append(line).append("\n");
  return out;
}

}  // namespace

TEST_CASE("shipped taxonomy has 56 leaves split 15/21/20") {
  const auto& tax = Taxonomy::builtin();
  REQUIRE(tax.size() == 56);
  std::size_t counts[3] = {};
  for (const auto& leaf : tax.leaves()) ++counts[static_cast<int>(leaf.superclass)];
  CHECK(counts[0] == 15);
  CHECK(counts[1] == 21);
  CHECK(counts[2] == 20);
  for (std::size_t id = 0; id < tax.size(); ++id) CHECK(tax.leaf(id).id == id);
  CHECK(tax.find("unknown").has_value());
  CHECK(tax.leaf(*tax.find("unknown")).superclass == Superclass::kCombined);
}

TEST_CASE("every derived group has members and telephone groups the two phone leaves") {
  const auto& tax = Taxonomy::builtin();
  for (std::size_t g = 0; g < kGroupCount; ++g) CHECK_FALSE(tax.group_members()[g].empty());
  const auto& phone = tax.group_members()[*group_index("telephone")];
  REQUIRE(phone.size() == 2);
  CHECK(tax.leaf(phone[0]).name == "phone_short");
  CHECK(tax.leaf(phone[1]).name == "phone_long");
}

TEST_CASE("manifest with 55 entries names the missing slot") {
  const auto text = manifest_without([](std::string_view l) { return l.starts_with("20\t"); });
  const auto msg = error_of([&] { Taxonomy::parse(text); });
  CHECK(msg.find("missing leaf id 20") != std::string::npos);
}

TEST_CASE("manifest with a duplicated name names the duplicate") {
  std::string text(builtin::kTaxonomyTsv);
  const auto at = text.find("\tabbrev_compound\t");
  REQUIRE(at != std::string::npos);
  text.replace(at, std::string("\tabbrev_compound\t").size(), "\tabbrev_simple\t");
  const auto msg = error_of([&] { Taxonomy::parse(text); });
  CHECK(msg.find("duplicate leaf name 'abbrev_simple'") != std::string::npos);
}

TEST_CASE("manifest validation catches malformed lines") {
  CHECK_THROWS_AS(Taxonomy::parse("0\tx\tSTRANGE\n"), ConfigError);
  CHECK_THROWS_AS(Taxonomy::parse("zero\tx\tSTRING\n"), ConfigError);
  CHECK_THROWS_AS(Taxonomy::parse("0\tx\n"), ConfigError);
  CHECK_THROWS_AS(Taxonomy::parse("0\tx\tSTRING\tnot_a_group\n"), ConfigError);
  // A NUMBER leaf in a STRING slot.
  const auto text = manifest_without([](std::string_view) { return false; });
  std::string swapped(text);
  swapped.replace(swapped.find("\troman_ordinal\tSTRING"), std::string("\troman_ordinal\tSTRING").size(),
                  "\troman_ordinal\tNUMBER");
  CHECK(error_of([&] { Taxonomy::parse(swapped); }).find("must be STRING") != std::string::npos);
}

TEST_CASE("lexicon parsing") {
  const auto& tax = Taxonomy::builtin();
  SUBCASE("one entry") {
    const auto lex = Lexicon::parse("dr.\tabbrev_simple\n", tax);
    REQUIRE(lex.entries().size() == 1);
    CHECK(lex.entries()[0].surface == "dr.");
    CHECK(tax.leaf(lex.entries()[0].type).name == "abbrev_simple");
  }
  SUBCASE("empty file is an empty lexicon") { CHECK(Lexicon::parse("", tax).empty()); }
  SUBCASE("unknown type cites the line") {
    const auto msg = error_of([&] { Lexicon::parse("# c\ndr.\tabbrev_simple\nxyz\tno_such_type\n", tax); });
    CHECK(msg.find(":3:") != std::string::npos);
    CHECK(msg.find("no_such_type") != std::string::npos);
  }
  SUBCASE("duplicate surface") {
    CHECK_THROWS_AS(Lexicon::parse("kg\tmeasurement_unit\nkg\tsymbol\n", tax), ConfigError);
  }
  SUBCASE("NUMBER leaves belong to rules") {
    CHECK_THROWS_AS(Lexicon::parse("12\tnumber_nominal\n", tax), ConfigError);
  }
  SUBCASE("case-insensitive entries match folded tokens") {
    const auto lex = Lexicon::parse("dr.\tabbrev_simple\tci\nNN\tacronym\n", tax);
    CHECK(lex.candidates("DR.").size() == 1);
    CHECK(lex.candidates("nn").empty());
    CHECK(lex.candidates("NN").size() == 1);
  }
  SUBCASE("multi-token entries split on spaces") {
    const auto lex = Lexicon::parse("Nova TV\ttv_show_label\n", tax);
    REQUIRE(lex.entries()[0].parts.size() == 2);
    CHECK(lex.entries()[0].part_matches(1, "TV"));
  }
}

TEST_CASE("rule parsing") {
  const auto& tax = Taxonomy::builtin();
  SUBCASE("lists may follow the rules that use them") {
    const auto rs = RuleSet::parse("rule\tacronym\t30\tin:x\nlist\tx\tcs\tABC DEF\n", tax);
    REQUIRE(rs.rules().size() == 1);
    CHECK(rs.element_matches(rs.rules()[0].elements[0], "DEF"));
    CHECK_FALSE(rs.element_matches(rs.rules()[0].elements[0], "def"));
  }
  SUBCASE("conjunctions and negation") {
    const auto rs = RuleSet::parse("rule\tacronym\t30\tre:\\u+&&!is:NN\n", tax);
    const auto& el = rs.rules()[0].elements[0];
    CHECK(rs.element_matches(el, "HAZU"));
    CHECK_FALSE(rs.element_matches(el, "NN"));
  }
  SUBCASE("errors carry the line") {
    CHECK(error_of([&] { RuleSet::parse("\nrule\tno_type\t1\tre:x\n", tax); }).find(":2:") != std::string::npos);
    CHECK(error_of([&] { RuleSet::parse("rule\tacronym\t1\tin:nolist\n", tax); }).find("nolist") !=
          std::string::npos);
    CHECK(error_of([&] { RuleSet::parse("rule\tacronym\tx\tre:a\n", tax); }).find("priority") != std::string::npos);
    CHECK(error_of([&] { RuleSet::parse("rule\tacronym\t1\tre:(a\n", tax); }).find(":1:") != std::string::npos);
    CHECK_THROWS_AS(RuleSet::parse("frobnicate\tx\n", tax), ConfigError);
    CHECK_THROWS_AS(RuleSet::parse("rule\tacronym\t1\tre:a\tre:a\tre:a\tre:a\tre:a\tre:a\tre:a\n", tax), ConfigError);
  }
}

TEST_CASE("coverage self-test: every NUMBER and COMBINED leaf has a rule or lexicon entry") {
  const auto gaps = RuleSet::builtin().coverage_gaps(Taxonomy::builtin(), Lexicon::builtin());
  for (auto id : gaps) FAIL("uncovered leaf " << Taxonomy::builtin().leaf(id).name);
  CHECK(gaps.empty());
}

TEST_CASE("coverage self-test reports a leaf whose rules are removed") {
  std::string rules;
  for (auto line : split_lines(builtin::kRulesTsv))
    if (!line.starts_with("rule\tvitamin\t")) rules.append(line).append("\n");
  const auto rs = RuleSet::parse(rules, Taxonomy::builtin());
  const auto gaps = rs.coverage_gaps(Taxonomy::builtin(), Lexicon::builtin());
  REQUIRE(gaps.size() == 1);
  CHECK(Taxonomy::builtin().leaf(gaps[0]).name == "vitamin");
}
