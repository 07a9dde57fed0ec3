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

#include <random>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "golden.hpp"
#include "nswcat/lexer.hpp"

using namespace nswcat;

namespace {

std::string name_of(std::size_t type) { return Taxonomy::builtin().leaf(type).name; }

struct Classified {
  std::string type;
  std::size_t consumed = 0;
};

std::optional<Classified> classify(std::string_view text) {
  const auto tokens = tokenize(text);
  auto m = classify_token(tokens, 0, Lexicon::builtin(), RuleSet::builtin());
  if (!m) return std::nullopt;
  return Classified{name_of(m->type), m->consumed};
}

std::vector<std::string> types_in(std::string_view text) {
  std::vector<std::string> out;
  for (const auto& o : NswLexer::builtin().extract("doc", text)) out.push_back(name_of(o.type));
  return out;
}

}  // namespace

TEST_CASE("single-token examples") {
  CHECK(classify("dr.")->type == "abbrev_simple");
  CHECK(classify("SMS")->type == "acronym");
  CHECK_FALSE(classify("walked").has_value());
  CHECK_FALSE(classify("kuća").has_value());
  CHECK(classify("2,5")->type == "decimal_positive");
  CHECK(classify("-2,5")->type == "decimal_negative");
  CHECK(classify("XIV.")->type == "roman_ordinal");
  CHECK(classify("HNK-a")->type == "acronym_inflected");
}

TEST_CASE("multi-token matches consume the whole window") {
  const auto date = classify("15. 10. 2023.");
  REQUIRE(date.has_value());
  CHECK(date->type == "date_numeric");
  CHECK(date->consumed == 3);
  const auto vit = classify("vitamin C");
  REQUIRE(vit.has_value());
  CHECK(vit->type == "vitamin");
  CHECK(vit->consumed == 2);
}

TEST_CASE("documents without NSWs") {
  CHECK(types_in("").empty());
  CHECK(types_in("Ovo je sasvim obična rečenica bez ičega posebnog.").empty());
}

TEST_CASE("golden corpus is recovered exactly") {
  const auto docs = testing::load_annotated(testing::fixture_dir() / "golden_ann");
  REQUIRE(docs.size() == 30);
  std::set<std::string> seen;
  std::size_t expected_total = 0;
  std::size_t matched = 0;
  for (const auto& doc : docs) {
    using Key = std::tuple<std::size_t, std::size_t, std::string>;
    std::set<Key> expected;
    for (const auto& a : doc.annotations) {
      expected.emplace(a.begin, a.end, a.type);
      seen.insert(a.type);
    }
    std::set<Key> got;
    for (const auto& o : NswLexer::builtin().extract(doc.id, doc.text)) {
      CHECK(o.surface == doc.text.substr(o.begin, o.end - o.begin));
      got.emplace(o.begin, o.end, name_of(o.type));
    }
    INFO("document " << doc.id);
    CHECK(got == expected);
    expected_total += expected.size();
    for (const auto& k : got) matched += expected.count(k);
  }
  CHECK(matched == expected_total);
  CHECK(seen.size() == kLeafCount);
}

TEST_CASE("occurrences never overlap and move forward") {
  const std::vector<std::string> pieces = {"dr.", "15.", "10.", "2020.", "NN", "76/1993", "kg", "5", "€", "XIV.",
                                           "vitamin", "C", "riječ", "kuća", "3:1", "10:00", "-", "12", "d.o.o.",
                                           ",", "(", ")", "GP", "HRT2", "km/h", "1/2"};
  std::mt19937_64 rng(5);
  for (int round = 0; round < 500; ++round) {
    std::string text;
    for (int i = 0; i < 30; ++i) text += pieces[rng() % pieces.size()] + " ";
    const auto occ = NswLexer::builtin().extract("doc", text);
    std::size_t prev_end = 0;
    for (const auto& o : occ) {
      REQUIRE(o.begin >= prev_end);
      REQUIRE(o.end > o.begin);
      prev_end = o.end;
    }
  }
}

TEST_CASE("a custom lexicon replaces the shipped one") {
  const auto& tax = Taxonomy::builtin();
  const auto lex = Lexicon::parse("kuća\tsymbol\n", tax);
  const NswLexer lexer(tax, lex, RuleSet::builtin());
  const auto occ = lexer.extract("doc", "Velika kuća, dr. Ivić");
  REQUIRE(occ.size() == 1);
  CHECK(name_of(occ[0].type) == "symbol");
  CHECK(occ[0].surface == "kuća");
}

TEST_CASE("format_occurrences is sorted and tab separated") {
  const auto occ = NswLexer::builtin().extract("b.txt", "Cijena je 5 kg.");
  auto more = NswLexer::builtin().extract("a.txt", "SMS");
  more.insert(more.end(), occ.begin(), occ.end());
  const auto out = format_occurrences(more, Taxonomy::builtin());
  CHECK(out.starts_with("a.txt\t"));
  CHECK(out.find("\tSMS\n") != std::string::npos);
}
