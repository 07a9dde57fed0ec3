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

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "golden.hpp"
#include "nswcat/corpus.hpp"
#include "nswcat/error.hpp"
#include "nswcat/text_io.hpp"

using namespace nswcat;
namespace fs = std::filesystem;

namespace {

void put(const fs::path& root, const std::string& rel, std::string_view text) {
  fs::create_directories((root / rel).parent_path());
  write_file(root / rel, text);
}

LabeledDocument doc(std::string label, std::size_t tokens) {
  LabeledDocument d;
  d.id = label + "/x.txt";
  d.label = std::move(label);
  d.token_count = tokens;
  return d;
}

}  // namespace

TEST_CASE("one category with one document") {
  testing::TempDir dir("corpus1");
  put(dir.path(), "vijesti/a.txt", "Danas je 5. svibnja.");
  const auto c = load_corpus(dir.path());
  REQUIRE(c.documents.size() == 1);
  CHECK(c.categories == std::vector<std::string>{"vijesti"});
  CHECK(c.documents[0].id == "vijesti/a.txt");
  CHECK(c.documents[0].label == "vijesti");
  CHECK(c.documents[0].token_count == 5);
  CHECK(c.skipped.empty());
}

TEST_CASE("ids are sorted and only .txt files count") {
  testing::TempDir dir("corpus2");
  put(dir.path(), "b/z.txt", "z");
  put(dir.path(), "b/a.txt", "a");
  put(dir.path(), "a/m.txt", "m");
  put(dir.path(), "a/notes.md", "ignored");
  put(dir.path(), "a/.hidden.txt", "ignored");
  put(dir.path(), ".git/x.txt", "ignored");
  const auto c = load_corpus(dir.path(), Tokenizer::builtin(), 3);
  std::vector<std::string> ids;
  for (const auto& d : c.documents) ids.push_back(d.id);
  CHECK(ids == std::vector<std::string>{"a/m.txt", "b/a.txt", "b/z.txt"});
  CHECK(c.categories == std::vector<std::string>{"a", "b"});
}

TEST_CASE("the golden fixture loads as six categories of five") {
  const auto c = load_corpus(testing::fixture_dir() / "golden");
  CHECK(c.documents.size() == 30);
  CHECK(c.categories.size() == 6);
  for (const auto& cat : c.categories)
    CHECK(std::count_if(c.documents.begin(), c.documents.end(), [&](const auto& d) { return d.label == cat; }) == 5);
}

TEST_CASE("load errors") {
  testing::TempDir dir("corpus3");
  CHECK_THROWS_AS(load_corpus(dir.path() / "missing"), ConfigError);
  CHECK_THROWS_AS(load_corpus(dir.path()), ConfigError);  // no categories

  put(dir.path(), "full/a.txt", "tekst");
  fs::create_directories(dir.path() / "prazno");
  try {
    load_corpus(dir.path());
    FAIL("expected DataError");
  } catch (const DataError& e) {
    CHECK(std::string(e.what()).find("prazno") != std::string::npos);
  }
}

TEST_CASE("non-UTF-8 files are skipped and reported") {
  testing::TempDir dir("corpus4");
  put(dir.path(), "c/good.txt", "dobro");
  put(dir.path(), "c/bad.txt", std::string("lo\xC5\x01se", 6));
  const auto c = load_corpus(dir.path());
  REQUIRE(c.documents.size() == 1);
  REQUIRE(c.skipped.size() == 1);
  CHECK(c.skipped[0].path == "c/bad.txt");
  CHECK(c.skipped[0].message.find("invalid UTF-8 at byte 2") != std::string::npos);

  // A category whose only file is unreadable is a data error.
  put(dir.path(), "d/bad.txt", "\xFF");
  CHECK_THROWS_AS(load_corpus(dir.path()), DataError);
}

TEST_CASE("corpus statistics") {
  const std::vector<LabeledDocument> docs = {doc("official", 200000), doc("literature", 789555),
                                             doc("official", 128322)};
  const std::vector<std::uint64_t> nsws = {50000, 18150, 31667};
  const auto s = corpus_stats(docs, nsws);
  REQUIRE(s.per_class.size() == 2);
  CHECK(s.per_class[0].category == "official");
  CHECK(s.per_class[0].tokens == 328322);
  CHECK(s.per_class[0].nsws == 81667);
  CHECK(s.overall.tokens == 328322 + 789555);
  CHECK_FALSE(s.has_warning());
  const auto tsv = format_stats_tsv(s);
  CHECK(tsv ==
        "category\ttokens\tnsws\tnsw_percent\n"
        "official\t328322\t81667\t24.87\n"
        "literature\t789555\t18150\t2.30\n"
        "OVERALL\t1117877\t99817\t8.93\n");
}

TEST_CASE("zero-token category reports 0 and a warning") {
  const std::vector<LabeledDocument> docs = {doc("a", 0), doc("b", 10)};
  const std::vector<std::uint64_t> nsws = {0, 1};
  const auto s = corpus_stats(docs, nsws);
  CHECK(s.per_class[0].zero_tokens);
  CHECK(s.per_class[0].nsw_percent == 0.0);
  CHECK(s.has_warning());
  CHECK(s.overall.nsw_percent == doctest::Approx(10.0));
  CHECK_THROWS_AS(corpus_stats(docs, std::vector<std::uint64_t>{1}), DataError);
}

TEST_CASE("percent matches an exact rational computation") {
  // 100 * n / t rounded half-up at two decimals, in integers.
  for (std::uint64_t t : {7u, 13u, 1000u, 216068u}) {
    for (std::uint64_t n = 0; n <= t; n += std::max<std::uint64_t>(1, t / 97)) {
      const std::vector<LabeledDocument> docs = {doc("x", t)};
      const std::vector<std::uint64_t> counts = {n};
      const auto got = format_fixed(corpus_stats(docs, counts).overall.nsw_percent, 2);
      const auto scaled = (n * 20000 / t + 1) / 2;  // hundredths, rounded half-up
      const std::string want = std::to_string(scaled / 100) + "." + (scaled % 100 < 10 ? "0" : "") +
                               std::to_string(scaled % 100);
      INFO(n << "/" << t);
      CHECK(got == want);
    }
  }
}
