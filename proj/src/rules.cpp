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

#include "nswcat/rules.hpp"

#include <charconv>
#include <map>

#include "nswcat/builtin_data.hpp"
#include "nswcat/error.hpp"
#include "nswcat/lexicon.hpp"
#include "nswcat/text_io.hpp"
#include "nswcat/utf8.hpp"

namespace nswcat {

bool WordList::contains(std::string_view token) const {
  return words.count(case_insensitive ? utf8::to_lower(token) : std::string(token)) > 0;
}

namespace {

class RuleParser {
 public:
  RuleParser(std::vector<TokenPattern>& patterns, std::vector<WordList>& lists, std::string origin)
      : patterns_(patterns), lists_(lists), origin_(std::move(origin)) {}

  [[noreturn]] void fail(std::size_t line, const std::string& why) const {
    throw ConfigError(origin_ + ":" + std::to_string(line) + ": " + why);
  }

  void add_words(std::size_t line, std::string_view name, std::string_view flag, std::string_view words) {
    if (flag != "cs" && flag != "ci") fail(line, "list flag must be 'cs' or 'ci'");
    const bool ci = flag == "ci";
    auto [it, inserted] = list_index_.emplace(std::string(name), lists_.size());
    if (inserted) {
      lists_.push_back(WordList{std::string(name), ci, {}});
    } else if (lists_[it->second].case_insensitive != ci) {
      fail(line, "list '" + std::string(name) + "' redeclared with a different case flag");
    }
    auto& list = lists_[it->second];
    for (auto w : split(words, ' '))
      if (!w.empty()) list.words.insert(ci ? utf8::to_lower(w) : std::string(w));
  }

  RuleElement element(std::size_t line, std::string_view raw) {
    RuleElement el;
    std::size_t begin = 0;
    while (true) {
      const auto sep = raw.find("&&", begin);
      el.conditions.push_back(condition(line, raw.substr(begin, sep == std::string_view::npos ? sep : sep - begin)));
      if (sep == std::string_view::npos) break;
      begin = sep + 2;
    }
    return el;
  }

 private:
  Condition condition(std::size_t line, std::string_view raw) {
    Condition c;
    if (!raw.empty() && raw.front() == '!') {
      c.negated = true;
      raw.remove_prefix(1);
    }
    if (raw.size() <= 3) fail(line, "bad rule element '" + std::string(raw) + "'");
    const auto prefix = raw.substr(0, 3);
    const auto body = raw.substr(3);
    if (prefix == "re:") {
      auto it = pattern_index_.find(body);
      if (it == pattern_index_.end()) {
        try {
          patterns_.push_back(TokenPattern::compile(body));
        } catch (const ConfigError& e) {
          fail(line, e.what());
        }
        it = pattern_index_.emplace(std::string(body), patterns_.size() - 1).first;
      }
      c.kind = Condition::Kind::kPattern;
      c.index = it->second;
    } else if (prefix == "in:") {
      auto it = list_index_.find(body);
      if (it == list_index_.end()) fail(line, "unknown word list '" + std::string(body) + "'");
      c.kind = Condition::Kind::kList;
      c.index = it->second;
    } else if (prefix == "is:") {
      c.kind = Condition::Kind::kLiteral;
      c.literal = std::string(body);
    } else {
      fail(line, "bad rule element '" + std::string(raw) + "' (want re:, in: or is:)");
    }
    return c;
  }

  std::vector<TokenPattern>& patterns_;
  std::vector<WordList>& lists_;
  std::string origin_;
  std::map<std::string, std::size_t, std::less<>> list_index_;
  std::map<std::string, std::size_t, std::less<>> pattern_index_;
};

}  // namespace

RuleSet RuleSet::parse(std::string_view text, const Taxonomy& tax, const std::string& origin) {
  RuleSet rs;
  RuleParser parser(rs.patterns_, rs.lists_, origin);

  struct Pending {
    std::size_t line;
    bool keepdot;
    Rule rule;
    std::vector<std::string_view> elements;
  };
  std::vector<Pending> pending;

  const auto lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t lineno = i + 1;
    const auto line = lines[i];
    if (trim(line).empty() || line.front() == '#') continue;
    const auto fields = split(line, '\t');
    const auto directive = trim(fields[0]);

    if (directive == "list") {
      if (fields.size() != 4) parser.fail(lineno, "expected list<TAB>name<TAB>cs|ci<TAB>words");
      parser.add_words(lineno, trim(fields[1]), trim(fields[2]), trim(fields[3]));
    } else if (directive == "keepdot") {
      if (fields.size() != 2) parser.fail(lineno, "expected keepdot<TAB>element");
      pending.push_back(Pending{lineno, true, {}, {trim(fields[1])}});
    } else if (directive == "rule") {
      if (fields.size() < 4) parser.fail(lineno, "expected rule<TAB>type<TAB>priority<TAB>element...");
      Pending p{lineno, false, {}, {}};
      p.rule.line = lineno;
      const auto type_name = trim(fields[1]);
      auto type = tax.find(type_name);
      if (!type) parser.fail(lineno, "unknown NSW type '" + std::string(type_name) + "'");
      p.rule.type = *type;
      const auto prio = trim(fields[2]);
      auto [ptr, ec] = std::from_chars(prio.data(), prio.data() + prio.size(), p.rule.priority);
      if (ec != std::errc() || ptr != prio.data() + prio.size())
        parser.fail(lineno, "bad priority '" + std::string(prio) + "'");
      for (std::size_t f = 3; f < fields.size(); ++f) p.elements.push_back(fields[f]);
      if (p.elements.size() > kMaxWindow)
        parser.fail(lineno, "rule spans more than " + std::to_string(kMaxWindow) + " tokens");
      pending.push_back(std::move(p));
    } else {
      parser.fail(lineno, "unknown directive '" + std::string(directive) + "'");
    }
  }

  // Elements are resolved after every list is known, so lists may follow rules.
  for (auto& p : pending) {
    if (p.keepdot) {
      rs.keep_period_.push_back(parser.element(p.line, p.elements.front()));
      continue;
    }
    for (auto raw : p.elements) p.rule.elements.push_back(parser.element(p.line, raw));
    rs.rules_.push_back(std::move(p.rule));
  }
  return rs;
}

RuleSet RuleSet::load(const std::filesystem::path& path, const Taxonomy& tax) {
  return parse(read_file(path), tax, path.string());
}

const RuleSet& RuleSet::builtin() {
  static const RuleSet rs = parse(builtin::kRulesTsv, Taxonomy::builtin(), "builtin:rules.tsv");
  return rs;
}

bool RuleSet::condition_holds(const Condition& c, std::string_view token) const {
  bool hit = false;
  switch (c.kind) {
    case Condition::Kind::kPattern: hit = patterns_[c.index].matches(token); break;
    case Condition::Kind::kList: hit = lists_[c.index].contains(token); break;
    case Condition::Kind::kLiteral: hit = c.literal == token; break;
  }
  return hit != c.negated;
}

bool RuleSet::element_matches(const RuleElement& e, std::string_view token) const {
  for (const auto& c : e.conditions)
    if (!condition_holds(c, token)) return false;
  return true;
}

std::vector<std::size_t> RuleSet::coverage_gaps(const Taxonomy& tax, const Lexicon& lex) const {
  std::vector<bool> covered(tax.size(), false);
  for (const auto& r : rules_) covered[r.type] = true;
  for (const auto& e : lex.entries()) covered[e.type] = true;
  std::vector<std::size_t> gaps;
  for (const auto& leaf : tax.leaves())
    if (leaf.superclass != Superclass::kString && !covered[leaf.id]) gaps.push_back(leaf.id);
  return gaps;
}

}  // namespace nswcat
