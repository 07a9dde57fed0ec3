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

#include "nswcat/pattern.hpp"

#include <memory>

#include "nswcat/error.hpp"
#include "nswcat/utf8.hpp"

namespace nswcat {

bool TokenPattern::CharSet::contains(char32_t cp) const {
  bool hit = (classes & kAny) != 0;
  if (!hit && (classes & kDigit)) hit = utf8::is_digit(cp);
  if (!hit && (classes & kUpper)) hit = utf8::is_upper(cp);
  if (!hit && (classes & kLower)) hit = utf8::is_lower(cp);
  for (std::size_t i = 0; !hit && i < ranges.size(); ++i)
    hit = cp >= ranges[i].first && cp <= ranges[i].second;
  return hit != negated;
}

namespace {

constexpr int kMaxRepeat = 32;

struct Node {
  enum class Kind { kEmpty, kSet, kConcat, kAlt, kRepeat };
  Kind kind = Kind::kEmpty;
  int set = -1;
  int min = 0;
  int max = 0;  // -1: unbounded
  std::vector<std::unique_ptr<Node>> children;
};

}  // namespace

class PatternCompiler {
 public:
  explicit PatternCompiler(std::string_view src) : src_(src) {
    std::size_t pos = 0;
    while (pos < src.size()) {
      auto d = utf8::decode(src, pos);
      if (!d) fail("invalid UTF-8 in pattern");
      cps_.push_back(d->cp);
      pos += d->length;
    }
  }

  TokenPattern compile() {
    out_.source_ = std::string(src_);
    auto root = parse_alt();
    if (pos_ != cps_.size()) fail("unbalanced ')'");
    auto frag = emit(*root);
    const int match = add_state(TokenPattern::State::Kind::kMatch);
    patch(frag.dangling, match);
    out_.start_ = frag.start;
    return std::move(out_);
  }

 private:
  using Kind = TokenPattern::State::Kind;
  using CharSet = TokenPattern::CharSet;

  // Dangling exits: (state index, 0 for out / 1 for out2).
  struct Fragment {
    int start;
    std::vector<std::pair<int, int>> dangling;
  };

  [[noreturn]] void fail(const std::string& why) const {
    throw ConfigError("bad pattern '" + std::string(src_) + "': " + why);
  }

  bool at_end() const { return pos_ >= cps_.size(); }
  char32_t peek() const { return cps_[pos_]; }

  std::unique_ptr<Node> parse_alt() {
    auto first = parse_concat();
    if (at_end() || peek() != U'|') return first;
    auto alt = std::make_unique<Node>();
    alt->kind = Node::Kind::kAlt;
    alt->children.push_back(std::move(first));
    while (!at_end() && peek() == U'|') {
      ++pos_;
      alt->children.push_back(parse_concat());
    }
    return alt;
  }

  std::unique_ptr<Node> parse_concat() {
    auto cat = std::make_unique<Node>();
    cat->kind = Node::Kind::kConcat;
    while (!at_end() && peek() != U'|' && peek() != U')') cat->children.push_back(parse_repeat());
    return cat;
  }

  int parse_int() {
    int v = 0;
    bool any = false;
    while (!at_end() && utf8::is_digit(peek())) {
      v = v * 10 + static_cast<int>(peek() - U'0');
      if (v > kMaxRepeat) fail("repetition count too large");
      ++pos_;
      any = true;
    }
    if (!any) fail("expected a number in {}");
    return v;
  }

  std::unique_ptr<Node> parse_repeat() {
    auto atom = parse_atom();
    while (!at_end()) {
      int min = 0;
      int max = 0;
      const char32_t c = peek();
      if (c == U'*') {
        min = 0, max = -1, ++pos_;
      } else if (c == U'+') {
        min = 1, max = -1, ++pos_;
      } else if (c == U'?') {
        min = 0, max = 1, ++pos_;
      } else if (c == U'{') {
        ++pos_;
        min = parse_int();
        max = min;
        if (!at_end() && peek() == U',') {
          ++pos_;
          max = (!at_end() && peek() == U'}') ? -1 : parse_int();
        }
        if (at_end() || peek() != U'}') fail("unterminated {}");
        ++pos_;
        if (max != -1 && max < min) fail("{n,m} with m < n");
      } else {
        break;
      }
      auto rep = std::make_unique<Node>();
      rep->kind = Node::Kind::kRepeat;
      rep->min = min;
      rep->max = max;
      rep->children.push_back(std::move(atom));
      atom = std::move(rep);
    }
    return atom;
  }

  // Applies an escape letter to `set`; returns false for a plain literal escape.
  static bool apply_class(char32_t esc, CharSet& set) {
    switch (esc) {
      case U'd': set.classes |= CharSet::kDigit; return true;
      case U'u': set.classes |= CharSet::kUpper; return true;
      case U'l': set.classes |= CharSet::kLower; return true;
      case U'a': set.classes |= CharSet::kUpper | CharSet::kLower; return true;
      case U'w': set.classes |= CharSet::kUpper | CharSet::kLower | CharSet::kDigit; return true;
      default: return false;
    }
  }

  std::unique_ptr<Node> set_node(CharSet set) {
    auto n = std::make_unique<Node>();
    n->kind = Node::Kind::kSet;
    n->set = static_cast<int>(out_.sets_.size());
    out_.sets_.push_back(std::move(set));
    return n;
  }

  std::unique_ptr<Node> parse_atom() {
    const char32_t c = peek();
    ++pos_;
    CharSet set;
    switch (c) {
      case U'(': {
        auto inner = parse_alt();
        if (at_end() || peek() != U')') fail("unbalanced '('");
        ++pos_;
        return inner;
      }
      case U'*': case U'+': case U'?': case U'{':
        fail("quantifier without operand");
      case U'.':
        set.classes = CharSet::kAny;
        return set_node(std::move(set));
      case U'[':
        return set_node(parse_bracket());
      case U'\\': {
        if (at_end()) fail("dangling backslash");
        const char32_t e = peek();
        ++pos_;
        if (!apply_class(e, set)) set.ranges.emplace_back(e, e);
        return set_node(std::move(set));
      }
      default:
        set.ranges.emplace_back(c, c);
        return set_node(std::move(set));
    }
  }

  CharSet parse_bracket() {
    CharSet set;
    if (!at_end() && peek() == U'^') {
      set.negated = true;
      ++pos_;
    }
    bool first = true;
    while (true) {
      if (at_end()) fail("unterminated '['");
      char32_t c = peek();
      ++pos_;
      if (c == U']' && !first) break;
      first = false;
      if (c == U'\\') {
        if (at_end()) fail("dangling backslash");
        c = peek();
        ++pos_;
        if (apply_class(c, set)) continue;
      }
      if (pos_ + 1 < cps_.size() && peek() == U'-' && cps_[pos_ + 1] != U']') {
        ++pos_;
        char32_t hi = peek();
        ++pos_;
        if (hi == U'\\') {
          if (at_end()) fail("dangling backslash");
          hi = peek();
          ++pos_;
        }
        if (hi < c) fail("reversed range in set");
        set.ranges.emplace_back(c, hi);
      } else {
        set.ranges.emplace_back(c, c);
      }
    }
    return set;
  }

  int add_state(Kind kind, int set = -1) {
    out_.states_.push_back(TokenPattern::State{kind, set, -1, -1});
    return static_cast<int>(out_.states_.size()) - 1;
  }

  void patch(const std::vector<std::pair<int, int>>& dangling, int target) {
    for (auto [s, which] : dangling) (which == 0 ? out_.states_[s].out : out_.states_[s].out2) = target;
  }

  Fragment empty_fragment() {
    // A split whose both arms dangle behaves as an epsilon edge.
    const int s = add_state(Kind::kSplit);
    return {s, {{s, 0}, {s, 1}}};
  }

  Fragment emit(const Node& n) {
    switch (n.kind) {
      case Node::Kind::kEmpty:
        return empty_fragment();
      case Node::Kind::kSet: {
        const int s = add_state(Kind::kChar, n.set);
        return {s, {{s, 0}}};
      }
      case Node::Kind::kConcat: {
        if (n.children.empty()) return empty_fragment();
        Fragment f = emit(*n.children.front());
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          Fragment next = emit(*n.children[i]);
          patch(f.dangling, next.start);
          f.dangling = std::move(next.dangling);
        }
        return f;
      }
      case Node::Kind::kAlt: {
        Fragment f = emit(*n.children.front());
        for (std::size_t i = 1; i < n.children.size(); ++i) {
          Fragment g = emit(*n.children[i]);
          const int s = add_state(Kind::kSplit);
          out_.states_[s].out = f.start;
          out_.states_[s].out2 = g.start;
          f.start = s;
          f.dangling.insert(f.dangling.end(), g.dangling.begin(), g.dangling.end());
        }
        return f;
      }
      case Node::Kind::kRepeat:
        return emit_repeat(n);
    }
    return empty_fragment();
  }

  Fragment emit_repeat(const Node& n) {
    const Node& body = *n.children.front();
    Fragment result = empty_fragment();
    auto append = [&](Fragment next) {
      patch(result.dangling, next.start);
      result.dangling = std::move(next.dangling);
    };
    for (int i = 0; i < n.min; ++i) append(emit(body));
    if (n.max == -1) {
      Fragment loop = emit(body);
      const int s = add_state(Kind::kSplit);
      out_.states_[s].out = loop.start;
      patch(loop.dangling, s);
      append(Fragment{s, {{s, 1}}});
    } else {
      // Optional copies: each may exit early.
      std::vector<std::pair<int, int>> exits;
      for (int i = n.min; i < n.max; ++i) {
        Fragment opt = emit(body);
        const int s = add_state(Kind::kSplit);
        out_.states_[s].out = opt.start;
        exits.emplace_back(s, 1);
        append(Fragment{s, std::move(opt.dangling)});
      }
      result.dangling.insert(result.dangling.end(), exits.begin(), exits.end());
    }
    return result;
  }

  std::string_view src_;
  std::vector<char32_t> cps_;
  std::size_t pos_ = 0;
  TokenPattern out_;
};

TokenPattern TokenPattern::compile(std::string_view source) {
  if (source.empty()) throw ConfigError("empty pattern");
  return PatternCompiler(source).compile();
}

bool TokenPattern::matches(std::string_view token) const {
  const std::size_t n = states_.size();
  std::vector<int> current;
  std::vector<int> next;
  std::vector<std::size_t> mark(n, 0);
  std::size_t generation = 1;
  current.reserve(n);
  next.reserve(n);

  auto add = [&](std::vector<int>& list, int start) {
    // Iterative epsilon closure.
    std::vector<int> stack{start};
    while (!stack.empty()) {
      const int s = stack.back();
      stack.pop_back();
      if (s < 0 || mark[s] == generation) continue;
      mark[s] = generation;
      const State& st = states_[s];
      if (st.kind == State::Kind::kSplit) {
        stack.push_back(st.out2);
        stack.push_back(st.out);
      } else {
        list.push_back(s);
      }
    }
  };

  add(current, start_);
  std::size_t pos = 0;
  while (pos < token.size()) {
    auto d = utf8::decode(token, pos);
    if (!d) return false;
    pos += d->length;
    ++generation;
    next.clear();
    for (int s : current) {
      const State& st = states_[s];
      if (st.kind == State::Kind::kChar && sets_[st.set].contains(d->cp)) add(next, st.out);
    }
    if (next.empty()) return false;
    std::swap(current, next);
  }
  for (int s : current)
    if (states_[s].kind == State::Kind::kMatch) return true;
  return false;
}

}  // namespace nswcat
