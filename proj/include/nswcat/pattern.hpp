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

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace nswcat {

// Anchored pattern over the code points of a single token.
//
// Syntax (a deliberately small regex dialect):
//   \d digit   \u uppercase letter   \l lowercase letter   \a letter
//   \w letter or digit   .  any code point   \x  literal x for any other x
//   [..] set with ranges and the escapes above, [^..] negated set
//   ( ) grouping, | alternation, * + ? {n} {n,} {n,m} repetition
//
// Patterns compile to a Thompson NFA and are simulated state-set by
// state-set, so matching is linear in the token length and never backtracks.
class TokenPattern {
 public:
  static TokenPattern compile(std::string_view source);

  bool matches(std::string_view token) const;
  const std::string& source() const noexcept { return source_; }
  std::size_t state_count() const noexcept { return states_.size(); }

 private:
  struct CharSet {
    enum ClassBits : std::uint8_t { kDigit = 1, kUpper = 2, kLower = 4, kAny = 8 };
    bool negated = false;
    std::uint8_t classes = 0;
    std::vector<std::pair<char32_t, char32_t>> ranges;
    bool contains(char32_t cp) const;
  };
  struct State {
    enum class Kind : std::uint8_t { kChar, kSplit, kMatch };
    Kind kind;
    int set = -1;
    int out = -1;
    int out2 = -1;
  };

  friend class PatternCompiler;

  std::string source_;
  std::vector<CharSet> sets_;
  std::vector<State> states_;
  int start_ = -1;
};

}  // namespace nswcat
