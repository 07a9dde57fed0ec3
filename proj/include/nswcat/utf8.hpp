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
#include <optional>
#include <string>
#include <string_view>

namespace nswcat::utf8 {

// Decoded code point plus the number of bytes it occupied.
struct Decoded {
  char32_t cp;
  std::size_t length;
};

// Strict decoding: rejects overlong forms, surrogates and values above U+10FFFF.
std::optional<Decoded> decode(std::string_view s, std::size_t pos);

// Byte offset of the first invalid sequence, or nullopt when `s` is valid UTF-8.
std::optional<std::size_t> first_invalid(std::string_view s);

void append(std::string& out, char32_t cp);

// Coarse character classes for the Latin, Greek and Cyrillic blocks; enough
// for the languages the rule data targets.
bool is_upper(char32_t cp);
bool is_lower(char32_t cp);
inline bool is_letter(char32_t cp) { return is_upper(cp) || is_lower(cp); }
inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }
bool is_space(char32_t cp);

char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view s);

}  // namespace nswcat::utf8
