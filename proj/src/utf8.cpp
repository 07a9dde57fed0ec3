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

#include "nswcat/utf8.hpp"

namespace nswcat::utf8 {

std::optional<Decoded> decode(std::string_view s, std::size_t pos) {
  if (pos >= s.size()) return std::nullopt;
  const auto b0 = static_cast<unsigned char>(s[pos]);
  if (b0 < 0x80) return Decoded{b0, 1};

  std::size_t len = 0;
  char32_t cp = 0;
  char32_t min = 0;
  if ((b0 & 0xE0) == 0xC0) {
    len = 2, cp = b0 & 0x1F, min = 0x80;
  } else if ((b0 & 0xF0) == 0xE0) {
    len = 3, cp = b0 & 0x0F, min = 0x800;
  } else if ((b0 & 0xF8) == 0xF0) {
    len = 4, cp = b0 & 0x07, min = 0x10000;
  } else {
    return std::nullopt;
  }
  if (pos + len > s.size()) return std::nullopt;
  for (std::size_t i = 1; i < len; ++i) {
    const auto b = static_cast<unsigned char>(s[pos + i]);
    if ((b & 0xC0) != 0x80) return std::nullopt;
    cp = (cp << 6) | (b & 0x3F);
  }
  if (cp < min || cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) return std::nullopt;
  return Decoded{cp, len};
}

std::optional<std::size_t> first_invalid(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto d = decode(s, pos);
    if (!d) return pos;
    pos += d->length;
  }
  return std::nullopt;
}

void append(std::string& out, char32_t cp) {
  if (cp < 0x80) {
    out.push_back(static_cast<char>(cp));
  } else if (cp < 0x800) {
    out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else if (cp < 0x10000) {
    out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  } else {
    out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
    out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
  }
}

namespace {

// Latin Extended-A pairs case by parity, but the parity flips twice.
bool latin_ext_a_upper(char32_t cp) {
  if (cp == 0x0138 || cp == 0x0149 || cp == 0x017F) return false;
  if (cp == 0x0178) return true;
  if (cp <= 0x0137) return cp % 2 == 0;
  if (cp <= 0x0148) return cp % 2 == 1;
  if (cp <= 0x0177) return cp % 2 == 0;
  return cp % 2 == 1;
}

}  // namespace

bool is_upper(char32_t cp) {
  if (cp < 0x80) return cp >= U'A' && cp <= U'Z';
  if (cp >= 0xC0 && cp <= 0xDE) return cp != 0xD7;
  if (cp >= 0x0100 && cp <= 0x017F) return latin_ext_a_upper(cp);
  if (cp >= 0x0391 && cp <= 0x03A9) return cp != 0x03A2;
  if (cp >= 0x0400 && cp <= 0x042F) return true;
  return false;
}

bool is_lower(char32_t cp) {
  if (cp < 0x80) return cp >= U'a' && cp <= U'z';
  if (cp >= 0xDF && cp <= 0xFF) return cp != 0xF7;
  if (cp >= 0x0100 && cp <= 0x017F) return !latin_ext_a_upper(cp);
  if (cp >= 0x03AC && cp <= 0x03CE) return true;
  if (cp >= 0x0430 && cp <= 0x045F) return true;
  return false;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case U' ': case U'\t': case U'\n': case U'\r': case U'\v': case U'\f':
    case 0x00A0: case 0x2028: case 0x2029: case 0x202F: case 0x3000: case 0xFEFF:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

char32_t to_lower(char32_t cp) {
  if (!is_upper(cp)) return cp;
  if (cp < 0x80 || (cp >= 0xC0 && cp <= 0xDE)) return cp + 0x20;
  if (cp >= 0x0100 && cp <= 0x017F) return cp == 0x0178 ? char32_t{0xFF} : cp + 1;
  if (cp >= 0x0391 && cp <= 0x03A9) return cp + 0x20;
  if (cp >= 0x0410 && cp <= 0x042F) return cp + 0x20;
  if (cp >= 0x0400 && cp <= 0x040F) return cp + 0x50;
  return cp;
}

std::string to_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto d = decode(s, pos);
    if (!d) {
      out.push_back(s[pos++]);
      continue;
    }
    append(out, to_lower(d->cp));
    pos += d->length;
  }
  return out;
}

}  // namespace nswcat::utf8
