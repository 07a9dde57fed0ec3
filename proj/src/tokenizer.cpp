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

#include "nswcat/tokenizer.hpp"

#include "nswcat/lexicon.hpp"
#include "nswcat/utf8.hpp"

namespace nswcat {

namespace {

bool is_opener(char32_t c) {
  switch (c) {
    case U'(': case U'[': case U'{': case U'"': case U'\'': case U'„': case U'“':
    case U'‘': case U'‚': case U'«': case U'¿': case U'¡':
      return true;
    default:
      return false;
  }
}

bool is_closing_quote(char32_t c) {
  switch (c) {
    case U'"': case U'\'': case U'”': case U'“': case U'’': case U'»':
    case U'′': case U'″':
      return true;
    default:
      return false;
  }
}

bool is_plain_trailer(char32_t c) {
  switch (c) {
    case U',': case U';': case U':': case U'!': case U'?': case U'…': case U'%':
      return true;
    default:
      return false;
  }
}

bool is_sentence_trailer(char32_t c) {
  return c == U'.' || (c != U'%' && is_plain_trailer(c));
}

bool all_punct(std::string_view s) {
  std::size_t pos = 0;
  while (pos < s.size()) {
    auto d = utf8::decode(s, pos);
    if (!d) return false;
    if (utf8::is_letter(d->cp) || utf8::is_digit(d->cp)) return false;
    pos += d->length;
  }
  return true;
}

// Start of the last code point in a non-empty string.
std::size_t last_cp_start(std::string_view s) {
  std::size_t p = s.size() - 1;
  while (p > 0 && (static_cast<unsigned char>(s[p]) & 0xC0) == 0x80) --p;
  return p;
}

char32_t cp_at(std::string_view s, std::size_t pos) {
  auto d = utf8::decode(s, pos);
  return d ? d->cp : U'�';
}

bool brackets_balanced(std::string_view s, char open, char close) {
  int depth = 0;
  for (char c : s) depth += (c == open) - (c == close);
  return depth >= 0;
}

}  // namespace

Tokenizer::Tokenizer(const Lexicon& lex, const RuleSet& rules) : rules_(&rules) {
  for (auto& f : lex.protected_forms()) exact_.insert(f);
  for (auto& f : lex.protected_forms_ci()) folded_.insert(f);
}

const Tokenizer& Tokenizer::builtin() {
  static const Tokenizer tok(Lexicon::builtin(), RuleSet::builtin());
  return tok;
}

bool Tokenizer::is_protected(std::string_view s) const {
  if (exact_.count(std::string(s))) return true;
  return !folded_.empty() && folded_.count(utf8::to_lower(s));
}

bool Tokenizer::keeps_period(std::string_view stem) const {
  if (stem.empty() || rules_ == nullptr) return false;
  for (const auto& e : rules_->keep_period())
    if (rules_->element_matches(e, stem)) return true;
  return false;
}

void Tokenizer::split_chunk(std::string_view text, std::size_t begin, std::size_t end,
                            std::vector<Token>& out) const {
  auto emit = [&](std::size_t b, std::size_t e) { out.push_back(Token{b, e, text.substr(b, e - b)}); };
  auto view = [&](std::size_t b, std::size_t e) { return text.substr(b, e - b); };

  // Symbol runs stay whole (":-)", "..."), but sentence punctuation after
  // them is split off unless the run is nothing else ("€," -> "€" ",").
  auto emit_symbols = [&](std::size_t b, std::size_t e) {
    std::size_t stem_end = e;
    while (stem_end > b && is_sentence_trailer(cp_at(text, b + last_cp_start(view(b, stem_end)))))
      stem_end = b + last_cp_start(view(b, stem_end));
    if (stem_end == b || stem_end == e) {
      emit(b, e);
      return;
    }
    emit(b, stem_end);
    for (std::size_t p = stem_end; p < e;) {
      const std::size_t len = utf8::decode(text, p)->length;
      std::size_t q = p + len;
      if (text[p] == '.')
        while (q < e && text[q] == '.') ++q;
      emit(p, q);
      p = q;
    }
  };

  if (is_protected(view(begin, end))) {
    emit(begin, end);
    return;
  }
  if (all_punct(view(begin, end))) {
    emit_symbols(begin, end);
    return;
  }

  while (begin < end) {
    auto d = utf8::decode(text, begin);
    if (!d || !is_opener(d->cp)) break;
    emit(begin, begin + d->length);
    begin += d->length;
    if (begin < end && is_protected(view(begin, end))) {
      emit(begin, end);
      return;
    }
    if (begin < end && all_punct(view(begin, end))) {
      emit_symbols(begin, end);
      return;
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> trail;
  std::size_t stem_end = end;
  while (stem_end > begin) {
    const auto stem = view(begin, stem_end);
    if (is_protected(stem) || all_punct(stem)) break;
    const std::size_t last = begin + last_cp_start(stem);
    const char32_t c = cp_at(text, last);
    bool peel = false;
    if (c == U'.') {
      // A period joining an already split run is part of an ellipsis.
      const bool joins_run = !trail.empty() && trail.back().first == stem_end && text[stem_end] == '.';
      peel = joins_run || !keeps_period(view(begin, last));
    } else if (c == U')' || c == U']' || c == U'}') {
      const char open = c == U')' ? '(' : (c == U']' ? '[' : '{');
      peel = !brackets_balanced(stem, open, static_cast<char>(c));
    } else if (is_closing_quote(c)) {
      peel = last == begin || !utf8::is_digit(cp_at(text, begin + last_cp_start(view(begin, last))));
    } else {
      peel = is_plain_trailer(c);
    }
    if (!peel) break;
    // Consecutive periods merge into one token.
    if (c == U'.' && !trail.empty() && trail.back().first == stem_end && text[stem_end] == '.') {
      trail.back().first = last;
    } else {
      trail.emplace_back(last, stem_end);
    }
    stem_end = last;
  }
  if (stem_end > begin) emit(begin, stem_end);
  for (auto it = trail.rbegin(); it != trail.rend(); ++it) emit(it->first, it->second);
}

std::vector<Token> Tokenizer::tokenize(std::string_view text) const {
  std::vector<Token> out;
  std::size_t pos = 0;
  std::size_t chunk_begin = std::string_view::npos;
  while (pos < text.size()) {
    auto d = utf8::decode(text, pos);
    const std::size_t len = d ? d->length : 1;
    const bool space = d && utf8::is_space(d->cp);
    if (space) {
      if (chunk_begin != std::string_view::npos) split_chunk(text, chunk_begin, pos, out);
      chunk_begin = std::string_view::npos;
    } else if (chunk_begin == std::string_view::npos) {
      chunk_begin = pos;
    }
    pos += len;
  }
  if (chunk_begin != std::string_view::npos) split_chunk(text, chunk_begin, text.size(), out);
  return out;
}

std::vector<Token> tokenize(std::string_view text) { return Tokenizer::builtin().tokenize(text); }

}  // namespace nswcat
