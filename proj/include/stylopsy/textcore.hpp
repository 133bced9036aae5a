// Copyright 2026 The Stylopsy Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Low-level text analysis shared by every feature: tokenization, sentence
// segmentation, syllable estimation and n-gram extraction. Everything here is
// a pure function of its input.
//
// Tokens are maximal runs of Unicode letters. An apostrophe or an ASCII
// hyphen joins two letters into one token ("don't", "stop-gap"); at a token
// edge it is punctuation. U+2019 is read as an ASCII apostrophe. Whitespace
// and decimal digits produce no token at all; every other code point is a
// one-character punctuation token.

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stylopsy/detail/utf8.hpp"

namespace stylopsy {

// Byte range into the raw text.
struct Span {
  std::size_t offset = 0;
  std::size_t length = 0;

  std::size_t end() const noexcept { return offset + length; }
  friend bool operator==(const Span&, const Span&) = default;
};

struct Tokenization {
  std::vector<std::string> words;  // original casing, apostrophes normalized
  std::vector<std::string> punct;  // one code point each, UTF-8 encoded
  std::vector<Span> word_spans;
  std::vector<Span> punct_spans;

  friend bool operator==(const Tokenization&, const Tokenization&) = default;
};

// A sentence is a contiguous slice [first, first + count) of the word tokens.
struct Sentence {
  std::size_t first = 0;
  std::size_t count = 0;
  std::optional<char> terminator;  // '.', '!' or '?'

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

namespace detail {

inline char32_t normalize_apostrophe(char32_t cp) noexcept { return cp == 0x2019 ? U'\'' : cp; }

inline bool is_joiner(char32_t cp) noexcept { return cp == U'\'' || cp == U'-'; }

inline bool is_terminator(std::string_view p) noexcept {
  return p == "." || p == "!" || p == "?";
}

}  // namespace detail

inline Tokenization tokenize(std::string_view raw) {
  Tokenization out;
  std::string word;
  std::size_t word_start = 0;
  bool prev_letter = false;

  auto flush_word = [&](std::size_t end) {
    if (!word.empty()) {
      out.words.push_back(std::move(word));
      out.word_spans.push_back({word_start, end - word_start});
      word.clear();
    }
  };
  auto emit_punct = [&](char32_t cp, std::size_t at, std::size_t len) {
    std::string p;
    detail::append_utf8(p, cp);
    out.punct.push_back(std::move(p));
    out.punct_spans.push_back({at, len});
  };

  std::size_t pos = 0;
  while (pos < raw.size()) {
    const auto [raw_cp, len] = detail::decode_one(raw.substr(pos));
    const char32_t cp = detail::normalize_apostrophe(raw_cp);

    if (detail::is_letter(cp)) {
      if (word.empty()) word_start = pos;
      detail::append_utf8(word, cp);
      prev_letter = true;
    } else if (detail::is_joiner(cp) && prev_letter && pos + len < raw.size() &&
               detail::is_letter(detail::decode_one(raw.substr(pos + len)).cp)) {
      detail::append_utf8(word, cp);
      prev_letter = false;
    } else {
      flush_word(pos);
      prev_letter = false;
      if (!detail::is_space(cp) && !detail::is_digit(cp)) emit_punct(cp, pos, len);
    }
    pos += len;
  }
  flush_word(pos);
  return out;
}

// Boundaries fall at '.', '!' and '?'; a run of terminators closes one
// sentence and records its first character. Text after the last terminator
// forms a final unterminated sentence. Sentences never hold zero words.
inline std::vector<Sentence> split_sentences(const Tokenization& tokens) {
  std::vector<Sentence> out;
  std::size_t start = 0;
  std::size_t w = 0;
  const std::size_t n = tokens.words.size();
  for (std::size_t i = 0; i < tokens.punct.size(); ++i) {
    if (!detail::is_terminator(tokens.punct[i])) continue;
    const std::size_t at = tokens.punct_spans[i].offset;
    while (w < n && tokens.word_spans[w].offset < at) ++w;
    if (w > start) {
      out.push_back({start, w - start, tokens.punct[i][0]});
      start = w;
    }
  }
  if (start < n) out.push_back({start, n - start, std::nullopt});
  return out;
}

namespace detail {

inline bool is_vowel(char32_t cp) noexcept {
  switch (cp) {
    case U'a': case U'e': case U'i': case U'o': case U'u': case U'y':
      return true;
    default:
      return false;
  }
}

}  // namespace detail

// Vowel-group syllable estimate: one syllable per maximal run of a/e/i/o/u/y,
// less one for a silent final 'e' (a lone trailing 'e' after a non-vowel,
// unless the word ends in consonant + "le"), never below 1.
inline int count_syllables(std::string_view token) {
  if (token.empty()) throw std::invalid_argument("count_syllables: empty token");

  std::u32string cps;
  while (!token.empty()) {
    const auto [cp, len] = detail::decode_one(token);
    cps.push_back(detail::to_lower(cp));
    token.remove_prefix(len);
  }

  int groups = 0;
  bool in_group = false;
  for (char32_t cp : cps) {
    const bool vowel = detail::is_vowel(cp);
    if (vowel && !in_group) ++groups;
    in_group = vowel;
  }

  const std::size_t n = cps.size();
  if (groups > 1 && n >= 2 && cps[n - 1] == U'e' && !detail::is_vowel(cps[n - 2])) {
    const bool consonant_le = cps[n - 2] == U'l' && n >= 3 && !detail::is_vowel(cps[n - 3]);
    if (!consonant_le) --groups;
  }
  return groups < 1 ? 1 : groups;
}

struct Ngram {
  std::vector<std::string> terms;  // lowercased; 2 or 3 entries

  std::size_t arity() const noexcept { return terms.size(); }
  friend auto operator<=>(const Ngram&, const Ngram&) = default;
};

// All contiguous lowercased n-grams over the whole token stream, in order.
// Sentence boundaries are not barriers.
inline std::vector<Ngram> extract_ngrams(std::span<const std::string> words, std::size_t arity) {
  if (arity != 2 && arity != 3) throw std::invalid_argument("extract_ngrams: arity must be 2 or 3");
  std::vector<Ngram> out;
  if (words.size() < arity) return out;
  out.reserve(words.size() - arity + 1);
  for (std::size_t i = 0; i + arity <= words.size(); ++i) {
    Ngram g;
    g.terms.reserve(arity);
    for (std::size_t k = 0; k < arity; ++k) g.terms.push_back(detail::lowercase(words[i + k]));
    out.push_back(std::move(g));
  }
  return out;
}

// Raw text plus everything derived from it. Immutable once built.
class Document {
 public:
  Document() : Document(std::string{}) {}

  explicit Document(std::string raw)
      : raw_(std::move(raw)), tokens_(tokenize(raw_)), sentences_(split_sentences(tokens_)) {
    lowered_.reserve(tokens_.words.size());
    for (const auto& w : tokens_.words) lowered_.push_back(detail::lowercase(w));
  }

  const std::string& raw() const noexcept { return raw_; }
  const Tokenization& tokens() const noexcept { return tokens_; }
  const std::vector<std::string>& words() const noexcept { return tokens_.words; }
  const std::vector<std::string>& lowered_words() const noexcept { return lowered_; }
  const std::vector<std::string>& punct() const noexcept { return tokens_.punct; }
  const std::vector<Sentence>& sentences() const noexcept { return sentences_; }

  std::span<const std::string> sentence_words(const Sentence& s) const noexcept {
    return std::span<const std::string>(tokens_.words).subspan(s.first, s.count);
  }

 private:
  std::string raw_;
  Tokenization tokens_;
  std::vector<Sentence> sentences_;
  std::vector<std::string> lowered_;
};

}  // namespace stylopsy
