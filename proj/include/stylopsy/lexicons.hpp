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

// Word lists and valence tables used by the sentiment, syntactic and entity
// features.
//
// A lexicon directory holds one file per list. Word lists carry one lowercase
// entry per line; sentiment.tsv carries "word<TAB>polarity<TAB>subjectivity".
// Lines starting with '#' and blank lines are ignored. Files absent from a
// user directory fall back to the copies compiled into the library.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "stylopsy/detail/format.hpp"
#include "stylopsy/detail/utf8.hpp"
#include "stylopsy/embedded_lexicons.hpp"
#include "stylopsy/error.hpp"

namespace stylopsy {

struct Valence {
  double polarity = 0;      // [-1, 1]
  double subjectivity = 0;  // [0, 1]

  friend bool operator==(const Valence&, const Valence&) = default;
};

using WordSet = std::unordered_set<std::string>;

struct LexiconSet {
  WordSet stopwords;
  WordSet contractions;
  WordSet emotion_words;
  std::unordered_map<std::string, Valence> sentiment;
  WordSet first_person;
  WordSet second_person;
  WordSet clause_markers;
  WordSet months;
  std::vector<std::string> common_words_ranked;  // most frequent first
  WordSet common_words;                          // first `common_words_limit` of the ranking
  std::size_t common_words_limit = 0;
  std::vector<std::string> abstract_suffixes;
  std::vector<std::string> adjective_suffixes;
  std::vector<std::string> verb_suffixes;

  friend bool operator==(const LexiconSet&, const LexiconSet&) = default;
};

struct LexiconOptions {
  std::size_t common_words_limit = 3000;
  // When false, every list must be present in the directory.
  bool fallback_to_builtin = true;
};

// Passing this as the location loads the compiled-in defaults.
inline constexpr std::string_view kBuiltinLexicons = ":builtin:";

namespace lexicon_files {
inline constexpr std::string_view kStopwords = "stopwords.txt";
inline constexpr std::string_view kContractions = "contractions.txt";
inline constexpr std::string_view kEmotionWords = "emotion_words.txt";
inline constexpr std::string_view kSentiment = "sentiment.tsv";
inline constexpr std::string_view kFirstPerson = "first_person.txt";
inline constexpr std::string_view kSecondPerson = "second_person.txt";
inline constexpr std::string_view kClauseMarkers = "clause_markers.txt";
inline constexpr std::string_view kMonths = "months.txt";
inline constexpr std::string_view kCommonWords = "common_words.txt";
inline constexpr std::string_view kAbstractSuffixes = "abstract_suffixes.txt";
inline constexpr std::string_view kAdjectiveSuffixes = "adjective_suffixes.txt";
inline constexpr std::string_view kVerbSuffixes = "verb_suffixes.txt";

inline constexpr std::array<std::string_view, 12> kAll = {
    kStopwords,    kContractions, kEmotionWords,      kSentiment,          kFirstPerson,
    kSecondPerson, kClauseMarkers, kMonths,           kCommonWords,        kAbstractSuffixes,
    kAdjectiveSuffixes, kVerbSuffixes};
}  // namespace lexicon_files

inline constexpr std::array<std::string_view, 10> kRequiredFirstPerson = {
    "i", "me", "my", "mine", "we", "us", "our", "ours", "myself", "ourselves"};
inline constexpr std::array<std::string_view, 5> kRequiredSecondPerson = {
    "you", "your", "yours", "yourself", "yourselves"};

namespace detail {

inline std::optional<std::string_view> embedded_lexicon(std::string_view file) {
  for (const auto& [name, content] : kEmbeddedLexicons) {
    if (name == file) return content;
  }
  return std::nullopt;
}

inline bool is_comment_or_blank(std::string_view line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

inline bool has_whitespace(std::string_view s) {
  std::string_view rest = s;
  while (!rest.empty()) {
    const auto [cp, len] = decode_one(rest);
    if (is_space(cp)) return true;
    rest.remove_prefix(len);
  }
  return false;
}

class LexiconParser {
 public:
  std::vector<LexiconIssue> issues;

  std::vector<std::string> words(std::string_view file, std::string_view content) {
    std::vector<std::string> out;
    for_each_line(content, [&](std::size_t lineno, std::string_view line) {
      if (auto w = check_word(file, lineno, line)) out.push_back(std::move(*w));
    });
    return out;
  }

  std::unordered_map<std::string, Valence> sentiment(std::string_view file,
                                                     std::string_view content) {
    std::unordered_map<std::string, Valence> out;
    for_each_line(content, [&](std::size_t lineno, std::string_view line) {
      std::vector<std::string_view> fields;
      std::size_t start = 0;
      for (;;) {
        const auto tab = line.find('\t', start);
        fields.push_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
        if (tab == std::string_view::npos) break;
        start = tab + 1;
      }
      if (fields.size() != 3) {
        report(file, lineno, "expected word<TAB>polarity<TAB>subjectivity");
        return;
      }
      auto word = check_word(file, lineno, fields[0]);
      const auto pol = parse_double(fields[1]);
      const auto subj = parse_double(fields[2]);
      if (!pol || !subj) {
        report(file, lineno, "unparseable valence");
        return;
      }
      if (!(*pol >= -1.0 && *pol <= 1.0)) {
        report(file, lineno, "polarity outside [-1, 1]");
        return;
      }
      if (!(*subj >= 0.0 && *subj <= 1.0)) {
        report(file, lineno, "subjectivity outside [0, 1]");
        return;
      }
      if (word) out[std::move(*word)] = Valence{*pol, *subj};
    });
    return out;
  }

  void report(std::string_view file, std::size_t line, std::string reason) {
    issues.push_back({std::string(file), line, std::move(reason)});
  }

 private:
  template <typename F>
  static void for_each_line(std::string_view content, F&& f) {
    std::size_t lineno = 0;
    while (!content.empty()) {
      ++lineno;
      const auto nl = content.find('\n');
      auto line = content.substr(0, nl);
      content.remove_prefix(nl == std::string_view::npos ? content.size() : nl + 1);
      if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
      if (!is_comment_or_blank(line)) f(lineno, line);
    }
  }

  std::optional<std::string> check_word(std::string_view file, std::size_t lineno,
                                        std::string_view entry) {
    if (entry.empty()) {
      report(file, lineno, "empty entry");
      return std::nullopt;
    }
    if (has_whitespace(entry)) {
      report(file, lineno, "entry contains whitespace");
      return std::nullopt;
    }
    if (lowercase(entry) != entry) {
      report(file, lineno, "entry is not lowercase");
      return std::nullopt;
    }
    return std::string(entry);
  }
};

inline WordSet to_set(const std::vector<std::string>& v) { return WordSet(v.begin(), v.end()); }

}  // namespace detail

// Rebuilds the common_words set from the ranking with a new cutoff.
inline void set_common_words_limit(LexiconSet& lex, std::size_t limit) {
  lex.common_words_limit = limit;
  const auto n = std::min(limit, lex.common_words_ranked.size());
  lex.common_words = WordSet(lex.common_words_ranked.begin(),
                             lex.common_words_ranked.begin() + static_cast<std::ptrdiff_t>(n));
}

// Loads a lexicon set from `location` (a directory, or kBuiltinLexicons).
// Throws MalformedLexicon listing every bad line, or MissingList.
inline LexiconSet load_lexicons(const std::filesystem::path& location,
                                const LexiconOptions& options = {}) {
  namespace fs = std::filesystem;
  const bool builtin = location.native() == kBuiltinLexicons;
  if (!builtin && !fs::is_directory(location)) {
    throw UnreadableFile(location.string());
  }

  auto content_of = [&](std::string_view file) -> std::pair<std::string, std::string> {
    if (!builtin) {
      const auto p = location / file;
      if (fs::exists(p)) {
        std::ifstream in(p, std::ios::binary);
        if (!in) throw UnreadableFile(p.string());
        std::ostringstream ss;
        ss << in.rdbuf();
        return {p.string(), ss.str()};
      }
      if (!options.fallback_to_builtin) {
        auto name = std::string(file.substr(0, file.find('.')));
        throw MissingList(name);
      }
    }
    const auto embedded = detail::embedded_lexicon(file);
    if (!embedded) throw MissingList(std::string(file.substr(0, file.find('.'))));
    return {std::string(file), std::string(*embedded)};
  };

  detail::LexiconParser parser;
  auto words = [&](std::string_view file) {
    const auto [label, text] = content_of(file);
    return parser.words(label, text);
  };

  namespace lf = lexicon_files;
  LexiconSet lex;
  lex.stopwords = detail::to_set(words(lf::kStopwords));
  lex.contractions = detail::to_set(words(lf::kContractions));
  lex.emotion_words = detail::to_set(words(lf::kEmotionWords));
  {
    const auto [label, text] = content_of(lf::kSentiment);
    lex.sentiment = parser.sentiment(label, text);
  }
  const auto [first_label, first_text] = content_of(lf::kFirstPerson);
  lex.first_person = detail::to_set(parser.words(first_label, first_text));
  const auto [second_label, second_text] = content_of(lf::kSecondPerson);
  lex.second_person = detail::to_set(parser.words(second_label, second_text));
  lex.clause_markers = detail::to_set(words(lf::kClauseMarkers));
  lex.months = detail::to_set(words(lf::kMonths));
  lex.common_words_ranked = words(lf::kCommonWords);
  set_common_words_limit(lex, options.common_words_limit);
  lex.abstract_suffixes = words(lf::kAbstractSuffixes);
  lex.adjective_suffixes = words(lf::kAdjectiveSuffixes);
  lex.verb_suffixes = words(lf::kVerbSuffixes);

  for (auto p : kRequiredFirstPerson) {
    if (!lex.first_person.contains(std::string(p))) {
      parser.report(first_label, 0, "missing required pronoun '" + std::string(p) + "'");
    }
  }
  for (auto p : kRequiredSecondPerson) {
    if (!lex.second_person.contains(std::string(p))) {
      parser.report(second_label, 0, "missing required pronoun '" + std::string(p) + "'");
    }
  }
  if (!parser.issues.empty()) throw MalformedLexicon(std::move(parser.issues));
  return lex;
}

inline LexiconSet builtin_lexicons(const LexiconOptions& options = {}) {
  return load_lexicons(std::filesystem::path(std::string(kBuiltinLexicons)), options);
}

// Case-insensitive exact match.
inline std::optional<Valence> lookup_sentiment(const LexiconSet& lex, std::string_view token) {
  const auto it = lex.sentiment.find(detail::lowercase(token));
  if (it == lex.sentiment.end()) return std::nullopt;
  return it->second;
}

// Writes every list of `lex` into `dir` (created if needed). Sets are written
// sorted; the common-word ranking keeps its order.
inline void save_lexicons(const LexiconSet& lex, const std::filesystem::path& dir) {
  namespace fs = std::filesystem;
  namespace lf = lexicon_files;
  fs::create_directories(dir);

  auto write = [&](std::string_view file, const std::string& body) {
    std::ofstream out(dir / file, std::ios::binary);
    if (!out) throw UnreadableFile((dir / file).string());
    out << body;
  };
  auto sorted_lines = [](const WordSet& set) {
    std::vector<std::string> v(set.begin(), set.end());
    std::sort(v.begin(), v.end());
    std::string body;
    for (const auto& w : v) body += w + '\n';
    return body;
  };
  auto ordered_lines = [](const std::vector<std::string>& v) {
    std::string body;
    for (const auto& w : v) body += w + '\n';
    return body;
  };

  write(lf::kStopwords, sorted_lines(lex.stopwords));
  write(lf::kContractions, sorted_lines(lex.contractions));
  write(lf::kEmotionWords, sorted_lines(lex.emotion_words));
  write(lf::kFirstPerson, sorted_lines(lex.first_person));
  write(lf::kSecondPerson, sorted_lines(lex.second_person));
  write(lf::kClauseMarkers, sorted_lines(lex.clause_markers));
  write(lf::kMonths, sorted_lines(lex.months));
  write(lf::kCommonWords, ordered_lines(lex.common_words_ranked));
  write(lf::kAbstractSuffixes, ordered_lines(lex.abstract_suffixes));
  write(lf::kAdjectiveSuffixes, ordered_lines(lex.adjective_suffixes));
  write(lf::kVerbSuffixes, ordered_lines(lex.verb_suffixes));

  std::vector<std::pair<std::string, Valence>> entries(lex.sentiment.begin(), lex.sentiment.end());
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  std::string body = "# word\tpolarity\tsubjectivity\n";
  for (const auto& [word, v] : entries) {
    body += word + '\t' + detail::format_double(v.polarity) + '\t' +
            detail::format_double(v.subjectivity) + '\n';
  }
  write(lf::kSentiment, body);
}

}  // namespace stylopsy
