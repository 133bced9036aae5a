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

// The 29 stylometric features, computed per category from a Document.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include <json.hpp>

#include "stylopsy/detail/format.hpp"
#include "stylopsy/detail/utf8.hpp"
#include "stylopsy/error.hpp"
#include "stylopsy/lexicons.hpp"
#include "stylopsy/textcore.hpp"

namespace stylopsy {

enum class Category { kLexical, kSyntactic, kSentiment, kReadability, kNamedEntity, kUniqueness };

inline constexpr std::array<Category, 6> kCategories = {
    Category::kLexical,     Category::kSyntactic,   Category::kSentiment,
    Category::kReadability, Category::kNamedEntity, Category::kUniqueness};

inline constexpr std::string_view category_name(Category c) {
  switch (c) {
    case Category::kLexical: return "Lexical";
    case Category::kSyntactic: return "Syntactic";
    case Category::kSentiment: return "Sentiment";
    case Category::kReadability: return "Readability";
    case Category::kNamedEntity: return "Named Entity";
    case Category::kUniqueness: return "Uniqueness";
  }
  return "";
}

// Declaration order is the public feature order used by model files and CSV.
enum class Feature : std::size_t {
  kWordCount,
  kUniqueWordCount,
  kCharCount,
  kAvgWordLength,
  kTtr,
  kHapaxLegomenonRate,
  kSentenceCount,
  kAvgSentenceLength,
  kPunctuationCount,
  kStopWordCount,
  kComplexSentenceCount,
  kQuestionCount,
  kExclamationCount,
  kContractionCount,
  kAbstractNounCount,
  kComplexVerbCount,
  kSophisticatedAdjectiveCount,
  kEmotionWordCount,
  kPolarity,
  kSubjectivity,
  kVaderCompound,
  kFleschReadingEase,
  kGunningFog,
  kFirstPersonCount,
  kDirectAddressCount,
  kPersonEntities,
  kDateEntities,
  kUniqueNgramCount,
  kSyntaxVariety,
};

inline constexpr std::size_t kFeatureCount = 29;

struct FeatureInfo {
  std::string_view name;
  Category category;
  bool is_count;
};

inline constexpr std::array<FeatureInfo, kFeatureCount> kFeatureInfo = {{
    {"word_count", Category::kLexical, true},
    {"unique_word_count", Category::kLexical, true},
    {"char_count", Category::kLexical, true},
    {"avg_word_length", Category::kLexical, false},
    {"ttr", Category::kLexical, false},
    {"hapax_legomenon_rate", Category::kLexical, false},
    {"sentence_count", Category::kSyntactic, true},
    {"avg_sentence_length", Category::kSyntactic, false},
    {"punctuation_count", Category::kSyntactic, true},
    {"stop_word_count", Category::kSyntactic, true},
    {"complex_sentence_count", Category::kSyntactic, true},
    {"question_count", Category::kSyntactic, true},
    {"exclamation_count", Category::kSyntactic, true},
    {"contraction_count", Category::kSyntactic, true},
    {"abstract_noun_count", Category::kSyntactic, true},
    {"complex_verb_count", Category::kSyntactic, true},
    {"sophisticated_adjective_count", Category::kSyntactic, true},
    {"emotion_word_count", Category::kSentiment, true},
    {"polarity", Category::kSentiment, false},
    {"subjectivity", Category::kSentiment, false},
    {"vader_compound", Category::kSentiment, false},
    {"flesch_reading_ease", Category::kReadability, false},
    {"gunning_fog", Category::kReadability, false},
    {"first_person_count", Category::kNamedEntity, true},
    {"direct_address_count", Category::kNamedEntity, true},
    {"person_entities", Category::kNamedEntity, true},
    {"date_entities", Category::kNamedEntity, true},
    {"unique_ngram_count", Category::kUniqueness, true},
    {"syntax_variety", Category::kUniqueness, false},
}};

inline constexpr std::size_t index_of(Feature f) { return static_cast<std::size_t>(f); }
inline constexpr std::string_view feature_name(Feature f) { return kFeatureInfo[index_of(f)].name; }
inline constexpr Category feature_category(Feature f) { return kFeatureInfo[index_of(f)].category; }
inline constexpr bool is_count_feature(Feature f) { return kFeatureInfo[index_of(f)].is_count; }

inline std::optional<Feature> feature_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (kFeatureInfo[i].name == name) return static_cast<Feature>(i);
  }
  return std::nullopt;
}

// FNV-1a 64 over the feature names joined by '\n'. Model files carry it so a
// reordered or renamed feature set is detected on prediction.
inline std::uint64_t feature_order_hash() {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 0x100000001b3ULL;
  };
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (i) mix('\n');
    for (char c : kFeatureInfo[i].name) mix(static_cast<unsigned char>(c));
  }
  return h;
}

struct FeatureVector {
  std::array<double, kFeatureCount> values{};

  double& operator[](Feature f) { return values[index_of(f)]; }
  double operator[](Feature f) const { return values[index_of(f)]; }

  friend bool operator==(const FeatureVector&, const FeatureVector&) = default;
};

// ------------------------------------------------------------ category results

struct LexicalFeatures {
  std::size_t word_count = 0;
  std::size_t unique_word_count = 0;
  std::size_t char_count = 0;
  double avg_word_length = 0;
  double ttr = 0;
  double hapax_legomenon_rate = 0;
};

struct SyntacticFeatures {
  std::size_t sentence_count = 0;
  double avg_sentence_length = 0;
  std::size_t punctuation_count = 0;
  std::size_t stop_word_count = 0;
  std::size_t complex_sentence_count = 0;
  std::size_t question_count = 0;
  std::size_t exclamation_count = 0;
  std::size_t contraction_count = 0;
  std::size_t abstract_noun_count = 0;
  std::size_t complex_verb_count = 0;
  std::size_t sophisticated_adjective_count = 0;
};

struct SentimentFeatures {
  std::size_t emotion_word_count = 0;
  double polarity = 0;
  double subjectivity = 0;
  double vader_compound = 0;
};

struct ReadabilityFeatures {
  double flesch_reading_ease = 0;
  double gunning_fog = 0;
};

struct EntityFeatures {
  std::size_t first_person_count = 0;
  std::size_t direct_address_count = 0;
  std::size_t person_entities = 0;
  std::size_t date_entities = 0;
};

struct UniquenessFeatures {
  std::size_t unique_ngram_count = 0;
  double syntax_variety = 0;
};

namespace detail {

inline double ratio(double num, double den) { return den == 0 ? 0.0 : num / den; }

inline bool ends_with(std::string_view s, std::string_view suffix) {
  return s.size() >= suffix.size() && s.substr(s.size() - suffix.size()) == suffix;
}

// True when `word` ends in one of `suffixes` and has at least one character
// before it.
inline bool has_suffix(std::string_view word, const std::vector<std::string>& suffixes) {
  return std::any_of(suffixes.begin(), suffixes.end(), [&](const std::string& s) {
    return word.size() > s.size() && ends_with(word, s);
  });
}

inline bool starts_upper(std::string_view token) {
  return !token.empty() && is_upper(decode_one(token).cp);
}

inline bool has_lower(std::string_view token) {
  while (!token.empty()) {
    const auto [cp, len] = decode_one(token);
    if (is_lower(cp)) return true;
    token.remove_prefix(len);
  }
  return false;
}

inline bool comma_between(const Tokenization& t, std::size_t from, std::size_t to) {
  auto it = std::lower_bound(t.punct_spans.begin(), t.punct_spans.end(), from,
                             [](const Span& s, std::size_t off) { return s.offset < off; });
  for (; it != t.punct_spans.end() && it->offset < to; ++it) {
    if (t.punct[static_cast<std::size_t>(it - t.punct_spans.begin())] == ",") return true;
  }
  return false;
}

inline bool is_coordinator(std::string_view w) { return w == "and" || w == "but" || w == "or"; }

inline bool ascii_digit(char c) { return c >= '0' && c <= '9'; }

inline bool ascii_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }

// Letters on either side of an ASCII digit run disqualify it; non-ASCII bytes
// count as letters here only if they decode to one.
inline bool letter_before(std::string_view raw, std::size_t pos) {
  if (pos == 0) return false;
  std::size_t start = pos - 1;
  while (start > 0 && (static_cast<unsigned char>(raw[start]) & 0xC0) == 0x80) --start;
  return is_letter(decode_one(raw.substr(start)).cp);
}

inline bool letter_at(std::string_view raw, std::size_t pos) {
  return pos < raw.size() && is_letter(decode_one(raw.substr(pos)).cp);
}

inline bool is_connector(char c) { return c == '.' || c == ',' || c == ':' || c == '/' || c == '-'; }

struct DigitRun {
  std::size_t begin;
  std::size_t end;
};

inline std::vector<DigitRun> digit_runs(std::string_view raw) {
  std::vector<DigitRun> runs;
  for (std::size_t i = 0; i < raw.size();) {
    if (!ascii_digit(raw[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < raw.size() && ascii_digit(raw[j])) ++j;
    runs.push_back({i, j});
    i = j;
  }
  return runs;
}

// Numeric dates D/M/Y or D-M-Y (1-2, 1-2, 2-4 digits, one separator kind)
// plus standalone four-digit years 1000-2999. A year inside a numeric date
// is not counted again.
inline std::size_t count_numeric_dates(std::string_view raw) {
  const auto runs = digit_runs(raw);
  std::vector<bool> used(runs.size(), false);
  std::size_t count = 0;

  auto len = [&](std::size_t k) { return runs[k].end - runs[k].begin; };
  for (std::size_t k = 0; k + 2 < runs.size(); ++k) {
    const auto& a = runs[k];
    const auto& b = runs[k + 1];
    const auto& c = runs[k + 2];
    if (b.begin != a.end + 1 || c.begin != b.end + 1) continue;
    const char sep = raw[a.end];
    if ((sep != '/' && sep != '-') || raw[b.end] != sep) continue;
    if (len(k) > 2 || len(k + 1) > 2 || len(k + 2) < 2 || len(k + 2) > 4) continue;
    if (letter_before(raw, a.begin) || letter_at(raw, c.end)) continue;
    if (used[k]) continue;
    used[k] = used[k + 1] = used[k + 2] = true;
    ++count;
  }

  for (std::size_t k = 0; k < runs.size(); ++k) {
    if (used[k] || len(k) != 4) continue;
    const auto& r = runs[k];
    const int year = (raw[r.begin] - '0') * 1000 + (raw[r.begin + 1] - '0') * 100 +
                     (raw[r.begin + 2] - '0') * 10 + (raw[r.begin + 3] - '0');
    if (year < 1000 || year > 2999) continue;
    if (letter_before(raw, r.begin) || letter_at(raw, r.end)) continue;
    const bool joined_left = r.begin >= 2 && is_connector(raw[r.begin - 1]) &&
                             ascii_digit(raw[r.begin - 2]);
    const bool joined_right = r.end + 1 < raw.size() && is_connector(raw[r.end]) &&
                              ascii_digit(raw[r.end + 1]);
    if (joined_left || joined_right) continue;
    ++count;
  }
  return count;
}

}  // namespace detail

// ---------------------------------------------------------------- operations

inline LexicalFeatures lexical_features(const Document& doc) {
  LexicalFeatures f;
  const auto& words = doc.lowered_words();
  f.word_count = words.size();
  f.char_count = detail::codepoint_count(doc.raw());
  if (words.empty()) return f;

  std::unordered_map<std::string_view, std::size_t> freq;
  std::size_t total_len = 0;
  for (const auto& w : doc.words()) total_len += detail::codepoint_count(w);
  for (const auto& w : words) ++freq[w];
  std::size_t hapax = 0;
  for (const auto& [w, n] : freq) hapax += (n == 1);

  const auto n = static_cast<double>(words.size());
  f.unique_word_count = freq.size();
  f.avg_word_length = static_cast<double>(total_len) / n;
  f.ttr = static_cast<double>(freq.size()) / n;
  f.hapax_legomenon_rate = static_cast<double>(hapax) / n;
  return f;
}

inline SyntacticFeatures syntactic_features(const Document& doc, const LexiconSet& lex) {
  SyntacticFeatures f;
  const auto& words = doc.lowered_words();
  const auto& tokens = doc.tokens();
  f.sentence_count = doc.sentences().size();
  f.avg_sentence_length =
      detail::ratio(static_cast<double>(words.size()), static_cast<double>(f.sentence_count));
  f.punctuation_count = doc.punct().size();

  for (const auto& s : doc.sentences()) {
    if (s.terminator == '?') ++f.question_count;
    if (s.terminator == '!') ++f.exclamation_count;

    bool complex = false;
    for (std::size_t i = s.first; i < s.first + s.count && !complex; ++i) {
      if (lex.clause_markers.contains(words[i])) complex = true;
      if (i > s.first && i + 1 < s.first + s.count && detail::is_coordinator(words[i]) &&
          detail::comma_between(tokens, tokens.word_spans[i - 1].end(),
                                tokens.word_spans[i].offset)) {
        complex = true;
      }
    }
    f.complex_sentence_count += complex;
  }

  for (const auto& w : words) {
    f.stop_word_count += lex.stopwords.contains(w);
    const bool listed = w.find('\'') != std::string::npos && lex.contractions.contains(w);
    f.contraction_count += (listed || detail::ends_with(w, "n't"));
    f.abstract_noun_count += detail::has_suffix(w, lex.abstract_suffixes);
    f.complex_verb_count +=
        detail::has_suffix(w, lex.verb_suffixes) && !lex.common_words.contains(w);
    f.sophisticated_adjective_count +=
        detail::has_suffix(w, lex.adjective_suffixes) && detail::codepoint_count(w) >= 7;
  }
  return f;
}

inline constexpr double kCompoundAlpha = 15.0;

// S / sqrt(S^2 + alpha), kept strictly inside (-1, 1).
inline double compound_score(double sum) {
  double c = sum / std::sqrt(sum * sum + kCompoundAlpha);
  if (std::fabs(c) >= 1.0) c = std::copysign(std::nextafter(1.0, 0.0), c);
  return c;
}

inline SentimentFeatures sentiment_features(const Document& doc, const LexiconSet& lex) {
  SentimentFeatures f;
  double pol_sum = 0;
  double subj_sum = 0;
  std::size_t matched = 0;
  for (const auto& w : doc.lowered_words()) {
    f.emotion_word_count += lex.emotion_words.contains(w);
    if (const auto it = lex.sentiment.find(w); it != lex.sentiment.end()) {
      pol_sum += it->second.polarity;
      subj_sum += it->second.subjectivity;
      ++matched;
    }
  }
  if (matched == 0) return f;
  f.polarity = pol_sum / static_cast<double>(matched);
  f.subjectivity = subj_sum / static_cast<double>(matched);
  f.vader_compound = compound_score(pol_sum);
  return f;
}

// Flesch reading ease (unclamped) and Gunning fog from word, sentence,
// syllable and complex-word (3+ syllable) counts.
inline ReadabilityFeatures readability_from_counts(double words, double sentences,
                                                   double syllables, double complex_words) {
  ReadabilityFeatures f;
  if (words == 0) return f;
  if (sentences < 1) sentences = 1;
  const double wps = words / sentences;
  f.flesch_reading_ease = 206.835 - 1.015 * wps - 84.6 * (syllables / words);
  f.gunning_fog = 0.4 * (wps + 100.0 * (complex_words / words));
  return f;
}

inline ReadabilityFeatures readability_features(const Document& doc) {
  std::size_t syllables = 0;
  std::size_t complex_words = 0;
  for (const auto& w : doc.words()) {
    const int s = count_syllables(w);
    syllables += static_cast<std::size_t>(s);
    complex_words += (s >= 3);
  }
  return readability_from_counts(static_cast<double>(doc.words().size()),
                                 static_cast<double>(doc.sentences().size()),
                                 static_cast<double>(syllables),
                                 static_cast<double>(complex_words));
}

inline EntityFeatures entity_features(const Document& doc, const LexiconSet& lex) {
  EntityFeatures f;
  const auto& lowered = doc.lowered_words();
  const auto& words = doc.words();
  std::size_t month_mentions = 0;
  for (std::size_t i = 0; i < words.size(); ++i) {
    f.first_person_count += lex.first_person.contains(lowered[i]);
    f.direct_address_count += lex.second_person.contains(lowered[i]);
    month_mentions += lex.months.contains(lowered[i]) && detail::starts_upper(words[i]);
  }
  // heuristic NER: capitalized, not sentence-initial, not all-caps, not common
  for (const auto& s : doc.sentences()) {
    for (std::size_t i = s.first + 1; i < s.first + s.count; ++i) {
      if (detail::starts_upper(words[i]) && detail::has_lower(words[i]) &&
          !lex.common_words.contains(lowered[i])) {
        ++f.person_entities;
      }
    }
  }
  f.date_entities = month_mentions + detail::count_numeric_dates(doc.raw());
  return f;
}

enum class LengthBucket { k1To5, k6To10, k11To20, k21Plus };
enum class OpenerClass { kFirstPerson, kSecondPerson, kStopword, kQuestionWord, kOther };

struct SentenceSignature {
  LengthBucket length_bucket;
  OpenerClass opener_class;
  std::optional<char> terminator;

  friend auto operator<=>(const SentenceSignature&, const SentenceSignature&) = default;
};

inline constexpr std::array<std::string_view, 9> kQuestionWords = {
    "who", "what", "when", "where", "why", "how", "which", "whose", "whom"};

// Question words are tested before stopwords; most of them are also stopwords.
inline SentenceSignature sentence_signature(const Document& doc, const Sentence& s,
                                            const LexiconSet& lex) {
  SentenceSignature sig{};
  sig.length_bucket = s.count <= 5    ? LengthBucket::k1To5
                      : s.count <= 10 ? LengthBucket::k6To10
                      : s.count <= 20 ? LengthBucket::k11To20
                                      : LengthBucket::k21Plus;
  const auto& opener = doc.lowered_words()[s.first];
  if (lex.first_person.contains(opener)) {
    sig.opener_class = OpenerClass::kFirstPerson;
  } else if (lex.second_person.contains(opener)) {
    sig.opener_class = OpenerClass::kSecondPerson;
  } else if (std::find(kQuestionWords.begin(), kQuestionWords.end(), opener) !=
             kQuestionWords.end()) {
    sig.opener_class = OpenerClass::kQuestionWord;
  } else if (lex.stopwords.contains(opener)) {
    sig.opener_class = OpenerClass::kStopword;
  } else {
    sig.opener_class = OpenerClass::kOther;
  }
  sig.terminator = s.terminator;
  return sig;
}

inline UniquenessFeatures uniqueness_features(const Document& doc, const LexiconSet& lex) {
  UniquenessFeatures f;
  const auto& words = doc.lowered_words();
  for (std::size_t arity : {std::size_t{2}, std::size_t{3}}) {
    if (words.size() < arity) continue;
    std::unordered_map<std::string, std::size_t> counts;
    for (std::size_t i = 0; i + arity <= words.size(); ++i) {
      std::string key = words[i];
      for (std::size_t k = 1; k < arity; ++k) (key += '\x1f') += words[i + k];
      ++counts[key];
    }
    for (const auto& [key, n] : counts) f.unique_ngram_count += (n == 1);
  }

  const auto& sentences = doc.sentences();
  if (!sentences.empty()) {
    std::set<SentenceSignature> distinct;
    for (const auto& s : sentences) distinct.insert(sentence_signature(doc, s, lex));
    f.syntax_variety =
        static_cast<double>(distinct.size()) / static_cast<double>(sentences.size());
  }
  return f;
}

inline FeatureVector assemble(const LexicalFeatures& lx, const SyntacticFeatures& sy,
                              const SentimentFeatures& se, const ReadabilityFeatures& rd,
                              const EntityFeatures& en, const UniquenessFeatures& un) {
  auto d = [](std::size_t n) { return static_cast<double>(n); };
  FeatureVector v;
  v.values = {d(lx.word_count),
              d(lx.unique_word_count),
              d(lx.char_count),
              lx.avg_word_length,
              lx.ttr,
              lx.hapax_legomenon_rate,
              d(sy.sentence_count),
              sy.avg_sentence_length,
              d(sy.punctuation_count),
              d(sy.stop_word_count),
              d(sy.complex_sentence_count),
              d(sy.question_count),
              d(sy.exclamation_count),
              d(sy.contraction_count),
              d(sy.abstract_noun_count),
              d(sy.complex_verb_count),
              d(sy.sophisticated_adjective_count),
              d(se.emotion_word_count),
              se.polarity,
              se.subjectivity,
              se.vader_compound,
              rd.flesch_reading_ease,
              rd.gunning_fog,
              d(en.first_person_count),
              d(en.direct_address_count),
              d(en.person_entities),
              d(en.date_entities),
              d(un.unique_ngram_count),
              un.syntax_variety};
  return v;
}

inline FeatureVector extract_all(const Document& doc, const LexiconSet& lex) {
  return assemble(lexical_features(doc), syntactic_features(doc, lex),
                  sentiment_features(doc, lex), readability_features(doc),
                  entity_features(doc, lex), uniqueness_features(doc, lex));
}

inline FeatureVector extract_all(std::string text, const LexiconSet& lex) {
  return extract_all(Document(std::move(text)), lex);
}

// ------------------------------------------------------------- serialization

// Counts are written as integers, everything else as the shortest
// round-tripping decimal.
inline nlohmann::ordered_json to_json(const FeatureVector& v) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    const auto& info = kFeatureInfo[i];
    if (info.is_count) {
      j[std::string(info.name)] = static_cast<std::uint64_t>(v.values[i]);
    } else {
      j[std::string(info.name)] = v.values[i];
    }
  }
  return j;
}

template <typename Json>
FeatureVector feature_vector_from_json(const Json& j) {
  FeatureVector v;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    const std::string name(kFeatureInfo[i].name);
    if (!j.contains(name) || !j.at(name).is_number()) {
      throw Error("feature vector JSON lacks numeric '" + name + "'");
    }
    v.values[i] = j.at(name).template get<double>();
  }
  return v;
}

inline std::string format_feature(const FeatureVector& v, std::size_t i) {
  if (kFeatureInfo[i].is_count) return std::to_string(static_cast<std::uint64_t>(v.values[i]));
  return detail::format_double(v.values[i]);
}

inline std::string csv_header() {
  std::string out;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (i) out += ',';
    out += kFeatureInfo[i].name;
  }
  return out;
}

inline std::string csv_row(const FeatureVector& v) {
  std::string out;
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    if (i) out += ',';
    out += format_feature(v, i);
  }
  return out;
}

}  // namespace stylopsy
