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

#include "stylopsy/features.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

namespace stylopsy {
namespace {

namespace fs = std::filesystem;

const LexiconSet& lex() {
  static const LexiconSet instance = builtin_lexicons();
  return instance;
}

LexiconSet tiny_sentiment_lexicon() {
  LexiconSet l = lex();
  l.sentiment = {{"good", {0.7, 0.6}}, {"terrible", {-1.0, 0.9}}};
  return l;
}

TEST(FeatureOrderTest, NamesAndCategories) {
  EXPECT_EQ(kFeatureInfo.size(), 29u);
  EXPECT_EQ(feature_name(Feature::kWordCount), "word_count");
  EXPECT_EQ(feature_name(Feature::kSyntaxVariety), "syntax_variety");
  EXPECT_EQ(feature_from_name("gunning_fog"), Feature::kGunningFog);
  EXPECT_EQ(feature_from_name("nope"), std::nullopt);
  std::array<int, 6> per_category{};
  for (const auto& info : kFeatureInfo) ++per_category[static_cast<std::size_t>(info.category)];
  EXPECT_EQ(per_category, (std::array<int, 6>{6, 11, 4, 2, 4, 2}));
}

TEST(LexicalFeaturesTest, Empty) {
  const auto f = lexical_features(Document(""));
  EXPECT_EQ(f.word_count, 0u);
  EXPECT_EQ(f.unique_word_count, 0u);
  EXPECT_EQ(f.char_count, 0u);
  EXPECT_EQ(f.avg_word_length, 0.0);
  EXPECT_EQ(f.ttr, 0.0);
  EXPECT_EQ(f.hapax_legomenon_rate, 0.0);
}

TEST(LexicalFeaturesTest, CatOnMat) {
  const auto f = lexical_features(Document("the cat sat on the mat"));
  EXPECT_EQ(f.word_count, 6u);
  EXPECT_EQ(f.unique_word_count, 5u);
  EXPECT_EQ(f.char_count, 22u);
  EXPECT_DOUBLE_EQ(f.avg_word_length, 17.0 / 6.0);
  EXPECT_DOUBLE_EQ(f.ttr, 5.0 / 6.0);
  EXPECT_DOUBLE_EQ(f.hapax_legomenon_rate, 4.0 / 6.0);
}

TEST(LexicalFeaturesTest, Repetition) {
  const auto f = lexical_features(Document("aaa aaa aaa"));
  EXPECT_DOUBLE_EQ(f.ttr, 1.0 / 3.0);
  EXPECT_EQ(f.hapax_legomenon_rate, 0.0);
}

TEST(LexicalFeaturesTest, CharCountIsCodePoints) {
  EXPECT_EQ(lexical_features(Document("caf\xC3\xA9 \xE2\x80\x94")).char_count, 6u);
}

TEST(SyntacticFeaturesTest, QuestionsAndExclamations) {
  const auto f = syntactic_features(Document("Don't stop! Why not?"), lex());
  EXPECT_EQ(f.sentence_count, 2u);
  EXPECT_EQ(f.question_count, 1u);
  EXPECT_EQ(f.exclamation_count, 1u);
  EXPECT_EQ(f.contraction_count, 1u);
  EXPECT_EQ(f.punctuation_count, 2u);  // the apostrophe belongs to "Don't"
  EXPECT_DOUBLE_EQ(f.avg_sentence_length, 2.0);
}

TEST(SyntacticFeaturesTest, ClauseMarker) {
  EXPECT_EQ(syntactic_features(Document("I left because it rained."), lex()).complex_sentence_count, 1u);
  EXPECT_EQ(syntactic_features(Document("I left early."), lex()).complex_sentence_count, 0u);
}

TEST(SyntacticFeaturesTest, CommaCoordinator) {
  EXPECT_EQ(syntactic_features(Document("She stayed, and he went."), lex()).complex_sentence_count, 1u);
  EXPECT_EQ(syntactic_features(Document("She stayed and he went."), lex()).complex_sentence_count, 0u);
  EXPECT_EQ(syntactic_features(Document("Cats, dogs, and"), lex()).complex_sentence_count, 0u);
}

TEST(SyntacticFeaturesTest, Empty) {
  const auto f = syntactic_features(Document(""), lex());
  EXPECT_EQ(f.sentence_count + f.punctuation_count + f.stop_word_count + f.complex_sentence_count +
                f.question_count + f.exclamation_count + f.contraction_count +
                f.abstract_noun_count + f.complex_verb_count + f.sophisticated_adjective_count,
            0u);
  EXPECT_EQ(f.avg_sentence_length, 0.0);
}

TEST(SyntacticFeaturesTest, SuffixCounts) {
  const auto f = syntactic_features(
      Document("The nation needs happiness and a carefully crystallize and famous ionic oxidize."),
      lex());
  EXPECT_EQ(f.abstract_noun_count, 2u);     // nation, happiness
  EXPECT_EQ(f.complex_verb_count, 2u);      // crystallize, oxidize
  EXPECT_EQ(f.sophisticated_adjective_count, 0u);  // famous/ionic are too short
  EXPECT_EQ(syntactic_features(Document("innovative ambiguous"), lex()).sophisticated_adjective_count, 2u);
}

TEST(SyntacticFeaturesTest, ContractionsWithoutListEntry) {
  LexiconSet l = lex();
  l.contractions.clear();
  EXPECT_EQ(syntactic_features(Document("We mustn't, y'all can't"), l).contraction_count, 2u);
}

TEST(SentimentFeaturesTest, NoMatches) {
  const auto f = sentiment_features(Document("zyzzyva qwerty"), tiny_sentiment_lexicon());
  EXPECT_EQ(f.polarity, 0.0);
  EXPECT_EQ(f.subjectivity, 0.0);
  EXPECT_EQ(f.vader_compound, 0.0);
}

TEST(SentimentFeaturesTest, GoodGood) {
  const auto f = sentiment_features(Document("good good"), tiny_sentiment_lexicon());
  EXPECT_DOUBLE_EQ(f.polarity, 0.7);
  EXPECT_DOUBLE_EQ(f.subjectivity, 0.6);
  EXPECT_NEAR(f.vader_compound, 1.4 / std::sqrt(16.96), 1e-12);
  EXPECT_NEAR(f.vader_compound, 0.33995, 5e-6);
}

TEST(SentimentFeaturesTest, GoodTerrible) {
  const auto f = sentiment_features(Document("good terrible"), tiny_sentiment_lexicon());
  EXPECT_NEAR(f.polarity, -0.15, 1e-12);
  EXPECT_NEAR(f.subjectivity, 0.75, 1e-12);
  EXPECT_NEAR(f.vader_compound, -0.3 / std::sqrt(15.09), 1e-12);
  EXPECT_NEAR(f.vader_compound, -0.07723, 5e-6);
}

TEST(SentimentFeaturesTest, CompoundStaysOpen) {
  EXPECT_LT(compound_score(1e200), 1.0);
  EXPECT_GT(compound_score(-1e200), -1.0);
  EXPECT_EQ(compound_score(0.0), 0.0);
}

TEST(SentimentFeaturesTest, EmotionWords) {
  EXPECT_EQ(sentiment_features(Document("I love this, it is wonderful"), lex()).emotion_word_count, 2u);
}

TEST(ReadabilityFeaturesTest, Empty) {
  const auto f = readability_features(Document(""));
  EXPECT_EQ(f.flesch_reading_ease, 0.0);
  EXPECT_EQ(f.gunning_fog, 0.0);
}

TEST(ReadabilityFeaturesTest, CatOnMat) {
  const auto f = readability_features(Document("the cat sat on the mat"));
  EXPECT_NEAR(f.flesch_reading_ease, 116.145, 1e-9);
  EXPECT_NEAR(f.gunning_fog, 2.4, 1e-9);
}

TEST(ReadabilityFeaturesTest, SyntheticCounts) {
  const auto f = readability_from_counts(100, 5, 150, 10);
  EXPECT_NEAR(f.flesch_reading_ease, 59.635, 1e-9);
  EXPECT_NEAR(f.gunning_fog, 12.0, 1e-9);
}

TEST(ReadabilityFeaturesTest, FleschIsNotClamped) {
  EXPECT_GT(readability_features(Document("I go. I go. I go.")).flesch_reading_ease, 100.0);
  EXPECT_LT(readability_features(Document("Internationalization incomprehensibility "
                                          "institutionalization counterrevolutionary"))
                .flesch_reading_ease,
            0.0);
}

TEST(EntityFeaturesTest, Pronouns) {
  const auto f = entity_features(Document("I told you my plan."), lex());
  EXPECT_EQ(f.first_person_count, 2u);
  EXPECT_EQ(f.direct_address_count, 1u);
}

TEST(EntityFeaturesTest, PersonHeuristic) {
  EXPECT_EQ(entity_features(Document("Yesterday Alice met Bob."), lex()).person_entities, 2u);
  EXPECT_EQ(entity_features(Document("Alice met NASA and The people."), lex()).person_entities, 0u);
}

TEST(EntityFeaturesTest, Dates) {
  EXPECT_EQ(entity_features(Document("In March 2021 it rained."), lex()).date_entities, 2u);
  EXPECT_EQ(entity_features(Document("Due 12/05/2021 or 3-4-22."), lex()).date_entities, 2u);
  EXPECT_EQ(entity_features(Document("pi is 3.1415 and 1,500 people; 2020-2021"), lex()).date_entities, 0u);
  EXPECT_EQ(entity_features(Document("You may march in May"), lex()).date_entities, 1u);
  EXPECT_EQ(entity_features(Document("year 999 or 3000 or 1066"), lex()).date_entities, 1u);
  EXPECT_EQ(entity_features(Document("12/05-2021 A2021 2021b"), lex()).date_entities, 0u);
}

TEST(UniquenessFeaturesTest, Examples) {
  EXPECT_EQ(uniqueness_features(Document(""), lex()).unique_ngram_count, 0u);
  EXPECT_EQ(uniqueness_features(Document(""), lex()).syntax_variety, 0.0);
  EXPECT_EQ(uniqueness_features(Document("a b a b"), lex()).unique_ngram_count, 3u);
  EXPECT_DOUBLE_EQ(uniqueness_features(Document("Hi there. Hi there."), lex()).syntax_variety, 0.5);
}

TEST(SentenceSignatureTest, OpenerClasses) {
  const Document doc("I go. You go. Why go? The end! Zebras run");
  std::vector<OpenerClass> classes;
  for (const auto& s : doc.sentences()) classes.push_back(sentence_signature(doc, s, lex()).opener_class);
  EXPECT_EQ(classes, (std::vector<OpenerClass>{OpenerClass::kFirstPerson, OpenerClass::kSecondPerson,
                                               OpenerClass::kQuestionWord, OpenerClass::kStopword,
                                               OpenerClass::kOther}));
  const auto& last = doc.sentences().back();
  EXPECT_EQ(sentence_signature(doc, last, lex()).terminator, std::nullopt);
  EXPECT_EQ(sentence_signature(doc, last, lex()).length_bucket, LengthBucket::k1To5);
}

TEST(ExtractAllTest, EmptyIsAllZero) {
  EXPECT_EQ(extract_all(Document(""), lex()), FeatureVector{});
}

TEST(ExtractAllTest, CompositionLaw) {
  for (const char* text : {"the cat sat on the mat", "Don't stop! Why not?",
                           "Yesterday Alice met Bob in March 2021, and left."}) {
    const Document doc(text);
    const auto v = extract_all(doc, lex());
    EXPECT_EQ(v, assemble(lexical_features(doc), syntactic_features(doc, lex()),
                          sentiment_features(doc, lex()), readability_features(doc),
                          entity_features(doc, lex()), uniqueness_features(doc, lex())));
  }
  const auto v = extract_all(Document("the cat sat on the mat"), lex());
  EXPECT_EQ(v[Feature::kWordCount], 6.0);
  EXPECT_EQ(v[Feature::kUniqueWordCount], 5.0);
  EXPECT_EQ(v[Feature::kCharCount], 22.0);
  EXPECT_DOUBLE_EQ(v[Feature::kTtr], 5.0 / 6.0);
}

// Golden vectors frozen from tests/oracle/feature_oracle.py.
TEST(ExtractAllTest, MatchesOracleGoldens) {
  std::ifstream in(fs::path(STYLOPSY_TEST_DATA_DIR) / "golden_features.json");
  ASSERT_TRUE(in);
  const auto golden = nlohmann::json::parse(in);
  ASSERT_EQ(golden.size(), 20u);
  for (const auto& [name, expected] : golden.items()) {
    std::ifstream text_in(fs::path(STYLOPSY_TEST_DATA_DIR) / "texts" / (name + ".txt"), std::ios::binary);
    std::stringstream ss;
    ss << text_in.rdbuf();
    const auto v = extract_all(Document(ss.str()), lex());
    for (std::size_t i = 0; i < kFeatureCount; ++i) {
      const auto& info = kFeatureInfo[i];
      const double want = expected.at(std::string(info.name)).get<double>();
      if (info.is_count) {
        EXPECT_EQ(v.values[i], want) << name << " " << info.name;
      } else {
        EXPECT_NEAR(v.values[i], want, 1e-9) << name << " " << info.name;
      }
    }
  }
}

TEST(SerializationTest, JsonAndCsv) {
  const auto v = extract_all(Document("the cat sat on the mat"), lex());
  const auto j = to_json(v);
  EXPECT_EQ(j.begin().key(), "word_count");
  EXPECT_EQ(j.dump().find("\"word_count\":6,"), 1u);
  EXPECT_EQ(feature_vector_from_json(j), v);
  EXPECT_EQ(csv_header().substr(0, 28), "word_count,unique_word_count");
  EXPECT_EQ(csv_row(v).substr(0, 7), "6,5,22,");
  EXPECT_THROW(feature_vector_from_json(nlohmann::json::object()), Error);
}

TEST(FeatureOrderHashTest, StableValue) {
  EXPECT_EQ(feature_order_hash(), feature_order_hash());
  EXPECT_NE(feature_order_hash(), 0u);
}

// ------------------------------------------------------------------ properties

std::string random_unicode(std::mt19937_64& rng, std::size_t max_cps) {
  std::uniform_int_distribution<std::size_t> len(0, max_cps);
  std::uniform_int_distribution<int> kind(0, 9);
  std::string s;
  for (std::size_t n = len(rng); n > 0; --n) {
    char32_t cp;
    switch (kind(rng)) {
      case 0: case 1: case 2: cp = U'a' + rng() % 26; break;
      case 3: cp = U'A' + rng() % 26; break;
      case 4: cp = U" \n\t"[rng() % 3]; break;
      case 5: cp = U".!?,'-;\""[rng() % 8]; break;
      case 6: cp = U'0' + rng() % 10; break;
      case 7: cp = 0x80 + rng() % (0x800 - 0x80); break;
      case 8: cp = 0x800 + rng() % (0xD800 - 0x800); break;
      default: cp = 0x10000 + rng() % (0x10FFFF - 0x10000); break;
    }
    detail::append_utf8(s, cp);
  }
  return s;
}

void expect_vector_invariants(const FeatureVector& v, const std::string& text) {
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    ASSERT_TRUE(std::isfinite(v.values[i])) << kFeatureInfo[i].name << " " << text;
    if (kFeatureInfo[i].is_count) {
      ASSERT_GE(v.values[i], 0.0);
      ASSERT_EQ(v.values[i], std::floor(v.values[i]));
    }
  }
  auto in = [&](Feature f, double lo, double hi) {
    ASSERT_GE(v[f], lo) << feature_name(f);
    ASSERT_LE(v[f], hi) << feature_name(f);
  };
  in(Feature::kTtr, 0, 1);
  in(Feature::kHapaxLegomenonRate, 0, 1);
  in(Feature::kSubjectivity, 0, 1);
  in(Feature::kPolarity, -1, 1);
  in(Feature::kSyntaxVariety, 0, 1);
  ASSERT_GT(v[Feature::kVaderCompound], -1.0);
  ASSERT_LT(v[Feature::kVaderCompound], 1.0);
  ASSERT_LE(v[Feature::kUniqueWordCount], v[Feature::kWordCount]);
  ASSERT_LE(v[Feature::kQuestionCount] + v[Feature::kExclamationCount], v[Feature::kPunctuationCount]);
}

TEST(FeatureProperties, RangesOnRandomUnicode) {
  std::mt19937_64 rng(2024);
  for (int iter = 0; iter < 400; ++iter) {
    const auto text = random_unicode(rng, 120);
    expect_vector_invariants(extract_all(Document(text), lex()), text);
  }
}

TEST(FeatureProperties, ScaleLaw) {
  std::mt19937_64 rng(77);
  for (int iter = 0; iter < 200; ++iter) {
    // a trailing separator keeps the copies from fusing at the seam
    const auto text = random_unicode(rng, 80) + " ";
    const auto once = extract_all(Document(text), lex());
    const auto twice = extract_all(Document(text + text), lex());
    ASSERT_EQ(twice[Feature::kWordCount], 2 * once[Feature::kWordCount]);
    ASSERT_EQ(twice[Feature::kCharCount], 2 * once[Feature::kCharCount]);
    ASSERT_LE(twice[Feature::kTtr], once[Feature::kTtr]);
    if (once[Feature::kWordCount] > 0) {
      ASSERT_NEAR(twice[Feature::kAvgWordLength], once[Feature::kAvgWordLength], 1e-12);
    }
  }
}

}  // namespace
}  // namespace stylopsy
