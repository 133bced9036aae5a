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

// Feature-to-theory mapping and per-document psycholinguistic profiles.
//
// Each mapped feature is standardized against a reference corpus
// (z = (x - mean) / sd, 0 when sd = 0) and a theory's score is the plain mean
// of its features' z-scores. A feature listed under two theories counts fully
// toward both. The profile is an interpretive aid, not a psychological
// measurement.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "stylopsy/error.hpp"
#include "stylopsy/features.hpp"

namespace stylopsy {

enum class Theory { kCognitiveLoad, kMetacognition, kLexicalAccess, kDiscoursePlanning };

inline constexpr std::array<Theory, 4> kTheories = {
    Theory::kCognitiveLoad, Theory::kMetacognition, Theory::kLexicalAccess,
    Theory::kDiscoursePlanning};

inline constexpr std::string_view theory_name(Theory t) {
  switch (t) {
    case Theory::kCognitiveLoad: return "Cognitive Load";
    case Theory::kMetacognition: return "Metacognition & Self-Monitoring";
    case Theory::kLexicalAccess: return "Lexical Access & Retrieval";
    case Theory::kDiscoursePlanning: return "Discourse Planning & Cohesion";
  }
  return "";
}

inline constexpr std::string_view theory_key(Theory t) {
  switch (t) {
    case Theory::kCognitiveLoad: return "cognitive_load";
    case Theory::kMetacognition: return "metacognition";
    case Theory::kLexicalAccess: return "lexical_access";
    case Theory::kDiscoursePlanning: return "discourse_planning";
  }
  return "";
}

struct MappingEntry {
  Category category;
  Theory theory;
  std::size_t count;  // as tabulated; equals features.size()
  std::vector<Feature> features;
};

struct TheoryMapping {
  std::vector<MappingEntry> entries;

  std::vector<Feature> lookup(Category c, Theory t) const {
    for (const auto& e : entries) {
      if (e.category == c && e.theory == t) return e.features;
    }
    return {};
  }

  // Features of a theory across all categories, first occurrence order.
  std::vector<Feature> features_of(Theory t) const {
    std::vector<Feature> out;
    for (const auto& e : entries) {
      if (e.theory != t) continue;
      for (Feature f : e.features) {
        if (std::find(out.begin(), out.end(), f) == out.end()) out.push_back(f);
      }
    }
    return out;
  }

  bool is_mapped(Feature f) const {
    return std::any_of(entries.begin(), entries.end(), [f](const MappingEntry& e) {
      return std::find(e.features.begin(), e.features.end(), f) != e.features.end();
    });
  }
};

inline const TheoryMapping& mapping_table() {
  using C = Category;
  using T = Theory;
  using F = Feature;
  static const TheoryMapping table{{
      {C::kLexical, T::kCognitiveLoad, 1, {F::kWordCount}},
      {C::kLexical, T::kMetacognition, 1, {F::kHapaxLegomenonRate}},
      {C::kLexical, T::kLexicalAccess, 4,
       {F::kUniqueWordCount, F::kTtr, F::kAvgWordLength, F::kHapaxLegomenonRate}},
      {C::kLexical, T::kDiscoursePlanning, 1, {F::kCharCount}},
      {C::kSyntactic, T::kCognitiveLoad, 2, {F::kAvgSentenceLength, F::kComplexSentenceCount}},
      {C::kSyntactic, T::kMetacognition, 3,
       {F::kPunctuationCount, F::kQuestionCount, F::kContractionCount}},
      {C::kSyntactic, T::kDiscoursePlanning, 1, {F::kComplexSentenceCount}},
      {C::kUniqueness, T::kDiscoursePlanning, 1, {F::kSyntaxVariety}},
      {C::kSentiment, T::kCognitiveLoad, 1, {F::kSubjectivity}},
      {C::kSentiment, T::kMetacognition, 2, {F::kEmotionWordCount, F::kVaderCompound}},
      {C::kReadability, T::kCognitiveLoad, 1, {F::kGunningFog}},
      {C::kReadability, T::kMetacognition, 1, {F::kGunningFog}},
      {C::kReadability, T::kDiscoursePlanning, 1, {F::kFleschReadingEase}},
      {C::kNamedEntity, T::kMetacognition, 1, {F::kFirstPersonCount}},
      {C::kNamedEntity, T::kDiscoursePlanning, 1, {F::kDirectAddressCount}},
  }};
  return table;
}

// One line per feature: what it measures and the process it is read as a
// trace of.
inline constexpr std::array<std::string_view, kFeatureCount> kFeatureRationale = {
    "Length of the text in words; a rough gauge of how much content the writer produced under "
    "the working-memory budget of the task.",
    "Size of the vocabulary actually used; wider vocabularies point to broad retrieval from the "
    "mental lexicon.",
    "Length of the text in characters; longer texts give more room for structured argument.",
    "Mean word length; longer words suggest technical or abstract vocabulary, shorter ones a "
    "writer economizing under load.",
    "Share of distinct words; high values mean varied retrieval and a writer watching for "
    "repetition.",
    "Share of words used exactly once; tracks one-off, context-specific word choices and "
    "deliberate avoidance of redundancy.",
    "Number of sentences; reflects how ideas are chunked for the reader.",
    "Words per sentence; long sentences take more planning, short ones can mark simplification.",
    "Punctuation marks; the writer's control over boundaries and rhythm.",
    "Function words; the grammatical glue that keeps the text fluent and connected.",
    "Sentences with more than one clause; several ideas held and linked at once.",
    "Questions; rhetorical engagement with an imagined reader.",
    "Exclamations; emphasis and spontaneity.",
    "Contractions; register awareness and a relaxed, adjusted tone.",
    "Abstract nouns; reasoning at the level of concepts rather than concrete things.",
    "Infrequent derived verbs; precise, expert word choice.",
    "Long derived adjectives; effortful, precise description.",
    "Emotion-laden words; affective involvement in what is written.",
    "Mean sentiment polarity; the positive or negative lean of the argument.",
    "Mean subjectivity; how much personal stance colours the text.",
    "Normalized sentiment sum; the overall emotional balance.",
    "Flesch reading ease; how far the writer tuned difficulty for the audience.",
    "Gunning fog index; the balance between depth and clarity.",
    "First-person pronouns; the writer referring to themselves.",
    "Second-person pronouns; addressing the reader directly.",
    "Capitalized name-like tokens; grounding in specific people and places.",
    "Dates, years and month names; anchoring in time.",
    "Word pairs and triples used only once; fresh phrasing rather than stock sequences.",
    "Distinct sentence shapes per sentence; structural flexibility across the text.",
};

inline std::string_view rationale(Feature f) { return kFeatureRationale[index_of(f)]; }

// ---------------------------------------------------------------- statistics

struct ReferenceStats {
  std::array<double, kFeatureCount> mean{};
  std::array<double, kFeatureCount> stddev{};  // sample sd (n - 1); 0 for constant features

  friend bool operator==(const ReferenceStats&, const ReferenceStats&) = default;
};

inline ReferenceStats compute_reference_stats(std::span<const FeatureVector> vectors) {
  if (vectors.size() < 2) {
    throw InsufficientData("reference statistics need at least 2 feature vectors, got " +
                           std::to_string(vectors.size()));
  }
  ReferenceStats stats;
  const auto n = static_cast<double>(vectors.size());
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    double sum = 0;
    for (const auto& v : vectors) sum += v.values[i];
    const double mean = sum / n;
    double ss = 0;
    for (const auto& v : vectors) ss += (v.values[i] - mean) * (v.values[i] - mean);
    stats.mean[i] = mean;
    stats.stddev[i] = std::sqrt(ss / (n - 1));
  }
  return stats;
}

inline double z_score(const FeatureVector& v, const ReferenceStats& stats, Feature f) {
  const auto i = index_of(f);
  return stats.stddev[i] == 0 ? 0.0 : (v.values[i] - stats.mean[i]) / stats.stddev[i];
}

// ------------------------------------------------------------------- profile

struct Contribution {
  Feature feature;
  double value;
  double z;
};

struct TheoryScore {
  Theory theory;
  double score;
  std::vector<Contribution> contributions;
};

struct PsychProfile {
  std::vector<TheoryScore> theories;   // kTheories order
  std::vector<Contribution> unmapped;  // features with no theory, feature order

  const TheoryScore& at(Theory t) const {
    for (const auto& ts : theories) {
      if (ts.theory == t) return ts;
    }
    throw Error("theory missing from profile");
  }

  Theory strongest() const {
    const auto it = std::max_element(theories.begin(), theories.end(),
                                     [](const auto& a, const auto& b) { return a.score < b.score; });
    return it->theory;
  }
};

inline PsychProfile profile(const FeatureVector& v, const ReferenceStats& stats) {
  const auto& table = mapping_table();
  PsychProfile p;
  for (Theory t : kTheories) {
    TheoryScore ts{t, 0.0, {}};
    double sum = 0;
    for (Feature f : table.features_of(t)) {
      const double z = z_score(v, stats, f);
      ts.contributions.push_back({f, v[f], z});
      sum += z;
    }
    if (!ts.contributions.empty()) ts.score = sum / static_cast<double>(ts.contributions.size());
    p.theories.push_back(std::move(ts));
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    const auto f = static_cast<Feature>(i);
    if (!table.is_mapped(f)) p.unmapped.push_back({f, v[f], z_score(v, stats, f)});
  }
  return p;
}

// ------------------------------------------------------------- serialization

inline constexpr std::string_view kProfileDisclaimer =
    "Theory scores are mean z-scores against the reference corpus. They are an interpretive "
    "lens on style, not a validated psychological measurement.";

inline nlohmann::ordered_json to_json(const Contribution& c) {
  nlohmann::ordered_json j;
  j["feature"] = std::string(feature_name(c.feature));
  j["value"] = c.value;
  j["z"] = c.z;
  j["rationale"] = std::string(rationale(c.feature));
  return j;
}

inline nlohmann::ordered_json to_json(const PsychProfile& p) {
  nlohmann::ordered_json j;
  j["note"] = std::string(kProfileDisclaimer);
  auto theories = nlohmann::ordered_json::array();
  for (const auto& ts : p.theories) {
    nlohmann::ordered_json t;
    t["theory"] = std::string(theory_key(ts.theory));
    t["name"] = std::string(theory_name(ts.theory));
    t["score"] = ts.score;
    auto contributions = nlohmann::ordered_json::array();
    for (const auto& c : ts.contributions) contributions.push_back(to_json(c));
    t["features"] = std::move(contributions);
    theories.push_back(std::move(t));
  }
  j["theories"] = std::move(theories);
  auto unmapped = nlohmann::ordered_json::array();
  for (const auto& c : p.unmapped) {
    auto cj = to_json(c);
    cj["category"] = std::string(category_name(feature_category(c.feature)));
    unmapped.push_back(std::move(cj));
  }
  j["category_level"] = std::move(unmapped);
  return j;
}

inline nlohmann::ordered_json to_json(const ReferenceStats& s) {
  nlohmann::ordered_json j;
  j["mean"] = s.mean;
  j["stddev"] = s.stddev;
  return j;
}

template <typename Json>
ReferenceStats reference_stats_from_json(const Json& j) {
  ReferenceStats s;
  const auto& mean = j.at("mean");
  const auto& sd = j.at("stddev");
  if (!mean.is_array() || !sd.is_array() || mean.size() != kFeatureCount ||
      sd.size() != kFeatureCount) {
    throw Error("reference stats must hold " + std::to_string(kFeatureCount) + " means and sds");
  }
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    s.mean[i] = mean.at(i).template get<double>();
    s.stddev[i] = sd.at(i).template get<double>();
  }
  return s;
}

// Same number formatting as the JSON rendering, so both carry identical digits.
inline std::string json_number(double x) { return nlohmann::json(x).dump(); }

inline std::string to_markdown(const PsychProfile& p) {
  std::string md = "## Psycholinguistic profile\n\n";
  md += "_" + std::string(kProfileDisclaimer) + "_\n\n";
  for (const auto& ts : p.theories) {
    md += "### " + std::string(theory_name(ts.theory)) + ": " + json_number(ts.score) + "\n\n";
    md += "| feature | value | z | rationale |\n|---|---|---|---|\n";
    for (const auto& c : ts.contributions) {
      md += "| " + std::string(feature_name(c.feature)) + " | " + json_number(c.value) + " | " +
            json_number(c.z) + " | " + std::string(rationale(c.feature)) + " |\n";
    }
    md += "\n";
  }
  md += "### Category-level rationale (no theory mapping)\n\n";
  md += "| feature | category | value | z | rationale |\n|---|---|---|---|---|\n";
  for (const auto& c : p.unmapped) {
    md += "| " + std::string(feature_name(c.feature)) + " | " +
          std::string(category_name(feature_category(c.feature))) + " | " + json_number(c.value) +
          " | " + json_number(c.z) + " | " + std::string(rationale(c.feature)) + " |\n";
  }
  return md;
}

}  // namespace stylopsy
