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

// Seeded generator for a two-class toy corpus. "AI-like" texts reuse a small
// vocabulary in one declarative template with no contractions; "human-like"
// texts draw from a wider vocabulary, mix questions, exclamations and
// first/second-person openers, and use contractions. Useful for smoke tests
// and demos; it says nothing about real AI-generated text.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "stylopsy/corpus.hpp"
#include "stylopsy/random.hpp"

namespace stylopsy {

namespace detail {

template <std::size_t N>
std::string_view pick(const std::array<std::string_view, N>& pool, Xoshiro256& rng) {
  return pool[rng.uniform_index(N)];
}

inline constexpr std::array<std::string_view, 10> kAiNouns = {
    "system", "process", "approach", "solution", "framework",
    "strategy", "platform", "method", "model", "result"};
inline constexpr std::array<std::string_view, 8> kAiAdjectives = {
    "effective", "important", "efficient", "robust", "significant", "reliable", "scalable", "valuable"};
inline constexpr std::array<std::string_view, 6> kAiVerbs = {
    "provides", "ensures", "supports", "enhances", "improves", "enables"};

inline constexpr std::array<std::string_view, 60> kHumanNouns = {
    "dog", "kitchen", "bus", "neighbor", "garden", "letter", "storm", "coffee", "bike", "window",
    "uncle", "market", "river", "song", "ticket", "jacket", "lamp", "bakery", "hill", "boat",
    "cousin", "train", "book", "door", "roof", "picnic", "mountain", "shoe", "sandwich", "radio",
    "park", "teacher", "camera", "island", "candle", "beach", "pencil", "fence", "guitar", "chair",
    "puddle", "bridge", "parrot", "festival", "wallet", "ladder", "village", "blanket", "cloud", "garage",
    "kettle", "lake", "tractor", "museum", "violin", "carpet", "harbor", "orchard", "tunnel", "piano"};
inline constexpr std::array<std::string_view, 40> kHumanVerbs = {
    "found", "broke", "painted", "lost", "fixed", "carried", "watched", "dropped", "cleaned", "borrowed",
    "climbed", "hid", "sold", "dragged", "opened", "missed", "followed", "kicked", "wrapped", "tasted",
    "chased", "folded", "grabbed", "heard", "moved", "pushed", "sketched", "tossed", "visited", "washed",
    "buried", "counted", "filled", "hugged", "locked", "measured", "noticed", "packed", "repaired", "swapped"};
inline constexpr std::array<std::string_view, 30> kHumanAdjectives = {
    "muddy", "loud", "tiny", "crooked", "sunny", "rusty", "sleepy", "bright", "soggy", "odd",
    "chilly", "dusty", "fuzzy", "grumpy", "shiny", "wobbly", "noisy", "quiet", "sticky", "green",
    "heavy", "lucky", "messy", "narrow", "plain", "rough", "salty", "tall", "warm", "wild"};
inline constexpr std::array<std::string_view, 12> kContractions = {
    "don't", "can't", "it's", "I'm", "we're", "didn't", "wasn't", "you're", "isn't", "that's", "I've", "won't"};
inline constexpr std::array<std::string_view, 6> kExclaimers = {
    "That's", "It's", "Isn't that", "Wasn't it", "You're", "We're"};
inline constexpr std::array<std::string_view, 4> kQuestionWords = {"what", "why", "how", "where"};

inline std::string capitalize(std::string_view w) {
  std::string s(w);
  if (!s.empty() && s[0] >= 'a' && s[0] <= 'z') s[0] = static_cast<char>(s[0] - 'a' + 'A');
  return s;
}

inline std::string ai_sentence(Xoshiro256& rng) {
  return "The " + std::string(pick(kAiNouns, rng)) + " " + std::string(pick(kAiVerbs, rng)) + " a " +
         std::string(pick(kAiAdjectives, rng)) + " and " + std::string(pick(kAiAdjectives, rng)) + " " +
         std::string(pick(kAiNouns, rng)) + ".";
}

inline std::string human_sentence(Xoshiro256& rng) {
  std::string s;
  switch (rng.uniform_index(5)) {
    case 0:
      s = "I " + std::string(pick(kHumanVerbs, rng)) + " the " + std::string(pick(kHumanAdjectives, rng)) +
          " " + std::string(pick(kHumanNouns, rng));
      break;
    case 1:
      s = capitalize(pick(kQuestionWords, rng)) + " is the " + std::string(pick(kHumanAdjectives, rng)) + " " +
          std::string(pick(kHumanNouns, rng)) + " near the " + std::string(pick(kHumanNouns, rng));
      return s + "?";
    case 2:
      s = "You " + std::string(pick(kHumanVerbs, rng)) + " my " + std::string(pick(kHumanNouns, rng));
      break;
    case 3:
      s = std::string(pick(kExclaimers, rng)) + " so " + std::string(pick(kHumanAdjectives, rng));
      return s + "!";
    default:
      s = "Our " + std::string(pick(kHumanAdjectives, rng)) + " " + std::string(pick(kHumanNouns, rng)) +
          " " + std::string(pick(kHumanVerbs, rng)) + " a " + std::string(pick(kHumanNouns, rng)) +
          " by the " + std::string(pick(kHumanNouns, rng)) + " and " + std::string(pick(kContractions, rng)) +
          " " + std::string(pick(kHumanAdjectives, rng));
      break;
  }
  return s + (rng.uniform_index(4) == 0 ? "!" : ".");
}

}  // namespace detail

inline std::string synthetic_ai_text(Xoshiro256& rng) {
  std::string text;
  const auto sentences = 5 + rng.uniform_index(4);
  for (std::size_t i = 0; i < sentences; ++i) text += (i ? " " : "") + detail::ai_sentence(rng);
  return text;
}

inline std::string synthetic_human_text(Xoshiro256& rng) {
  std::string text;
  const auto sentences = 4 + rng.uniform_index(5);
  for (std::size_t i = 0; i < sentences; ++i) text += (i ? " " : "") + detail::human_sentence(rng);
  return text;
}

// Human records first, then AI; ids "h0001".., "a0001"..; source "synthetic".
inline std::vector<CorpusRecord> synthetic_corpus(std::size_t humans, std::size_t ais, std::uint64_t seed) {
  std::vector<CorpusRecord> out;
  auto human_rng = stream_rng(seed, 0);
  auto ai_rng = stream_rng(seed, 1);
  auto id = [](char prefix, std::size_t i) {
    std::string n = std::to_string(i + 1);
    return std::string(1, prefix) + std::string(n.size() < 4 ? 4 - n.size() : 0, '0') + n;
  };
  for (std::size_t i = 0; i < humans; ++i) {
    out.push_back({id('h', i), synthetic_human_text(human_rng), Label::kHuman, "synthetic"});
  }
  for (std::size_t i = 0; i < ais; ++i) {
    out.push_back({id('a', i), synthetic_ai_text(ai_rng), Label::kAI, "synthetic"});
  }
  return out;
}

}  // namespace stylopsy
