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


// Library walkthrough: features for one text, a forest trained on the toy
// corpus, and the explained verdict.

#include <iostream>
#include <string>

#include "stylopsy/corpus.hpp"
#include "stylopsy/model.hpp"
#include "stylopsy/psychmap.hpp"
#include "stylopsy/synthetic.hpp"

int main() {
  using namespace stylopsy;
  const auto lex = builtin_lexicons();

  const std::string text =
      "I can't believe it's raining again! Why didn't you bring the umbrella? "
      "We walked to the old harbor anyway.";
  const auto v = extract_all(text, lex);
  std::cout << "features:\n" << to_json(v).dump(2) << "\n\n";

  const auto corpus = synthetic_corpus(100, 100, 7);
  const auto parts = split(corpus, 0.2, 7);
  const auto train = to_examples(parts.train, lex);

  ForestParams params;
  params.trees = 50;
  params.seed = 7;
  auto model = train_forest(train, params);
  std::vector<FeatureVector> vectors;
  for (const auto& e : train) vectors.push_back(e.x);
  model.reference = compute_reference_stats(vectors);

  std::cout << "held-out: " << to_json(evaluate(model, parts.test, lex)).dump() << "\n\n";

  const auto p = predict(model, v);
  std::cout << "verdict: " << label_name(p.label) << " (p_ai = " << p.score << ")\n\n";
  std::cout << to_markdown(profile(v, *model.reference));
  return 0;
}
