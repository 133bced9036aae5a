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

#include "stylopsy/model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <vector>

#include "stylopsy/random.hpp"

namespace stylopsy {
namespace {

using F = Feature;

Example make(double x, Label y, F f = F::kWordCount) {
  Example e{{}, y};
  e.x[f] = x;
  return e;
}

std::vector<Example> separable() {
  std::vector<Example> d;
  for (int i = 0; i < 10; ++i) {
    d.push_back(make(0, Label::kHuman));
    d.push_back(make(1, Label::kAI));
  }
  return d;
}

// Noisy two-class data over all features; class shifts a handful of them.
std::vector<Example> random_data(std::uint64_t seed, std::size_t n) {
  Xoshiro256 rng(seed);
  std::vector<Example> d;
  for (std::size_t i = 0; i < n; ++i) {
    Example e{{}, i % 2 ? Label::kAI : Label::kHuman};
    for (auto& v : e.x.values) v = rng.uniform01() * 10;
    if (e.y == Label::kAI) {
      e.x[F::kTtr] += 3;
      e.x[F::kContractionCount] -= 2;
    }
    d.push_back(e);
  }
  return d;
}

FeatureVector random_vector(Xoshiro256& rng) {
  FeatureVector v;
  for (auto& x : v.values) x = rng.uniform01() * 14 - 2;
  return v;
}

// ------------------------------------------------------------------- random

TEST(RandomTest, ReferenceStream) {
  // seed 0 through splitmix64 then xoshiro256**; values from a Python transcription
  Xoshiro256 rng(0);
  EXPECT_EQ(rng.next(), 0x99ec5f36cb75f2b4ULL);
  EXPECT_EQ(rng.next(), 0xbf6e1f784956452aULL);
  EXPECT_EQ(rng.next(), 0x1a5f849d4933e6e0ULL);
}

TEST(RandomTest, UniformIndexInRangeAndCoversAll) {
  Xoshiro256 rng(3);
  std::array<int, 7> seen{};
  for (int i = 0; i < 7000; ++i) {
    const auto k = rng.uniform_index(7);
    ASSERT_LT(k, 7u);
    ++seen[k];
  }
  for (int c : seen) EXPECT_GT(c, 800);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.uniform01();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(RandomTest, StreamsDependOnSeedAndIndex) {
  EXPECT_NE(derive_seed(1, 0), derive_seed(1, 1));
  EXPECT_NE(derive_seed(1, 0), derive_seed(2, 0));
  auto a = stream_rng(9, 4);
  auto b = stream_rng(9, 4);
  for (int i = 0; i < 10; ++i) EXPECT_EQ(a.next(), b.next());
}

// ------------------------------------------------------------------- forest

TEST(ForestTest, SeparableTrainingAccuracy) {
  const auto d = separable();
  ForestParams p;
  p.trees = 10;
  p.seed = 1;
  EXPECT_EQ(accuracy(train_forest(d, p), d), 1.0);
}

TEST(ForestTest, IdenticalFeaturesPredictMajority) {
  std::vector<Example> d;
  for (int i = 0; i < 7; ++i) d.push_back(make(2, Label::kAI));
  for (int i = 0; i < 3; ++i) d.push_back(make(2, Label::kHuman));
  ForestParams p;
  p.trees = 5;
  p.bootstrap = false;
  const auto m = train_forest(d, p);
  for (const auto& t : m.trees) {
    ASSERT_EQ(t.nodes.size(), 1u);
    EXPECT_DOUBLE_EQ(t.nodes[0].prob[1], 0.7);
  }
  EXPECT_EQ(predict(m, d[0].x).label, Label::kAI);
}

TEST(ForestTest, DeterministicAcrossRunsAndThreadCounts) {
  const auto d = random_data(42, 40);
  ForestParams p;
  p.trees = 20;
  p.seed = 42;
  p.threads = 1;
  const auto a = serialize_model(train_forest(d, p));
  p.threads = 8;
  const auto b = serialize_model(train_forest(d, p));
  const auto c = serialize_model(train_forest(d, p));
  EXPECT_EQ(a, b);
  EXPECT_EQ(b, c);
  p.seed = 43;
  EXPECT_NE(a, serialize_model(train_forest(d, p)));
}

TEST(ForestTest, Errors) {
  const auto d = separable();
  ForestParams p;
  p.trees = 0;
  EXPECT_THROW(train_forest(d, p), InvalidParams);
  p.trees = 1;
  p.max_depth = 0;
  EXPECT_THROW(train_forest(d, p), InvalidParams);
  p.max_depth = 3;
  const std::vector<Example> one_class{make(0, Label::kAI), make(1, Label::kAI)};
  EXPECT_THROW(train_forest(one_class, p), DegenerateData);
  const std::vector<Example> single{make(0, Label::kAI)};
  EXPECT_THROW(train_forest(single, p), DegenerateData);
}

TEST(ForestTest, TieBreakLowestFeatureThenThreshold) {
  // Features 3 and 5 separate perfectly; feature 3 must win with its lowest
  // perfect threshold.
  std::vector<Example> d;
  for (int i = 0; i < 4; ++i) {
    Example e{{}, i < 2 ? Label::kHuman : Label::kAI};
    e.x.values[3] = i < 2 ? 1.0 : 4.0;
    e.x.values[5] = i < 2 ? 0.0 : 1.0;
    d.push_back(e);
  }
  ForestParams p;
  p.max_features = kAllFeatures;
  Xoshiro256 rng(1);
  const auto t = train_tree(d, p, rng);
  ASSERT_FALSE(t.nodes[0].is_leaf());
  EXPECT_EQ(t.nodes[0].feature, 3);
  EXPECT_EQ(t.nodes[0].threshold, 2.5);
}

// Brute-force root split: every feature, every midpoint, weighted Gini in
// doubles. The tree's root must reach the same impurity.
TEST(ForestProperties, RootSplitMatchesBruteForce) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    Xoshiro256 rng(s);
    std::vector<Example> d;
    for (int i = 0; i < 25; ++i) {
      Example e{{}, rng.uniform_index(2) ? Label::kAI : Label::kHuman};
      for (auto& v : e.x.values) v = static_cast<double>(rng.uniform_index(6));
      d.push_back(e);
    }
    if (d.front().y == d.back().y) d.back().y = d.front().y == Label::kAI ? Label::kHuman : Label::kAI;
    double best = 1e300;
    for (std::size_t f = 0; f < kFeatureCount; ++f) {
      for (double t = 0.5; t < 5; t += 1) {
        double c[2][2] = {};
        for (const auto& e : d) c[e.x.values[f] <= t ? 0 : 1][label_index(e.y)] += 1;
        auto g = [](double a, double b) { return a + b == 0 ? 0 : a + b - (a * a + b * b) / (a + b); };
        if (c[0][0] + c[0][1] == 0 || c[1][0] + c[1][1] == 0) continue;
        best = std::min(best, g(c[0][0], c[0][1]) + g(c[1][0], c[1][1]));
      }
    }
    ForestParams p;
    p.max_features = kAllFeatures;
    p.max_depth = 1;
    auto r = Xoshiro256(s);
    const auto tree = train_tree(d, p, r);
    ASSERT_FALSE(tree.nodes[0].is_leaf());
    const auto& root = tree.nodes[0];
    double c[2][2] = {};
    for (const auto& e : d) {
      c[e.x.values[static_cast<std::size_t>(root.feature)] <= root.threshold ? 0 : 1][label_index(e.y)] += 1;
    }
    auto g = [](double a, double b) { return a + b - (a * a + b * b) / (a + b); };
    EXPECT_NEAR(g(c[0][0], c[0][1]) + g(c[1][0], c[1][1]), best, 1e-9) << "seed " << s;
  }
}

TEST(ForestProperties, StructuralInvariants) {
  const auto d = random_data(5, 120);
  ForestParams p;
  p.trees = 15;
  p.seed = 5;
  p.max_depth = 6;
  p.min_leaf = 3;
  const auto m = train_forest(d, p);
  for (const auto& t : m.trees) {
    for (std::size_t i = 0; i < t.nodes.size(); ++i) {
      const auto& n = t.nodes[i];
      EXPECT_NEAR(n.prob[0] + n.prob[1], 1.0, 1e-9);
      if (n.is_leaf()) continue;
      EXPECT_LT(n.feature, static_cast<int>(kFeatureCount));
      EXPECT_GT(n.left, i);
      EXPECT_GT(n.right, i);
    }
  }
  Xoshiro256 rng(11);
  for (int i = 0; i < 200; ++i) {
    const double s = predict(m, random_vector(rng)).score;
    ASSERT_GE(s, 0.0);
    ASSERT_LE(s, 1.0);
  }
}

TEST(ForestProperties, SingleTreeForestEqualsTree) {
  const auto d = random_data(8, 60);
  ForestParams p;
  p.trees = 1;
  p.max_features = kAllFeatures;
  p.bootstrap = false;
  p.seed = 1;
  const auto forest = train_forest(d, p);
  Xoshiro256 other(999);
  const auto tree = train_tree(d, p, other);
  EXPECT_EQ(forest.trees[0], tree);
  Xoshiro256 rng(2);
  for (int i = 0; i < 100; ++i) {
    const auto v = random_vector(rng);
    EXPECT_EQ(predict(forest, v).score, tree.leaf_for(v).prob[1]);
  }
}

TEST(ForestProperties, MonotoneFeature) {
  std::vector<Example> d;
  for (int i = 0; i < 20; ++i) {
    d.push_back(make(1.0 + i * 0.01, Label::kHuman, F::kTtr));
    d.push_back(make(3.0 + i * 0.01, Label::kAI, F::kTtr));
  }
  ForestParams p;
  p.trees = 10;
  p.seed = 3;
  const auto m = train_forest(d, p);
  EXPECT_GT(feature_importance(m).values[index_of(F::kTtr)], 0.0);
  FeatureVector lo;
  FeatureVector hi;
  lo[F::kTtr] = 0.5;
  hi[F::kTtr] = 5.0;
  EXPECT_EQ(predict(m, lo).label, Label::kHuman);
  EXPECT_EQ(predict(m, hi).label, Label::kAI);

  const auto lm = train_logistic(d, {});
  EXPECT_GT(feature_importance(lm).values[index_of(F::kTtr)], 0.0);
  EXPECT_EQ(predict(lm, lo).label, Label::kHuman);
  EXPECT_EQ(predict(lm, hi).label, Label::kAI);
}

// ----------------------------------------------------------------- logistic

TEST(LogisticTest, SeparableTrainingAccuracy) {
  const auto d = separable();
  EXPECT_EQ(accuracy(train_logistic(d, {}), d), 1.0);
}

TEST(LogisticTest, StrongL2ShrinksTowardPrior) {
  std::vector<Example> d;
  for (int i = 0; i < 30; ++i) d.push_back(make(i, i < 10 ? Label::kHuman : Label::kAI));
  LogisticParams weak;
  weak.l2 = 0;
  LogisticParams strong;
  strong.l2 = 5;
  strong.learning_rate = 0.05;
  strong.epochs = 5000;
  const auto a = train_logistic(d, weak);
  const auto b = train_logistic(d, strong);
  const auto w = index_of(F::kWordCount);
  EXPECT_LT(std::fabs(b.weights[w]), std::fabs(a.weights[w]));
  // The unpenalized bias absorbs the class prior 2/3.
  FeatureVector mid;
  mid[F::kWordCount] = 14.5;
  const double p_strong = predict(b, mid).score;
  EXPECT_NEAR(p_strong, 2.0 / 3.0, 0.05);
}

TEST(LogisticTest, GradientMatchesFiniteDifferences) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Xoshiro256 rng(s);
    StandardizedData d;
    for (int i = 0; i < 8; ++i) {
      std::array<double, kFeatureCount> x;
      for (auto& v : x) v = rng.uniform01() * 4 - 2;
      d.x.push_back(x);
      d.y.push_back(static_cast<double>(rng.uniform_index(2)));
    }
    std::array<double, kFeatureCount> w;
    for (auto& v : w) v = rng.uniform01() - 0.5;
    const double b = rng.uniform01() - 0.5;
    const double l2 = rng.uniform01() * 0.1;
    const auto g = logistic_gradient(d, w, b, l2);
    const double h = 1e-6;
    double worst = 0;
    auto rel = [](double a, double n) { return std::fabs(a - n) / std::max({std::fabs(a), std::fabs(n), 1e-8}); };
    for (std::size_t j = 0; j < kFeatureCount; ++j) {
      auto wp = w;
      auto wm = w;
      wp[j] += h;
      wm[j] -= h;
      const double num = (logistic_loss(d, wp, b, l2) - logistic_loss(d, wm, b, l2)) / (2 * h);
      worst = std::max(worst, rel(g.w[j], num));
    }
    const double nb = (logistic_loss(d, w, b + h, l2) - logistic_loss(d, w, b - h, l2)) / (2 * h);
    worst = std::max(worst, rel(g.b, nb));
    EXPECT_LT(worst, 1e-4) << "dataset " << s;
  }
}

TEST(LogisticTest, ZeroVarianceFeatureIgnored) {
  auto d = separable();
  for (auto& e : d) e.x[F::kTtr] = 7;
  const auto m = train_logistic(d, {});
  EXPECT_EQ(m.scale[index_of(F::kTtr)], 0.0);
  EXPECT_EQ(m.weights[index_of(F::kTtr)], 0.0);
}

TEST(LogisticTest, Errors) {
  const auto d = separable();
  LogisticParams p;
  p.epochs = 0;
  EXPECT_THROW(train_logistic(d, p), InvalidParams);
  p.epochs = 10;
  p.learning_rate = 0;
  EXPECT_THROW(train_logistic(d, p), InvalidParams);
  const std::vector<Example> one_class{make(0, Label::kHuman), make(1, Label::kHuman)};
  EXPECT_THROW(train_logistic(one_class, {}), DegenerateData);
}

// --------------------------------------------------------------- prediction

TEST(PredictTest, SingleLeafReadOff) {
  Model m;
  m.kind = ModelKind::kForest;
  Tree t;
  TreeNode leaf;
  leaf.prob = {0.25, 0.75};
  t.nodes.push_back(leaf);
  m.trees.push_back(t);
  m.forest_params.trees = 1;
  const auto p = predict(m, FeatureVector{});
  EXPECT_EQ(p.score, 0.75);
  EXPECT_EQ(p.label, Label::kAI);
  EXPECT_EQ(predict(m, FeatureVector{}, 0.8).label, Label::kHuman);
}

TEST(PredictTest, ZeroLogisticIsHalf) {
  Model m;
  m.kind = ModelKind::kLogistic;
  FeatureVector v;
  v[F::kTtr] = 123;
  const auto p = predict(m, v);
  EXPECT_EQ(p.score, 0.5);
  EXPECT_EQ(p.label, Label::kAI);
}

TEST(PredictTest, HashMismatch) {
  auto m = train_logistic(separable(), {});
  m.feature_hash ^= 1;
  EXPECT_THROW(predict(m, FeatureVector{}), FeatureOrderMismatch);
}

TEST(PredictTest, ExtremeScoresStayInRange) {
  Model m;
  m.kind = ModelKind::kLogistic;
  m.weights.fill(1e6);
  m.scale.fill(1);
  FeatureVector v;
  v.values.fill(1e300);
  EXPECT_EQ(predict(m, v).score, 1.0);
  v.values.fill(-1e300);
  EXPECT_EQ(predict(m, v).score, 0.0);
}

// --------------------------------------------------------------- importance

TEST(ImportanceTest, SingleSplitTree) {
  Model m;
  Tree t;
  TreeNode root;
  root.feature = 7;
  root.threshold = 1;
  root.left = 1;
  root.right = 2;
  root.prob = {0.5, 0.5};
  root.gini_decrease = 2.5;
  TreeNode l;
  l.prob = {1, 0};
  TreeNode r;
  r.prob = {0, 1};
  t.nodes = {root, l, r};
  m.trees.push_back(t);
  const auto imp = feature_importance(m);
  EXPECT_FALSE(imp.degenerate);
  for (std::size_t i = 0; i < kFeatureCount; ++i) EXPECT_EQ(imp.values[i], i == 7 ? 1.0 : 0.0);
}

TEST(ImportanceTest, LogisticNormalization) {
  Model m;
  m.kind = ModelKind::kLogistic;
  m.weights[0] = 3;
  m.weights[1] = -1;
  const auto imp = feature_importance(m);
  EXPECT_DOUBLE_EQ(imp.values[0], 0.75);
  EXPECT_DOUBLE_EQ(imp.values[1], 0.25);
  EXPECT_EQ(imp.ranked()[0], F::kWordCount);
}

TEST(ImportanceTest, ConstantModelIsDegenerate) {
  Model m;
  m.kind = ModelKind::kLogistic;
  const auto imp = feature_importance(m);
  EXPECT_TRUE(imp.degenerate);
  for (double v : imp.values) EXPECT_EQ(v, 0.0);
}

TEST(ImportanceTest, SumsToOne) {
  ForestParams p;
  p.trees = 10;
  p.seed = 2;
  const auto d = random_data(2, 80);
  for (const auto& m : {train_forest(d, p), train_logistic(d, {})}) {
    const auto imp = feature_importance(m);
    double sum = 0;
    for (double v : imp.values) {
      EXPECT_GE(v, 0.0);
      sum += v;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

// -------------------------------------------------------------- persistence

class ModelFileTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("stylopsy_model_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }
  std::string path(const char* name) const { return (dir_ / name).string(); }

  std::filesystem::path dir_;
};

TEST_F(ModelFileTest, RoundTripPredictsIdentically) {
  const auto d = random_data(4, 60);
  ForestParams fp;
  fp.trees = 12;
  fp.seed = 4;
  auto forest = train_forest(d, fp);
  std::vector<FeatureVector> vs;
  for (const auto& e : d) vs.push_back(e.x);
  forest.reference = compute_reference_stats(vs);
  const auto logistic = train_logistic(d, {});
  for (const auto& m : {forest, logistic}) {
    save_model(m, path("m.json"));
    const auto back = load_model(path("m.json"));
    EXPECT_EQ(back, m);
    Xoshiro256 rng(77);
    for (int i = 0; i < 100; ++i) {
      const auto v = random_vector(rng);
      ASSERT_EQ(predict(back, v).score, predict(m, v).score);
    }
    EXPECT_EQ(serialize_model(back), serialize_model(m));
  }
}

TEST_F(ModelFileTest, TruncatedIsCorrupt) {
  const auto text = serialize_model(train_logistic(separable(), {}));
  std::ofstream(path("t.json")) << text.substr(0, text.size() / 2);
  EXPECT_THROW(load_model(path("t.json")), CorruptModel);
}

TEST_F(ModelFileTest, FutureVersion) {
  auto j = nlohmann::json::parse(serialize_model(train_logistic(separable(), {})));
  j["version"] = kModelVersion + 1;
  std::ofstream(path("v.json")) << j.dump();
  EXPECT_THROW(load_model(path("v.json")), VersionMismatch);
}

TEST_F(ModelFileTest, BadTreesAreCorrupt) {
  ForestParams p;
  p.trees = 2;
  auto base = nlohmann::json::parse(serialize_model(train_forest(separable(), p)));
  ASSERT_TRUE(base["trees"][0][0].contains("f"));
  auto bad_feature = base;
  bad_feature["trees"][0][0]["f"] = 29;
  auto bad_child = base;
  bad_child["trees"][0][0]["l"] = 0;
  auto bad_prob = base;
  bad_prob["trees"][0][1]["p"] = {0.5, 0.6};
  auto missing = base;
  missing.erase("params");
  for (const auto& j : {bad_feature, bad_child, bad_prob, missing}) {
    EXPECT_THROW(parse_model(j.dump()), CorruptModel);
  }
}

TEST_F(ModelFileTest, MissingFile) {
  EXPECT_THROW(load_model(path("nope.json")), UnreadableFile);
}

}  // namespace
}  // namespace stylopsy
