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

// Human-vs-AI classifiers over feature vectors: a bagged CART forest and an
// L2-regularized logistic regression, plus a versioned JSON model format.

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <numeric>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "stylopsy/detail/parallel.hpp"
#include "stylopsy/error.hpp"
#include "stylopsy/features.hpp"
#include "stylopsy/psychmap.hpp"
#include "stylopsy/random.hpp"

namespace stylopsy {

enum class Label { kHuman = 0, kAI = 1 };

inline constexpr std::string_view label_name(Label l) { return l == Label::kAI ? "ai" : "human"; }

inline constexpr std::size_t label_index(Label l) { return static_cast<std::size_t>(l); }

struct Example {
  FeatureVector x;
  Label y;
};

enum class ModelKind { kForest, kLogistic };

inline constexpr std::string_view kind_name(ModelKind k) {
  return k == ModelKind::kForest ? "forest" : "logistic";
}

// Features examined per split. 0 means floor(sqrt(29)) = 5; kFeatureCount
// means all of them.
inline constexpr std::size_t kSqrtFeatures = 0;
inline constexpr std::size_t kAllFeatures = kFeatureCount;

struct ForestParams {
  std::size_t trees = 100;
  std::size_t max_depth = 12;
  std::size_t min_leaf = 1;
  std::size_t max_features = kSqrtFeatures;
  bool bootstrap = true;
  std::uint64_t seed = 0;
  std::size_t threads = 0;  // 0: hardware concurrency. Does not affect the result.

  friend bool operator==(const ForestParams& a, const ForestParams& b) {
    return a.trees == b.trees && a.max_depth == b.max_depth && a.min_leaf == b.min_leaf &&
           a.max_features == b.max_features && a.bootstrap == b.bootstrap && a.seed == b.seed;
  }
};

struct LogisticParams {
  double learning_rate = 0.1;
  std::size_t epochs = 2000;
  double l2 = 1e-3;
  std::uint64_t seed = 0;  // recorded only; zero init and full-batch descent use no randomness

  friend bool operator==(const LogisticParams&, const LogisticParams&) = default;
};

// Split nodes have feature >= 0 and route x <= threshold to `left`. Leaves
// have feature == -1 and carry class probabilities (human, ai). Nodes are
// stored in preorder, so children always follow their parent.
struct TreeNode {
  int feature = -1;
  double threshold = 0;
  std::size_t left = 0;
  std::size_t right = 0;
  std::array<double, 2> prob{};
  double gini_decrease = 0;  // weighted by bootstrap sample count

  bool is_leaf() const { return feature < 0; }

  friend bool operator==(const TreeNode&, const TreeNode&) = default;
};

struct Tree {
  std::vector<TreeNode> nodes;

  const TreeNode& leaf_for(const FeatureVector& v) const {
    std::size_t i = 0;
    while (!nodes[i].is_leaf()) {
      const auto& n = nodes[i];
      i = v.values[static_cast<std::size_t>(n.feature)] <= n.threshold ? n.left : n.right;
    }
    return nodes[i];
  }

  friend bool operator==(const Tree&, const Tree&) = default;
};

struct Model {
  ModelKind kind = ModelKind::kForest;
  std::uint64_t feature_hash = feature_order_hash();

  ForestParams forest_params;
  std::vector<Tree> trees;

  LogisticParams logistic_params;
  std::array<double, kFeatureCount> weights{};  // on standardized features
  double bias = 0;
  std::array<double, kFeatureCount> mean{};
  std::array<double, kFeatureCount> scale{};  // population sd; 0 zeroes the feature

  std::size_t training_rows = 0;
  std::array<std::size_t, 2> class_counts{};  // human, ai
  std::optional<ReferenceStats> reference;

  std::uint64_t seed() const {
    return kind == ModelKind::kForest ? forest_params.seed : logistic_params.seed;
  }

  friend bool operator==(const Model&, const Model&) = default;
};

namespace detail {

inline std::array<std::size_t, 2> count_classes(std::span<const Example> data) {
  std::array<std::size_t, 2> c{};
  for (const auto& e : data) ++c[label_index(e.y)];
  return c;
}

inline void check_training_data(std::span<const Example> data) {
  if (data.size() < 2) {
    throw DegenerateData("training needs at least 2 examples, got " + std::to_string(data.size()));
  }
  const auto c = count_classes(data);
  if (c[0] == 0 || c[1] == 0) {
    throw DegenerateData(std::string("training data has no ") + (c[0] == 0 ? "human" : "ai") +
                         " examples");
  }
}

// Split quality is sum over children of (c0^2 + c1^2) / n_child, which is
// n minus the weighted Gini impurity. Compared as exact rationals so ties are
// real ties and tie-breaking does not depend on rounding.
struct SplitScore {
  __int128 num = 0;
  __int128 den = 1;

  static SplitScore of(std::int64_t l0, std::int64_t l1, std::int64_t r0, std::int64_t r1) {
    const __int128 nl = l0 + l1;
    const __int128 nr = r0 + r1;
    const __int128 sl = static_cast<__int128>(l0) * l0 + static_cast<__int128>(l1) * l1;
    const __int128 sr = static_cast<__int128>(r0) * r0 + static_cast<__int128>(r1) * r1;
    return {sl * nr + sr * nl, nl * nr};
  }

  bool better_than(const SplitScore& o) const { return num * o.den > o.num * den; }
};

inline double weighted_gini(double c0, double c1) {
  const double n = c0 + c1;
  return n == 0 ? 0.0 : n - (c0 * c0 + c1 * c1) / n;
}

struct TreeBuilder {
  std::span<const Example> data;
  const ForestParams& params;
  Xoshiro256& rng;
  std::size_t max_features;
  Tree tree;

  std::size_t build(std::vector<std::size_t>& idx, std::size_t depth) {
    std::array<std::int64_t, 2> c{};
    for (auto i : idx) ++c[label_index(data[i].y)];
    const auto n = static_cast<double>(idx.size());
    const std::size_t self = tree.nodes.size();
    tree.nodes.emplace_back();
    tree.nodes[self].prob = {static_cast<double>(c[0]) / n, static_cast<double>(c[1]) / n};

    if (depth >= params.max_depth || c[0] == 0 || c[1] == 0 ||
        idx.size() < 2 * params.min_leaf) {
      return self;
    }

    // Visit features in random order; stop once max_features non-constant
    // ones have been searched. The winner is the best score, ties going to the
    // lowest feature index and then the lowest threshold.
    std::array<std::size_t, kFeatureCount> order;
    std::iota(order.begin(), order.end(), std::size_t{0});
    shuffle(order.begin(), order.end(), rng);

    bool found = false;
    SplitScore best;
    std::size_t best_feature = 0;
    double best_threshold = 0;
    std::size_t searched = 0;
    std::vector<std::size_t> sorted = idx;
    for (std::size_t f : order) {
      if (searched == max_features) break;
      std::sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
        return data[a].x.values[f] < data[b].x.values[f];
      });
      const double lo = data[sorted.front()].x.values[f];
      const double hi = data[sorted.back()].x.values[f];
      if (!(lo < hi)) continue;
      ++searched;
      std::array<std::int64_t, 2> left{};
      for (std::size_t k = 0; k + 1 < sorted.size(); ++k) {
        ++left[label_index(data[sorted[k]].y)];
        const double a = data[sorted[k]].x.values[f];
        const double b = data[sorted[k + 1]].x.values[f];
        if (!(a < b)) continue;
        const std::size_t nl = k + 1;
        if (nl < params.min_leaf || sorted.size() - nl < params.min_leaf) continue;
        double t = a + (b - a) / 2;
        if (!(t < b)) t = a;
        const auto score = SplitScore::of(left[0], left[1], c[0] - left[0], c[1] - left[1]);
        const bool wins = !found || score.better_than(best) ||
                          (!best.better_than(score) &&
                           (f < best_feature || (f == best_feature && t < best_threshold)));
        if (wins) {
          found = true;
          best = score;
          best_feature = f;
          best_threshold = t;
        }
      }
    }
    if (!found) return self;

    std::vector<std::size_t> li;
    std::vector<std::size_t> ri;
    std::array<double, 2> lc{};
    std::array<double, 2> rc{};
    for (auto i : idx) {
      if (data[i].x.values[best_feature] <= best_threshold) {
        li.push_back(i);
        ++lc[label_index(data[i].y)];
      } else {
        ri.push_back(i);
        ++rc[label_index(data[i].y)];
      }
    }
    const double decrease = weighted_gini(static_cast<double>(c[0]), static_cast<double>(c[1])) -
                            weighted_gini(lc[0], lc[1]) - weighted_gini(rc[0], rc[1]);
    idx.clear();
    idx.shrink_to_fit();
    const std::size_t l = build(li, depth + 1);
    const std::size_t r = build(ri, depth + 1);
    auto& node = tree.nodes[self];
    node.feature = static_cast<int>(best_feature);
    node.threshold = best_threshold;
    node.left = l;
    node.right = r;
    node.gini_decrease = std::max(0.0, decrease);
    return self;
  }
};

inline std::size_t resolve_max_features(std::size_t requested) {
  if (requested == kSqrtFeatures) {
    return static_cast<std::size_t>(std::sqrt(static_cast<double>(kFeatureCount)));
  }
  return requested;
}

inline void check_forest_params(const ForestParams& p) {
  if (p.trees < 1) throw InvalidParams("forest needs at least 1 tree");
  if (p.max_depth < 1) throw InvalidParams("max_depth must be at least 1");
  if (p.min_leaf < 1) throw InvalidParams("min_leaf must be at least 1");
  if (p.max_features > kFeatureCount) {
    throw InvalidParams("max_features must be at most " + std::to_string(kFeatureCount));
  }
}

}  // namespace detail

// One tree grown on `data` (no resampling) with the split-time randomness
// drawn from `rng`. train_forest calls this on each bootstrap sample.
inline Tree train_tree(std::span<const Example> data, const ForestParams& params,
                       Xoshiro256& rng) {
  detail::check_forest_params(params);
  std::vector<std::size_t> idx(data.size());
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  detail::TreeBuilder b{data, params, rng, detail::resolve_max_features(params.max_features), {}};
  b.build(idx, 0);
  return std::move(b.tree);
}

// Tree t uses the stream stream_rng(seed, t): first the bootstrap draws
// (n calls to uniform_index(n)), then the per-node feature shuffles.
inline Tree train_forest_tree(std::span<const Example> data, const ForestParams& params,
                              std::size_t t) {
  auto rng = stream_rng(params.seed, t);
  if (!params.bootstrap) return train_tree(data, params, rng);
  std::vector<Example> sample;
  sample.reserve(data.size());
  for (std::size_t i = 0; i < data.size(); ++i) sample.push_back(data[rng.uniform_index(data.size())]);
  return train_tree(sample, params, rng);
}

inline Model train_forest(std::span<const Example> data, const ForestParams& params) {
  detail::check_forest_params(params);
  detail::check_training_data(data);
  Model m;
  m.kind = ModelKind::kForest;
  m.forest_params = params;
  m.training_rows = data.size();
  m.class_counts = detail::count_classes(data);
  m.trees.resize(params.trees);

  detail::parallel_for(params.trees, params.threads,
                       [&](std::size_t t) { m.trees[t] = train_forest_tree(data, params, t); });
  return m;
}

// ------------------------------------------------------------------ logistic

// Training rows after standardization, as the logistic objective sees them.
struct StandardizedData {
  std::vector<std::array<double, kFeatureCount>> x;
  std::vector<double> y;  // 1 for AI
};

inline double sigmoid(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

inline double standardize(double x, double mean, double scale) {
  return scale == 0 ? 0.0 : (x - mean) / scale;
}

inline double linear_score(const std::array<double, kFeatureCount>& w, double b,
                           const std::array<double, kFeatureCount>& x) {
  double z = b;
  for (std::size_t j = 0; j < kFeatureCount; ++j) z += w[j] * x[j];
  return z;
}

// Mean log-loss plus (l2 / 2) * |w|^2; the bias is not penalized.
inline double logistic_loss(const StandardizedData& d, const std::array<double, kFeatureCount>& w,
                            double b, double l2) {
  double loss = 0;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const double z = linear_score(w, b, d.x[i]);
    // log(1 + e^z) - y z, stable for large |z|
    loss += std::max(z, 0.0) + std::log1p(std::exp(-std::fabs(z))) - d.y[i] * z;
  }
  loss /= static_cast<double>(d.x.size());
  double sq = 0;
  for (double wj : w) sq += wj * wj;
  return loss + 0.5 * l2 * sq;
}

struct LogisticGradient {
  std::array<double, kFeatureCount> w{};
  double b = 0;
};

inline LogisticGradient logistic_gradient(const StandardizedData& d,
                                          const std::array<double, kFeatureCount>& w, double b,
                                          double l2) {
  LogisticGradient g;
  for (std::size_t i = 0; i < d.x.size(); ++i) {
    const double r = sigmoid(linear_score(w, b, d.x[i])) - d.y[i];
    for (std::size_t j = 0; j < kFeatureCount; ++j) g.w[j] += r * d.x[i][j];
    g.b += r;
  }
  const auto n = static_cast<double>(d.x.size());
  for (std::size_t j = 0; j < kFeatureCount; ++j) g.w[j] = g.w[j] / n + l2 * w[j];
  g.b /= n;
  return g;
}

inline StandardizedData standardize_data(std::span<const Example> data,
                                         const std::array<double, kFeatureCount>& mean,
                                         const std::array<double, kFeatureCount>& scale) {
  StandardizedData d;
  d.x.reserve(data.size());
  for (const auto& e : data) {
    std::array<double, kFeatureCount> row;
    for (std::size_t j = 0; j < kFeatureCount; ++j) row[j] = standardize(e.x.values[j], mean[j], scale[j]);
    d.x.push_back(row);
    d.y.push_back(e.y == Label::kAI ? 1.0 : 0.0);
  }
  return d;
}

inline Model train_logistic(std::span<const Example> data, const LogisticParams& params) {
  if (!(params.learning_rate > 0) || !std::isfinite(params.learning_rate)) {
    throw InvalidParams("learning_rate must be positive");
  }
  if (params.epochs < 1) throw InvalidParams("epochs must be at least 1");
  if (!(params.l2 >= 0) || !std::isfinite(params.l2)) throw InvalidParams("l2 must be >= 0");
  detail::check_training_data(data);

  Model m;
  m.kind = ModelKind::kLogistic;
  m.logistic_params = params;
  m.training_rows = data.size();
  m.class_counts = detail::count_classes(data);

  const auto n = static_cast<double>(data.size());
  for (std::size_t j = 0; j < kFeatureCount; ++j) {
    double sum = 0;
    for (const auto& e : data) sum += e.x.values[j];
    const double mu = sum / n;
    double ss = 0;
    for (const auto& e : data) ss += (e.x.values[j] - mu) * (e.x.values[j] - mu);
    m.mean[j] = mu;
    m.scale[j] = std::sqrt(ss / n);
  }
  const auto d = standardize_data(data, m.mean, m.scale);
  for (std::size_t epoch = 0; epoch < params.epochs; ++epoch) {
    const auto g = logistic_gradient(d, m.weights, m.bias, params.l2);
    for (std::size_t j = 0; j < kFeatureCount; ++j) m.weights[j] -= params.learning_rate * g.w[j];
    m.bias -= params.learning_rate * g.b;
  }
  return m;
}

// ---------------------------------------------------------------- prediction

struct Prediction {
  Label label;
  double score;  // probability of AI
};

inline void check_feature_hash(const Model& m) {
  if (m.feature_hash != feature_order_hash()) {
    throw FeatureOrderMismatch("model feature order hash does not match this build's features");
  }
}

inline double ai_probability(const Model& m, const FeatureVector& v) {
  check_feature_hash(m);
  if (m.kind == ModelKind::kForest) {
    double sum = 0;
    for (const auto& t : m.trees) sum += t.leaf_for(v).prob[1];
    return std::clamp(sum / static_cast<double>(m.trees.size()), 0.0, 1.0);
  }
  std::array<double, kFeatureCount> x;
  for (std::size_t j = 0; j < kFeatureCount; ++j) x[j] = standardize(v.values[j], m.mean[j], m.scale[j]);
  return sigmoid(linear_score(m.weights, m.bias, x));
}

inline Prediction predict(const Model& m, const FeatureVector& v, double threshold = 0.5) {
  const double p = ai_probability(m, v);
  return {p >= threshold ? Label::kAI : Label::kHuman, p};
}

inline double accuracy(const Model& m, std::span<const Example> data, double threshold = 0.5) {
  if (data.empty()) return 0;
  std::size_t ok = 0;
  for (const auto& e : data) ok += predict(m, e.x, threshold).label == e.y;
  return static_cast<double>(ok) / static_cast<double>(data.size());
}

// ---------------------------------------------------------------- importance

struct FeatureImportance {
  std::array<double, kFeatureCount> values{};
  bool degenerate = false;  // nothing to attribute; values are all zero

  std::vector<Feature> ranked() const {
    std::vector<Feature> out;
    for (std::size_t i = 0; i < kFeatureCount; ++i) out.push_back(static_cast<Feature>(i));
    std::stable_sort(out.begin(), out.end(), [&](Feature a, Feature b) {
      return values[index_of(a)] > values[index_of(b)];
    });
    return out;
  }
};

inline FeatureImportance feature_importance(const Model& m) {
  FeatureImportance imp;
  if (m.kind == ModelKind::kForest) {
    for (const auto& t : m.trees) {
      for (const auto& n : t.nodes) {
        if (!n.is_leaf()) imp.values[static_cast<std::size_t>(n.feature)] += n.gini_decrease;
      }
    }
  } else {
    for (std::size_t j = 0; j < kFeatureCount; ++j) imp.values[j] = std::fabs(m.weights[j]);
  }
  const double total = std::accumulate(imp.values.begin(), imp.values.end(), 0.0);
  if (!(total > 0)) {
    imp.values.fill(0.0);
    imp.degenerate = true;
    return imp;
  }
  for (double& v : imp.values) v /= total;
  return imp;
}

// ------------------------------------------------------------- persistence

inline constexpr std::string_view kModelFormat = "stylopsy-model";
inline constexpr int kModelVersion = 1;

namespace detail {

inline std::string hex64(std::uint64_t v) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = kDigits[v & 0xf];
  return s;
}

inline std::optional<std::uint64_t> parse_hex64(std::string_view s) {
  if (s.size() != 16) return std::nullopt;
  std::uint64_t v = 0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v, 16);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

}  // namespace detail

inline nlohmann::ordered_json to_json(const Model& m) {
  using J = nlohmann::ordered_json;
  J j;
  j["format"] = std::string(kModelFormat);
  j["version"] = kModelVersion;
  j["kind"] = std::string(kind_name(m.kind));
  j["feature_order_hash"] = detail::hex64(m.feature_hash);
  auto names = J::array();
  for (const auto& info : kFeatureInfo) names.push_back(std::string(info.name));
  j["features"] = std::move(names);
  j["training"] = {{"rows", m.training_rows},
                   {"human", m.class_counts[0]},
                   {"ai", m.class_counts[1]}};
  if (m.kind == ModelKind::kForest) {
    const auto& p = m.forest_params;
    j["params"] = {{"seed", p.seed},
                   {"trees", p.trees},
                   {"max_depth", p.max_depth},
                   {"min_leaf", p.min_leaf},
                   {"max_features", p.max_features},
                   {"bootstrap", p.bootstrap}};
    auto trees = J::array();
    for (const auto& t : m.trees) {
      auto nodes = J::array();
      for (const auto& n : t.nodes) {
        if (n.is_leaf()) {
          nodes.push_back({{"p", n.prob}});
        } else {
          nodes.push_back({{"f", n.feature},
                           {"t", n.threshold},
                           {"l", n.left},
                           {"r", n.right},
                           {"p", n.prob},
                           {"g", n.gini_decrease}});
        }
      }
      trees.push_back(std::move(nodes));
    }
    j["trees"] = std::move(trees);
  } else {
    const auto& p = m.logistic_params;
    j["params"] = {{"seed", p.seed},
                   {"learning_rate", p.learning_rate},
                   {"epochs", p.epochs},
                   {"l2", p.l2}};
    j["weights"] = m.weights;
    j["bias"] = m.bias;
    j["mean"] = m.mean;
    j["scale"] = m.scale;
  }
  if (m.reference) j["reference_stats"] = to_json(*m.reference);
  return j;
}

inline std::string serialize_model(const Model& m) { return to_json(m).dump(2) + "\n"; }

namespace detail {

template <typename T>
T get_field(const nlohmann::json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw CorruptModel(std::string("model lacks '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw CorruptModel(std::string("model field '") + key + "' has the wrong type");
  }
}

template <std::size_t N>
std::array<double, N> get_doubles(const nlohmann::json& j, const char* key) {
  const auto v = get_field<std::vector<double>>(j, key);
  if (v.size() != N) throw CorruptModel(std::string("model field '") + key + "' has wrong length");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

inline void check_tree(const Tree& t) {
  if (t.nodes.empty()) throw CorruptModel("tree without nodes");
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& n = t.nodes[i];
    if (!(n.prob[0] >= 0 && n.prob[1] >= 0 && std::fabs(n.prob[0] + n.prob[1] - 1.0) <= 1e-9)) {
      throw CorruptModel("node probabilities must be non-negative and sum to 1");
    }
    if (n.is_leaf()) continue;
    if (n.feature >= static_cast<int>(kFeatureCount)) throw CorruptModel("node feature index out of range");
    if (n.left <= i || n.right <= i || n.left >= t.nodes.size() || n.right >= t.nodes.size()) {
      throw CorruptModel("node child index out of range");
    }
  }
}

}  // namespace detail

inline Model model_from_json(const nlohmann::json& j) {
  using detail::get_field;
  if (get_field<std::string>(j, "format") != kModelFormat) throw CorruptModel("not a stylopsy model");
  const auto version = get_field<std::int64_t>(j, "version");
  if (version != kModelVersion) {
    throw VersionMismatch("model format version " + std::to_string(version) +
                          " is not supported (expected " + std::to_string(kModelVersion) + ")");
  }
  Model m;
  const auto hash = detail::parse_hex64(get_field<std::string>(j, "feature_order_hash"));
  if (!hash) throw CorruptModel("malformed feature_order_hash");
  m.feature_hash = *hash;
  const auto& training = j.at("training");
  m.training_rows = get_field<std::size_t>(training, "rows");
  m.class_counts = {get_field<std::size_t>(training, "human"), get_field<std::size_t>(training, "ai")};

  const auto kind = get_field<std::string>(j, "kind");
  const auto& params = j.at("params");
  if (kind == "forest") {
    m.kind = ModelKind::kForest;
    auto& p = m.forest_params;
    p.seed = get_field<std::uint64_t>(params, "seed");
    p.trees = get_field<std::size_t>(params, "trees");
    p.max_depth = get_field<std::size_t>(params, "max_depth");
    p.min_leaf = get_field<std::size_t>(params, "min_leaf");
    p.max_features = get_field<std::size_t>(params, "max_features");
    p.bootstrap = get_field<bool>(params, "bootstrap");
    const auto& trees = j.at("trees");
    if (!trees.is_array() || trees.size() != p.trees || trees.empty()) {
      throw CorruptModel("tree count does not match params");
    }
    for (const auto& tj : trees) {
      if (!tj.is_array()) throw CorruptModel("tree must be an array of nodes");
      Tree t;
      for (const auto& nj : tj) {
        TreeNode n;
        n.prob = detail::get_doubles<2>(nj, "p");
        if (nj.contains("f")) {
          n.feature = get_field<int>(nj, "f");
          if (n.feature < 0) throw CorruptModel("node feature index out of range");
          n.threshold = get_field<double>(nj, "t");
          n.left = get_field<std::size_t>(nj, "l");
          n.right = get_field<std::size_t>(nj, "r");
          n.gini_decrease = get_field<double>(nj, "g");
        }
        t.nodes.push_back(n);
      }
      detail::check_tree(t);
      m.trees.push_back(std::move(t));
    }
  } else if (kind == "logistic") {
    m.kind = ModelKind::kLogistic;
    auto& p = m.logistic_params;
    p.seed = get_field<std::uint64_t>(params, "seed");
    p.learning_rate = get_field<double>(params, "learning_rate");
    p.epochs = get_field<std::size_t>(params, "epochs");
    p.l2 = get_field<double>(params, "l2");
    m.weights = detail::get_doubles<kFeatureCount>(j, "weights");
    m.bias = get_field<double>(j, "bias");
    m.mean = detail::get_doubles<kFeatureCount>(j, "mean");
    m.scale = detail::get_doubles<kFeatureCount>(j, "scale");
  } else {
    throw CorruptModel("unknown model kind '" + kind + "'");
  }
  if (j.contains("reference_stats")) {
    try {
      m.reference = reference_stats_from_json(j.at("reference_stats"));
    } catch (const std::exception& e) {
      throw CorruptModel(std::string("bad reference_stats: ") + e.what());
    }
  }
  return m;
}

inline Model parse_model(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptModel(std::string("model file is not valid JSON: ") + e.what());
  }
  try {
    return model_from_json(j);
  } catch (const nlohmann::json::exception& e) {
    throw CorruptModel(std::string("model file is malformed: ") + e.what());
  }
}

inline void save_model(const Model& m, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write model to '" + path + "'");
  out << serialize_model(m);
  if (!out) throw Error("failed writing model to '" + path + "'");
}

inline Model load_model(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableFile(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace stylopsy
