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

#include "stylopsy/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "stylopsy/synthetic.hpp"

namespace stylopsy {
namespace {

namespace fs = std::filesystem;

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& stdin_text = "") {
  args.insert(args.begin(), "stylopsy");
  std::istringstream in(stdin_text);
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    unsetenv(std::string(kLexiconsEnv).c_str());
    dir_ = fs::temp_directory_path() /
           ("stylopsy_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& content) const {
    const auto p = dir_ / name;
    fs::create_directories(p.parent_path());
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string corpus(std::size_t h, std::size_t a, std::uint64_t seed = 7) const {
    const auto records = synthetic_corpus(h, a, seed);
    return write("corpus.csv", to_csv(records));
  }

  std::string trained_model(const std::string& algorithm = "forest") const {
    const auto c = corpus(30, 30);
    const auto m = path("model.json");
    const auto r = run({"train", c, "--model", m, "--seed", "7", "--trees", "20", "--algorithm", algorithm});
    EXPECT_EQ(r.code, 0) << r.err;
    return m;
  }

  static std::string read(const std::string& p) { return read_file(p); }

  fs::path dir_;
};

// ------------------------------------------------------------------ extract

TEST_F(CliTest, ExtractJsonFromStdin) {
  const auto r = run({"extract", "--format", "json"}, "the cat sat on the mat");
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["word_count"], 6);
  EXPECT_EQ(j.size(), kFeatureCount);
  EXPECT_TRUE(r.err.empty());
}

TEST_F(CliTest, ExtractEmptyStdinIsAllZero) {
  const auto r = run({"extract"}, "");
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  for (auto it = j.begin(); it != j.end(); ++it) EXPECT_EQ(it->get<double>(), 0.0) << it.key();
}

TEST_F(CliTest, ExtractMissingFile) {
  const auto r = run({"extract", path("absent.txt")});
  EXPECT_EQ(r.code, 2);
  EXPECT_TRUE(r.out.empty());
  EXPECT_NE(r.err.find("absent.txt"), std::string::npos);
}

TEST_F(CliTest, ExtractCsvAndMarkdown) {
  const auto f = write("a.txt", "Hello there, friend.");
  auto r = run({"extract", f, "--format", "csv"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "input," + csv_header());
  r = run({"extract", f, "--format", "markdown"});
  ASSERT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("| word_count | 3 |"), std::string::npos);
  EXPECT_EQ(run({"extract", "--format", "xml"}).code, 1);
}

TEST_F(CliTest, ExtractDirectoryKeepsOrder) {
  write("docs/b.txt", "two words");
  write("docs/a.txt", "one");
  write("docs/c.txt", "three little words");
  const auto r = run({"extract", path("docs"), "--format", "json"});
  ASSERT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[0]["features"]["word_count"], 1);
  EXPECT_EQ(j[1]["features"]["word_count"], 2);
  EXPECT_EQ(j[2]["features"]["word_count"], 3);
  EXPECT_EQ(fs::path(j[2]["input"].get<std::string>()).filename(), "c.txt");
}

TEST_F(CliTest, LexiconErrors) {
  EXPECT_EQ(run({"--lexicons", path("nowhere"), "extract"}, "x").code, 3);
  write("lex/stopwords.txt", "the\nnot a word!\n");
  EXPECT_EQ(run({"extract", "--lexicons", path("lex")}, "x").code, 3);
  setenv(std::string(kLexiconsEnv).c_str(), path("lex").c_str(), 1);
  EXPECT_EQ(run({"extract"}, "x").code, 3);
  write("lex/stopwords.txt", "the\n");
  EXPECT_EQ(run({"extract"}, "the the").code, 0);
  unsetenv(std::string(kLexiconsEnv).c_str());
}

TEST_F(CliTest, LexiconOverrideChangesOutput) {
  write("lex/stopwords.txt", "zebra\n");
  const auto r = run({"extract", "--lexicons", path("lex")}, "zebra zebra the");
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(nlohmann::json::parse(r.out)["stop_word_count"], 2);
}

// -------------------------------------------------------------------- train

TEST_F(CliTest, TrainIsDeterministic) {
  const auto c = corpus(40, 40);
  const auto a = run({"train", c, "--model", path("a.json"), "--seed", "7"});
  const auto b = run({"train", c, "--model", path("b.json"), "--seed", "7"});
  ASSERT_EQ(a.code, 0) << a.err;
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(a.out, path("a.json") + "\n");
  EXPECT_NE(a.err.find("80 rows"), std::string::npos);
  EXPECT_EQ(read(path("a.json")), read(path("b.json")));
  const auto m = load_model(path("a.json"));
  EXPECT_TRUE(m.reference.has_value());
  EXPECT_EQ(m.forest_params.seed, 7u);
}

TEST_F(CliTest, TrainLogistic) {
  const auto m = load_model(trained_model("logistic"));
  EXPECT_EQ(m.kind, ModelKind::kLogistic);
  EXPECT_EQ(m.logistic_params.seed, 7u);
}

TEST_F(CliTest, TrainErrors) {
  const auto one = write("one.csv", "text,label\nThe system works.,ai\nThe model works.,ai\n");
  EXPECT_EQ(run({"train", one, "--model", path("m.json")}).code, 4);
  const auto bad = write("bad.csv", "text,label\nhello,robot\n");
  EXPECT_EQ(run({"train", bad, "--model", path("m.json")}).code, 4);
  const auto c = corpus(5, 5);
  const auto r = run({"train", c, "--model", path("m.json"), "--algorithm", "svm"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"train", path("none.csv"), "--model", path("m.json")}).code, 2);
  EXPECT_EQ(run({"train", c}).code, 1);
  EXPECT_EQ(run({"train", c, "--model", path("m.json"), "--max-features", "40"}).code, 1);
  EXPECT_EQ(run({"train", c, "--model", path("m.json"), "--trees", "0"}).code, 1);
  EXPECT_EQ(run({"train", c, "--model", path("no/such/dir/m.json")}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"--help"}).code, 0);
}

// ------------------------------------------------------------------ analyze

TEST_F(CliTest, AnalyzeRabbitExcerpt) {
  const auto m = trained_model();
  const std::string excerpt = std::string(STYLOPSY_TEST_DATA_DIR) + "/texts/01_rabbit_care.txt";
  const auto r = run({"analyze", excerpt, "--model", m});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_GT(j["features"]["direct_address_count"].get<int>(), 0);
  EXPECT_TRUE(j["label"] == "ai" || j["label"] == "human");
  EXPECT_GE(j["ai_probability"].get<double>(), 0.0);
  EXPECT_LE(j["ai_probability"].get<double>(), 1.0);
  EXPECT_EQ(j["profile"]["theories"].size(), 4u);
  EXPECT_LE(j["top_features"].size(), 5u);
  for (const auto& t : j["profile"]["theories"]) {
    for (const auto& f : t["features"]) EXPECT_FALSE(f["rationale"].get<std::string>().empty());
  }
}

TEST_F(CliTest, AnalyzeJsonAndMarkdownAgree) {
  const auto m = trained_model();
  const auto text = "I can't believe you did that! Why would anyone do it? We left early.";
  const auto j = nlohmann::json::parse(run({"analyze", "--model", m, "--top-k", "3"}, text).out);
  const auto md = run({"analyze", "--model", m, "--top-k", "3", "--format", "markdown"}, text).out;
  EXPECT_NE(md.find("- ai_probability: " + j["ai_probability"].dump()), std::string::npos);
  EXPECT_NE(md.find("- label: " + j["label"].get<std::string>()), std::string::npos);
  for (const auto& t : j["top_features"]) {
    EXPECT_NE(md.find(" | " + t["feature"].get<std::string>() + " | " + t["importance"].dump() + " | " +
                      t["value"].dump() + " | " + t["z"].dump() + " |"),
              std::string::npos);
  }
  for (const auto& t : j["profile"]["theories"]) {
    EXPECT_NE(md.find(t["name"].get<std::string>() + ": " + t["score"].dump()), std::string::npos);
    for (const auto& f : t["features"]) {
      EXPECT_NE(md.find("| " + f["feature"].get<std::string>() + " | " + f["value"].dump() + " | " +
                        f["z"].dump() + " |"),
                std::string::npos);
    }
  }
}

TEST_F(CliTest, AnalyzeReferenceMeanScoresZero) {
  const auto text = "We walked to the harbor. It was cold and grey.";
  const auto lex = builtin_lexicons();
  auto model = load_model(trained_model());
  ReferenceStats s;
  s.mean = extract_all(text, lex).values;
  s.stddev.fill(1.0);
  model.reference = s;
  save_model(model, path("centered.json"));
  const auto r = run({"analyze", "--model", path("centered.json")}, text);
  ASSERT_EQ(r.code, 0) << r.err;
  for (const auto& t : nlohmann::json::parse(r.out)["profile"]["theories"]) EXPECT_EQ(t["score"].get<double>(), 0.0);
}

TEST_F(CliTest, AnalyzeErrors) {
  EXPECT_EQ(run({"analyze", "--model", path("missing.json")}, "x").code, 2);
  write("garbage.json", "{not json");
  EXPECT_EQ(run({"analyze", "--model", path("garbage.json")}, "x").code, 2);
  const auto m = trained_model();
  EXPECT_EQ(run({"analyze", "--model", m, "--threshold", "1.5"}, "x").code, 1);
  EXPECT_EQ(run({"analyze", "--model", m, "--threshold", "0"}, "x").code, 1);
  EXPECT_EQ(run({"analyze", path("nofile.txt"), "--model", m}).code, 2);

  auto j = nlohmann::json::parse(read(m));
  j["feature_order_hash"] = "0123456789abcdef";
  write("other.json", j.dump());
  EXPECT_EQ(run({"analyze", "--model", path("other.json")}, "x").code, 5);
  j = nlohmann::json::parse(read(m));
  j.erase("reference_stats");
  write("noref.json", j.dump());
  EXPECT_EQ(run({"analyze", "--model", path("noref.json")}, "x").code, 4);
}

TEST_F(CliTest, AnalyzeStdoutIsStable) {
  const auto m = trained_model();
  const auto a = run({"analyze", "--model", m}, "Some text here. Isn't it nice?");
  const auto b = run({"analyze", "--model", m}, "Some text here. Isn't it nice?");
  EXPECT_EQ(a.out, b.out);
}

// ----------------------------------------------------------------- evaluate

TEST_F(CliTest, EvaluatePerfectFixture) {
  const auto m = trained_model();
  const auto r = run({"evaluate", path("corpus.csv"), "--model", m});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["accuracy"].get<double>(), 1.0);
  EXPECT_EQ(j["n"], 60);
}

TEST_F(CliTest, EvaluateKnownConfusion) {
  // Predicts AI exactly when a text has no contractions.
  Model m;
  m.kind = ModelKind::kLogistic;
  m.scale.fill(1.0);
  m.weights[index_of(Feature::kContractionCount)] = -10;
  m.bias = 5;
  save_model(m, path("rule.json"));
  std::string csv = "text,label\n";
  for (int i = 0; i < 3; ++i) csv += "The system works well.,ai\n";    // tp
  csv += "The garden is green.,human\n";                               // fp
  csv += "It's a model.,ai\n";                                         // fn
  for (int i = 0; i < 5; ++i) csv += "I can't go.,human\n";           // tn
  write("known.csv", csv);
  const auto r = run({"evaluate", path("known.csv"), "--model", path("rule.json")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["confusion"]["tp"], 3);
  EXPECT_EQ(j["confusion"]["fp"], 1);
  EXPECT_EQ(j["confusion"]["fn"], 1);
  EXPECT_EQ(j["confusion"]["tn"], 5);
  EXPECT_DOUBLE_EQ(j["precision"].get<double>(), 0.75);
  EXPECT_DOUBLE_EQ(j["recall"].get<double>(), 0.75);
  EXPECT_DOUBLE_EQ(j["f1"].get<double>(), 0.75);
  EXPECT_DOUBLE_EQ(j["accuracy"].get<double>(), 0.8);
}

TEST_F(CliTest, EvaluateErrors) {
  const auto m = trained_model();
  auto j = nlohmann::json::parse(read(m));
  j["feature_order_hash"] = "0000000000000001";
  write("other.json", j.dump());
  EXPECT_EQ(run({"evaluate", path("corpus.csv"), "--model", path("other.json")}).code, 5);
  EXPECT_EQ(run({"evaluate", path("nothing.csv"), "--model", m}).code, 2);
  write("bad.jsonl", "{\"text\":\"x\"}\n");
  EXPECT_EQ(run({"evaluate", path("bad.jsonl"), "--model", m}).code, 4);
}

}  // namespace
}  // namespace stylopsy
