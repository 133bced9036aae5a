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

// Command-line front end: extract, train, analyze, evaluate.
//
// stdout carries only the payload; diagnostics go to stderr. Exit codes:
//   0 success
//   1 usage error (bad flag, value or subcommand)
//   2 an input, model or output file cannot be read, parsed or written
//   3 lexicon directory missing or malformed
//   4 training/evaluation data unusable (schema errors, one class, too few rows)
//   5 model was built for a different feature order

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stylopsy/corpus.hpp"
#include "stylopsy/detail/parallel.hpp"
#include "stylopsy/error.hpp"
#include "stylopsy/features.hpp"
#include "stylopsy/lexicons.hpp"
#include "stylopsy/model.hpp"
#include "stylopsy/psychmap.hpp"

namespace stylopsy {

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitIo = 2,
  kExitLexicon = 3,
  kExitData = 4,
  kExitFeatureMismatch = 5,
};

inline constexpr std::string_view kLexiconsEnv = "STYLOPSY_LEXICONS";

struct CliConfig {
  std::string lexicons;  // empty: built-in lists
  std::string format = "json";
  std::uint64_t seed = 42;
  std::string model;
  double threshold = 0.5;
  std::string algorithm = "forest";
};

namespace cli_detail {

class CliFailure : public std::runtime_error {
 public:
  CliFailure(int code, const std::string& msg) : std::runtime_error(msg), code_(code) {}
  int code() const { return code_; }

 private:
  int code_;
};

struct Input {
  std::string name;  // "-" for stdin
  std::string text;
};

inline LexiconSet lexicons_for(const CliConfig& cfg) {
  try {
    return cfg.lexicons.empty() ? builtin_lexicons() : load_lexicons(cfg.lexicons);
  } catch (const std::exception& e) {
    throw CliFailure(kExitLexicon, e.what());
  }
}

// Files in argument order; a directory contributes its regular files sorted
// by name; "-" or no arguments means stdin.
inline std::vector<std::string> expand_inputs(const std::vector<std::string>& args) {
  namespace fs = std::filesystem;
  if (args.empty()) return {"-"};
  std::vector<std::string> out;
  for (const auto& a : args) {
    std::error_code ec;
    if (a != "-" && fs::is_directory(a, ec)) {
      std::vector<std::string> files;
      for (const auto& entry : fs::directory_iterator(a, ec)) {
        if (entry.is_regular_file(ec)) files.push_back(entry.path().string());
      }
      if (ec) throw CliFailure(kExitIo, "cannot list directory '" + a + "'");
      std::sort(files.begin(), files.end());
      out.insert(out.end(), files.begin(), files.end());
    } else {
      out.push_back(a);
    }
  }
  return out;
}

inline std::string read_input(const std::string& name, std::istream& in) {
  if (name == "-") return std::string(std::istreambuf_iterator<char>(in), {});
  try {
    return read_file(name);
  } catch (const UnreadableFile& e) {
    throw CliFailure(kExitIo, e.what());
  }
}

inline Model model_for(const CliConfig& cfg) {
  if (cfg.model.empty()) throw CliFailure(kExitUsage, "--model is required");
  try {
    return load_model(cfg.model);
  } catch (const Error& e) {
    throw CliFailure(kExitIo, e.what());
  }
}

inline void require_matching_features(const Model& m) {
  try {
    check_feature_hash(m);
  } catch (const FeatureOrderMismatch& e) {
    throw CliFailure(kExitFeatureMismatch, e.what());
  }
}

inline std::vector<CorpusRecord> corpus_for(const std::string& path) {
  try {
    return ingest(path);
  } catch (const UnreadableFile& e) {
    throw CliFailure(kExitIo, e.what());
  } catch (const Error& e) {
    throw CliFailure(kExitData, e.what());
  }
}

inline std::string markdown_features(const FeatureVector& v) {
  std::string md = "| feature | value |\n|---|---|\n";
  for (std::size_t i = 0; i < kFeatureCount; ++i) {
    md += "| " + std::string(kFeatureInfo[i].name) + " | " + format_feature(v, i) + " |\n";
  }
  return md;
}

// ----------------------------------------------------------------- commands

inline int cmd_extract(const CliConfig& cfg, const std::vector<std::string>& args, std::istream& in,
                       std::ostream& out) {
  const auto lex = lexicons_for(cfg);
  const auto names = expand_inputs(args);
  std::vector<Input> inputs;
  for (const auto& n : names) inputs.push_back({n, read_input(n, in)});
  std::vector<FeatureVector> vectors(inputs.size());
  detail::parallel_for(inputs.size(), 0,
                       [&](std::size_t i) { vectors[i] = extract_all(inputs[i].text, lex); });

  if (cfg.format == "csv") {
    out << "input," << csv_header() << '\n';
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      out << detail::csv_field(inputs[i].name) << ',' << csv_row(vectors[i]) << '\n';
    }
  } else if (cfg.format == "markdown") {
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i) out << '\n';
      out << "## " << inputs[i].name << "\n\n" << markdown_features(vectors[i]);
    }
  } else if (inputs.size() == 1) {
    out << to_json(vectors[0]).dump(2) << '\n';
  } else {
    auto arr = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      arr.push_back({{"input", inputs[i].name}, {"features", to_json(vectors[i])}});
    }
    out << arr.dump(2) << '\n';
  }
  return kExitOk;
}

struct TrainOptions {
  std::string corpus;
  ForestParams forest;
  LogisticParams logistic;
  std::string max_features = "sqrt";
};

inline std::size_t parse_max_features(const std::string& s) {
  if (s == "sqrt") return kSqrtFeatures;
  if (s == "all") return kAllFeatures;
  std::size_t pos = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(s, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != s.size() || v < 1 || v > kFeatureCount) {
    throw CliFailure(kExitUsage, "--max-features must be sqrt, all or 1.." + std::to_string(kFeatureCount));
  }
  return v;
}

inline int cmd_train(const CliConfig& cfg, TrainOptions opt, std::ostream& out, std::ostream& err) {
  if (cfg.model.empty()) throw CliFailure(kExitUsage, "--model PATH is required for train");
  const auto lex = lexicons_for(cfg);
  const auto records = corpus_for(opt.corpus);
  const auto data = to_examples(records, lex);

  Model m;
  try {
    if (cfg.algorithm == "forest") {
      opt.forest.seed = cfg.seed;
      opt.forest.max_features = parse_max_features(opt.max_features);
      m = train_forest(data, opt.forest);
    } else {
      opt.logistic.seed = cfg.seed;
      m = train_logistic(data, opt.logistic);
    }
    std::vector<FeatureVector> vectors;
    for (const auto& e : data) vectors.push_back(e.x);
    m.reference = compute_reference_stats(vectors);
  } catch (const InvalidParams& e) {
    throw CliFailure(kExitUsage, e.what());
  } catch (const Error& e) {
    throw CliFailure(kExitData, e.what());
  }
  try {
    save_model(m, cfg.model);
  } catch (const Error& e) {
    throw CliFailure(kExitIo, e.what());
  }
  err << "trained " << kind_name(m.kind) << " on " << m.training_rows << " rows (human "
      << m.class_counts[0] << ", ai " << m.class_counts[1] << "); training accuracy "
      << json_number(accuracy(m, data, cfg.threshold)) << '\n';
  out << cfg.model << '\n';
  return kExitOk;
}

inline int cmd_analyze(const CliConfig& cfg, const std::string& input, std::size_t top_k, std::istream& in,
                       std::ostream& out) {
  if (cfg.format == "csv") throw CliFailure(kExitUsage, "analyze supports --format json or markdown");
  const auto m = model_for(cfg);
  require_matching_features(m);
  if (!m.reference) throw CliFailure(kExitData, "model file carries no reference statistics");
  const auto lex = lexicons_for(cfg);
  const auto text = read_input(input, in);
  const auto v = extract_all(text, lex);
  const auto pred = predict(m, v, cfg.threshold);
  const auto imp = feature_importance(m);
  const auto prof = profile(v, *m.reference);

  std::vector<Feature> top;
  if (!imp.degenerate) {
    for (Feature f : imp.ranked()) {
      if (top.size() == top_k || imp.values[index_of(f)] == 0) break;
      top.push_back(f);
    }
  }

  if (cfg.format == "markdown") {
    std::string md = "# Verdict\n\n";
    md += "- input: " + input + "\n";
    md += "- label: " + std::string(label_name(pred.label)) + "\n";
    md += "- ai_probability: " + json_number(pred.score) + "\n";
    md += "- threshold: " + json_number(cfg.threshold) + "\n";
    md += "- model: " + std::string(kind_name(m.kind)) + " (seed " + std::to_string(m.seed()) + ")\n\n";
    md += "## Top features\n\n";
    if (imp.degenerate) md += "_The model assigns no importance to any feature._\n\n";
    md += "| rank | feature | importance | value | z |\n|---|---|---|---|---|\n";
    for (std::size_t r = 0; r < top.size(); ++r) {
      const Feature f = top[r];
      md += "| " + std::to_string(r + 1) + " | " + std::string(feature_name(f)) + " | " +
            json_number(imp.values[index_of(f)]) + " | " + json_number(v[f]) + " | " +
            json_number(z_score(v, *m.reference, f)) + " |\n";
    }
    md += "\n" + to_markdown(prof);
    out << md;
    return kExitOk;
  }

  nlohmann::ordered_json j;
  j["input"] = input;
  j["label"] = std::string(label_name(pred.label));
  j["ai_probability"] = pred.score;
  j["threshold"] = cfg.threshold;
  j["model"] = {{"kind", std::string(kind_name(m.kind))}, {"seed", m.seed()}};
  auto tops = nlohmann::ordered_json::array();
  for (Feature f : top) {
    tops.push_back({{"feature", std::string(feature_name(f))},
                    {"importance", imp.values[index_of(f)]},
                    {"value", v[f]},
                    {"z", z_score(v, *m.reference, f)}});
  }
  j["top_features"] = std::move(tops);
  j["importance_degenerate"] = imp.degenerate;
  j["features"] = to_json(v);
  j["profile"] = to_json(prof);
  out << j.dump(2) << '\n';
  return kExitOk;
}

inline int cmd_evaluate(const CliConfig& cfg, const std::string& corpus, std::ostream& out) {
  if (cfg.format != "json") throw CliFailure(kExitUsage, "evaluate supports --format json only");
  const auto m = model_for(cfg);
  require_matching_features(m);
  const auto lex = lexicons_for(cfg);
  const auto records = corpus_for(corpus);
  out << to_json(evaluate(m, records, lex, cfg.threshold)).dump(2) << '\n';
  return kExitOk;
}

}  // namespace cli_detail

// Runs the tool on argv-style arguments (args[0] is the program name).
inline int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
  using namespace cli_detail;
  CLI::App app{"Stylometric feature extraction and human/AI text classification.", "stylopsy"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", "stylopsy 1.0.0");

  CliConfig cfg;
  app.add_option("--lexicons", cfg.lexicons, "Lexicon directory (default: built-in lists)")
      ->envname(std::string(kLexiconsEnv));

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_threshold = [&](CLI::App* sub) {
    sub->add_option("--threshold", cfg.threshold, "AI decision threshold in (0,1)")
        ->check(CLI::Range(0.0, 1.0));
  };

  auto* extract = app.add_subcommand("extract", "Print the 29 features of each input");
  std::vector<std::string> extract_inputs;
  extract->add_option("inputs", extract_inputs, "Files or directories; '-' or nothing reads stdin");
  add_format(extract, {"json", "csv", "markdown"});

  auto* train = app.add_subcommand("train", "Train a classifier on a labeled corpus");
  TrainOptions topt;
  train->add_option("corpus", topt.corpus, "Corpus file (.csv or .jsonl)")->required();
  train->add_option("--model", cfg.model, "Output model path")->required();
  train->add_option("--algorithm", cfg.algorithm, "forest or logistic")
      ->check(CLI::IsMember({"forest", "logistic"}));
  train->add_option("--seed", cfg.seed, "Training seed");
  train->add_option("--trees", topt.forest.trees, "Forest size");
  train->add_option("--max-depth", topt.forest.max_depth, "Maximum tree depth");
  train->add_option("--min-leaf", topt.forest.min_leaf, "Minimum samples per leaf");
  train->add_option("--max-features", topt.max_features, "Features tried per split: sqrt, all or N");
  train->add_option("--learning-rate", topt.logistic.learning_rate, "Logistic step size");
  train->add_option("--epochs", topt.logistic.epochs, "Logistic gradient steps");
  train->add_option("--l2", topt.logistic.l2, "Logistic L2 penalty");
  add_threshold(train);

  auto* analyze = app.add_subcommand("analyze", "Classify one text and explain the verdict");
  std::string analyze_input = "-";
  std::size_t top_k = 5;
  analyze->add_option("input", analyze_input, "Text file; '-' or nothing reads stdin");
  analyze->add_option("--model", cfg.model, "Model file")->required();
  analyze->add_option("--top-k", top_k, "Number of important features to list");
  add_threshold(analyze);
  add_format(analyze, {"json", "csv", "markdown"});

  auto* eval = app.add_subcommand("evaluate", "Score a model on a labeled corpus");
  std::string eval_corpus;
  eval->add_option("corpus", eval_corpus, "Corpus file (.csv or .jsonl)")->required();
  eval->add_option("--model", cfg.model, "Model file")->required();
  add_threshold(eval);
  add_format(eval, {"json"});

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    if (code != 0) {
      const auto* failed = app.get_subcommands().empty() ? &app : app.get_subcommands().front();
      err << failed->help();
    }
    return code == 0 ? kExitOk : kExitUsage;
  }
  if (!(cfg.threshold > 0 && cfg.threshold < 1)) {
    err << "error: --threshold must lie strictly between 0 and 1\n";
    return kExitUsage;
  }

  try {
    if (extract->parsed()) return cmd_extract(cfg, extract_inputs, in, out);
    if (train->parsed()) return cmd_train(cfg, topt, out, err);
    if (analyze->parsed()) return cmd_analyze(cfg, analyze_input, top_k, in, out);
    return cmd_evaluate(cfg, eval_corpus, out);
  } catch (const CliFailure& e) {
    err << "error: " << e.what() << '\n';
    return e.code();
  } catch (const FeatureOrderMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitFeatureMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitIo;
  }
}

inline int run_cli(int argc, char** argv) {
  std::vector<std::string> args(argv, argv + argc);
  return run_cli(args, std::cin, std::cout, std::cerr);
}

}  // namespace stylopsy
