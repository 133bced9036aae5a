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

// Labeled corpora: CSV/JSONL ingest and export, stratified splits and
// evaluation reports. AI is the positive class throughout.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stylopsy/detail/format.hpp"
#include "stylopsy/detail/parallel.hpp"
#include "stylopsy/error.hpp"
#include "stylopsy/features.hpp"
#include "stylopsy/lexicons.hpp"
#include "stylopsy/model.hpp"
#include "stylopsy/random.hpp"

namespace stylopsy {

struct CorpusRecord {
  std::string id;
  std::string text;
  Label label = Label::kHuman;
  std::optional<std::string> source;  // an empty source reads back as none

  friend bool operator==(const CorpusRecord&, const CorpusRecord&) = default;
};

enum class CorpusFormat { kCsv, kJsonl };

// By extension: .csv, or .jsonl / .ndjson.
inline std::optional<CorpusFormat> format_from_path(std::string_view path) {
  auto ends = [&](std::string_view ext) {
    if (path.size() < ext.size()) return false;
    auto tail = detail::lowercase(path.substr(path.size() - ext.size()));
    return tail == ext;
  };
  if (ends(".csv")) return CorpusFormat::kCsv;
  if (ends(".jsonl") || ends(".ndjson")) return CorpusFormat::kJsonl;
  return std::nullopt;
}

// "human" / "ai" in any case, or 0 / 1 (1 = AI). Surrounding whitespace is ignored.
inline std::optional<Label> parse_label(std::string_view s) {
  const auto t = detail::lowercase(detail::trim(s));
  if (t == "human" || t == "0") return Label::kHuman;
  if (t == "ai" || t == "1") return Label::kAI;
  return std::nullopt;
}

// -------------------------------------------------------------------- csv

namespace detail {

struct CsvRow {
  std::size_t line = 0;  // physical line the row starts on
  std::vector<std::string> fields;
};

// RFC 4180 reader. Accepts LF or CRLF line ends; quoted fields may span lines.
// Returns nullopt and sets `error` on an unterminated quote or stray quote.
inline std::optional<std::vector<CsvRow>> read_csv(std::string_view s, std::string& error) {
  std::vector<CsvRow> rows;
  CsvRow row;
  std::string field;
  std::size_t line = 1;
  row.line = 1;
  bool quoted = false;
  bool field_was_quoted = false;
  auto end_field = [&] {
    row.fields.push_back(std::move(field));
    field.clear();
    field_was_quoted = false;
  };
  auto end_row = [&] {
    end_field();
    // a bare empty line carries no data
    if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
    row = CsvRow{};
    row.line = line;
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < s.size() && s[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    if (c == '"') {
      if (!field.empty() || field_was_quoted) {
        error = "line " + std::to_string(line) + ": quote inside an unquoted field";
        return std::nullopt;
      }
      quoted = true;
      field_was_quoted = true;
    } else if (c == ',') {
      end_field();
    } else if (c == '\r' && i + 1 < s.size() && s[i + 1] == '\n') {
      // handled with the '\n'
    } else if (c == '\n') {
      ++line;
      end_row();
    } else {
      if (field_was_quoted) {
        error = "line " + std::to_string(line) + ": text after a closing quote";
        return std::nullopt;
      }
      field += c;
    }
  }
  if (quoted) {
    error = "unterminated quoted field starting on or before line " + std::to_string(row.line);
    return std::nullopt;
  }
  if (!field.empty() || field_was_quoted || !row.fields.empty()) end_row();
  return rows;
}

inline std::string_view strip_bom(std::string_view s) {
  return s.substr(0, 3) == "\xEF\xBB\xBF" ? s.substr(3) : s;
}

// Shared row checks: label, non-blank text, unique id.
struct RecordCollector {
  std::vector<CorpusRecord> records;
  std::vector<RowIssue> issues;
  std::unordered_map<std::string, std::size_t> seen;

  void add(std::size_t row, std::optional<std::string> id, std::string text,
           std::string_view label_text, std::optional<std::string> source) {
    bool ok = true;
    const auto label = parse_label(label_text);
    if (!label) {
      issues.push_back({row, "unknown label '" + std::string(label_text) + "'"});
      ok = false;
    }
    if (trim(text).empty()) {
      issues.push_back({row, "text is empty"});
      ok = false;
    }
    std::string key = id && !id->empty() ? *id : std::to_string(row);
    if (auto [it, fresh] = seen.emplace(key, row); !fresh) {
      issues.push_back({row, "duplicate id '" + key + "' (first on row " + std::to_string(it->second) + ")"});
      ok = false;
    }
    if (!ok) return;
    if (source && source->empty()) source.reset();
    records.push_back({std::move(key), std::move(text), *label, std::move(source)});
  }

  std::vector<CorpusRecord> finish(const std::string& source_name) {
    if (!issues.empty()) throw SchemaError(source_name, std::move(issues));
    if (records.empty()) throw EmptyCorpus("corpus '" + source_name + "' has no records");
    return std::move(records);
  }
};

}  // namespace detail

// Header must name `text` and `label` (any case); `id` and `source` are
// optional, other columns are ignored. Missing ids become the 1-based data
// row number.
inline std::vector<CorpusRecord> parse_csv(std::string_view content, const std::string& source_name = "<csv>") {
  std::string error;
  auto rows = detail::read_csv(detail::strip_bom(content), error);
  if (!rows) throw SchemaError(source_name, {{0, error}});
  if (rows->empty()) throw EmptyCorpus("corpus '" + source_name + "' is empty");

  std::optional<std::size_t> text_col, label_col, id_col, source_col;
  const auto& header = rows->front().fields;
  for (std::size_t i = 0; i < header.size(); ++i) {
    const auto name = detail::lowercase(detail::trim(header[i]));
    auto set = [&](std::optional<std::size_t>& col) {
      if (!col) col = i;
    };
    if (name == "text") set(text_col);
    else if (name == "label") set(label_col);
    else if (name == "id") set(id_col);
    else if (name == "source") set(source_col);
  }
  std::vector<RowIssue> header_issues;
  if (!text_col) header_issues.push_back({0, "header lacks a 'text' column"});
  if (!label_col) header_issues.push_back({0, "header lacks a 'label' column"});
  if (!header_issues.empty()) throw SchemaError(source_name, std::move(header_issues));

  detail::RecordCollector out;
  for (std::size_t r = 1; r < rows->size(); ++r) {
    auto& fields = (*rows)[r].fields;
    if (fields.size() != header.size()) {
      out.issues.push_back({r, "expected " + std::to_string(header.size()) + " fields, found " +
                                   std::to_string(fields.size())});
      continue;
    }
    std::optional<std::string> id;
    if (id_col) id = std::string(detail::trim(fields[*id_col]));
    std::optional<std::string> source;
    if (source_col) source = std::move(fields[*source_col]);
    out.add(r, std::move(id), std::move(fields[*text_col]), fields[*label_col], std::move(source));
  }
  return out.finish(source_name);
}

// One JSON object per non-blank line with string `text` and `label` (string,
// or integer 0/1); optional `id` (string or integer) and `source` (string or
// null). Rows are numbered by line.
inline std::vector<CorpusRecord> parse_jsonl(std::string_view content, const std::string& source_name = "<jsonl>") {
  content = detail::strip_bom(content);
  detail::RecordCollector out;
  std::size_t line_no = 0;
  while (!content.empty()) {
    const auto nl = content.find('\n');
    const auto line = content.substr(0, nl);
    content = nl == std::string_view::npos ? std::string_view{} : content.substr(nl + 1);
    ++line_no;
    if (detail::trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception&) {
      out.issues.push_back({line_no, "not valid JSON"});
      continue;
    }
    if (!j.is_object()) {
      out.issues.push_back({line_no, "not a JSON object"});
      continue;
    }
    if (!j.contains("text") || !j["text"].is_string()) {
      out.issues.push_back({line_no, "missing string 'text'"});
      continue;
    }
    std::string label;
    if (j.contains("label") && j["label"].is_string()) {
      label = j["label"].get<std::string>();
    } else if (j.contains("label") && j["label"].is_number_integer()) {
      label = std::to_string(j["label"].get<std::int64_t>());
    } else {
      out.issues.push_back({line_no, "missing 'label'"});
      continue;
    }
    std::optional<std::string> id;
    if (j.contains("id")) {
      const auto& v = j["id"];
      if (v.is_string()) id = v.get<std::string>();
      else if (v.is_number_integer()) id = v.dump();
      else if (!v.is_null()) {
        out.issues.push_back({line_no, "'id' must be a string or integer"});
        continue;
      }
    }
    std::optional<std::string> source;
    if (j.contains("source") && !j["source"].is_null()) {
      if (!j["source"].is_string()) {
        out.issues.push_back({line_no, "'source' must be a string"});
        continue;
      }
      source = j["source"].get<std::string>();
    }
    out.add(line_no, std::move(id), j["text"].get<std::string>(), label, std::move(source));
  }
  return out.finish(source_name);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UnreadableFile(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) throw UnreadableFile(path);
  return buf.str();
}

inline std::vector<CorpusRecord> ingest(const std::string& path, CorpusFormat format) {
  const auto content = read_file(path);
  return format == CorpusFormat::kCsv ? parse_csv(content, path) : parse_jsonl(content, path);
}

inline std::vector<CorpusRecord> ingest(const std::string& path) {
  const auto format = format_from_path(path);
  if (!format) throw SchemaError(path, {{0, "cannot tell corpus format from the extension (.csv or .jsonl)"}});
  return ingest(path, *format);
}

// ---------------------------------------------------------------- export

namespace detail {

inline std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline std::string to_csv(std::span<const CorpusRecord> records) {
  std::string out = "id,text,label,source\n";
  for (const auto& r : records) {
    out += detail::csv_field(r.id) + ',' + detail::csv_field(r.text) + ',' +
           std::string(label_name(r.label)) + ',' + detail::csv_field(r.source.value_or("")) + '\n';
  }
  return out;
}

inline std::string to_jsonl(std::span<const CorpusRecord> records) {
  std::string out;
  for (const auto& r : records) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["text"] = r.text;
    j["label"] = std::string(label_name(r.label));
    if (r.source) j["source"] = *r.source;
    try {
      out += j.dump() + '\n';
    } catch (const nlohmann::json::exception&) {
      throw Error("record '" + r.id + "' is not valid UTF-8 and cannot be written as JSON");
    }
  }
  return out;
}

inline void write_corpus(std::span<const CorpusRecord> records, const std::string& path, CorpusFormat format) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write corpus to '" + path + "'");
  out << (format == CorpusFormat::kCsv ? to_csv(records) : to_jsonl(records));
}

// ----------------------------------------------------------------- split

struct Split {
  std::vector<CorpusRecord> train;
  std::vector<CorpusRecord> test;
};

// Per class: shuffle the class's records with stream (seed, class), take the
// first max(1, round(fraction * size)) as test, at most size - 1. Both halves
// keep the input order.
inline Split split(std::span<const CorpusRecord> records, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0 && test_fraction < 1)) throw InvalidParams("test fraction must be in (0, 1)");
  std::array<std::vector<std::size_t>, 2> by_class;
  for (std::size_t i = 0; i < records.size(); ++i) by_class[label_index(records[i].label)].push_back(i);
  std::vector<bool> in_test(records.size(), false);
  for (std::size_t c = 0; c < 2; ++c) {
    auto& idx = by_class[c];
    if (idx.size() < 2) {
      throw InsufficientClass(std::string("split needs at least 2 ") + (c ? "ai" : "human") +
                              " records, found " + std::to_string(idx.size()));
    }
    auto rng = stream_rng(seed, c);
    shuffle(idx.begin(), idx.end(), rng);
    const auto n = static_cast<double>(idx.size());
    auto k = static_cast<std::size_t>(std::llround(test_fraction * n));
    k = std::clamp<std::size_t>(k, 1, idx.size() - 1);
    for (std::size_t i = 0; i < k; ++i) in_test[idx[i]] = true;
  }
  Split s;
  for (std::size_t i = 0; i < records.size(); ++i) (in_test[i] ? s.test : s.train).push_back(records[i]);
  return s;
}

// ------------------------------------------------------------ evaluation

struct EvalReport {
  double accuracy = 0;
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t tn = 0;
  std::size_t fn = 0;
  std::size_t n = 0;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

// A ratio with a zero denominator is 0.
inline EvalReport report_from_counts(std::size_t tp, std::size_t fp, std::size_t tn, std::size_t fn) {
  auto ratio = [](std::size_t a, std::size_t b) {
    return b == 0 ? 0.0 : static_cast<double>(a) / static_cast<double>(b);
  };
  EvalReport r;
  r.tp = tp;
  r.fp = fp;
  r.tn = tn;
  r.fn = fn;
  r.n = tp + fp + tn + fn;
  r.accuracy = ratio(tp + tn, r.n);
  r.precision = ratio(tp, tp + fp);
  r.recall = ratio(tp, tp + fn);
  r.f1 = r.precision + r.recall == 0 ? 0.0 : 2 * r.precision * r.recall / (r.precision + r.recall);
  return r;
}

inline std::vector<FeatureVector> extract_features(std::span<const CorpusRecord> records,
                                                   const LexiconSet& lex, std::size_t threads = 0) {
  std::vector<FeatureVector> out(records.size());
  detail::parallel_for(records.size(), threads,
                       [&](std::size_t i) { out[i] = extract_all(records[i].text, lex); });
  return out;
}

inline std::vector<Example> to_examples(std::span<const CorpusRecord> records, const LexiconSet& lex,
                                        std::size_t threads = 0) {
  const auto vectors = extract_features(records, lex, threads);
  std::vector<Example> out;
  out.reserve(records.size());
  for (std::size_t i = 0; i < records.size(); ++i) out.push_back({vectors[i], records[i].label});
  return out;
}

inline EvalReport evaluate(const Model& m, std::span<const Example> test, double threshold = 0.5) {
  check_feature_hash(m);
  std::size_t tp = 0, fp = 0, tn = 0, fn = 0;
  for (const auto& e : test) {
    const bool predicted_ai = predict(m, e.x, threshold).label == Label::kAI;
    const bool actual_ai = e.y == Label::kAI;
    if (predicted_ai) (actual_ai ? tp : fp)++;
    else (actual_ai ? fn : tn)++;
  }
  return report_from_counts(tp, fp, tn, fn);
}

inline EvalReport evaluate(const Model& m, std::span<const CorpusRecord> test, const LexiconSet& lex,
                           double threshold = 0.5) {
  check_feature_hash(m);
  return evaluate(m, to_examples(test, lex), threshold);
}

inline nlohmann::ordered_json to_json(const EvalReport& r) {
  nlohmann::ordered_json j;
  j["n"] = r.n;
  j["accuracy"] = r.accuracy;
  j["precision"] = r.precision;
  j["recall"] = r.recall;
  j["f1"] = r.f1;
  j["confusion"] = {{"tp", r.tp}, {"fp", r.fp}, {"tn", r.tn}, {"fn", r.fn}};
  return j;
}

}  // namespace stylopsy
