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

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stylopsy {

// Base of every error the library throws.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- lexicons

struct LexiconIssue {
  std::string file;
  std::size_t line = 0;  // 1-based; 0 when the issue concerns the whole list
  std::string reason;
};

class MalformedLexicon : public Error {
 public:
  explicit MalformedLexicon(std::vector<LexiconIssue> issues)
      : Error(describe(issues)), issues_(std::move(issues)) {}

  const std::vector<LexiconIssue>& issues() const noexcept { return issues_; }

 private:
  static std::string describe(const std::vector<LexiconIssue>& issues) {
    std::string msg = "malformed lexicon";
    for (const auto& issue : issues) {
      msg += "\n  " + issue.file + ":" + std::to_string(issue.line) + ": " + issue.reason;
    }
    return msg;
  }

  std::vector<LexiconIssue> issues_;
};

class MissingList : public Error {
 public:
  explicit MissingList(std::string name)
      : Error("lexicon list '" + name + "' not found and no default exists"),
        name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

// ---------------------------------------------------------------- psychmap

class InsufficientData : public Error {
 public:
  using Error::Error;
};

// ------------------------------------------------------------------- model

class DegenerateData : public Error {
 public:
  using Error::Error;
};

class InvalidParams : public Error {
 public:
  using Error::Error;
};

class FeatureOrderMismatch : public Error {
 public:
  using Error::Error;
};

class VersionMismatch : public Error {
 public:
  using Error::Error;
};

class CorruptModel : public Error {
 public:
  using Error::Error;
};

// ------------------------------------------------------------------ corpus

class UnreadableFile : public Error {
 public:
  explicit UnreadableFile(std::string path)
      : Error("cannot read '" + path + "'"), path_(std::move(path)) {}

  const std::string& path() const noexcept { return path_; }

 private:
  std::string path_;
};

struct RowIssue {
  std::size_t row = 0;  // 1-based data row (header excluded) or JSONL line
  std::string reason;
};

class SchemaError : public Error {
 public:
  SchemaError(std::string source, std::vector<RowIssue> issues)
      : Error(describe(source, issues)), source_(std::move(source)), issues_(std::move(issues)) {}

  const std::string& source() const noexcept { return source_; }
  const std::vector<RowIssue>& issues() const noexcept { return issues_; }

 private:
  static std::string describe(const std::string& source, const std::vector<RowIssue>& issues) {
    std::string msg = "schema errors in '" + source + "'";
    for (const auto& issue : issues) {
      msg += "\n  row " + std::to_string(issue.row) + ": " + issue.reason;
    }
    return msg;
  }

  std::string source_;
  std::vector<RowIssue> issues_;
};

class EmptyCorpus : public Error {
 public:
  using Error::Error;
};

class InsufficientClass : public Error {
 public:
  using Error::Error;
};

}  // namespace stylopsy
