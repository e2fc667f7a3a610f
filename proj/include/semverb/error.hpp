// Copyright 2026 The semverb Authors.
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

namespace semverb {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input. Line and column are 1-based and point into the input text.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, std::string expected, std::string found);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::string& expected() const noexcept { return expected_; }
  const std::string& found() const noexcept { return found_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string expected_;
  std::string found_;
};

/// Well-formed input that falls outside the supported language subset.
/// Parsers always set a location; verbalizers leave it at 0.
class Unsupported : public Error {
 public:
  explicit Unsupported(std::string construct, std::size_t line = 0, std::size_t column = 0);

  const std::string& construct() const noexcept { return construct_; }
  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  bool located() const noexcept { return line_ != 0; }

 private:
  std::string construct_;
  std::size_t line_;
  std::size_t column_;
};

class UnknownPrefix : public Error {
 public:
  explicit UnknownPrefix(std::string prefix);
  const std::string& prefix() const noexcept { return prefix_; }

 private:
  std::string prefix_;
};

/// An IRI, literal or variable that violates its invariants.
class InvalidTerm : public Error {
 public:
  using Error::Error;
};

class LexicalizationError : public Error {
 public:
  enum class Kind { EmptyName, UnknownWord, NoData };

  LexicalizationError(Kind kind, std::string subject);

  Kind kind() const noexcept { return kind_; }
  const std::string& subject() const noexcept { return subject_; }

 private:
  Kind kind_;
  std::string subject_;
};

class MalformedTree : public Error {
 public:
  using Error::Error;
};

}  // namespace semverb
