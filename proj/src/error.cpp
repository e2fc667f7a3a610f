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

#include "semverb/error.hpp"

#include <utility>

namespace semverb {

namespace {

std::string located_message(std::size_t line, std::size_t column, const std::string& body) {
  return std::to_string(line) + ":" + std::to_string(column) + ": " + body;
}

const char* kind_name(LexicalizationError::Kind kind) {
  switch (kind) {
    case LexicalizationError::Kind::EmptyName: return "empty name";
    case LexicalizationError::Kind::UnknownWord: return "unknown word";
    case LexicalizationError::Kind::NoData: return "no lexicon data";
  }
  return "lexicalization failure";
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, std::string expected, std::string found)
    : Error(located_message(line, column, "expected " + expected + ", found " + found)),
      line_(line),
      column_(column),
      expected_(std::move(expected)),
      found_(std::move(found)) {}

Unsupported::Unsupported(std::string construct, std::size_t line, std::size_t column)
    : Error(line == 0 ? "unsupported: " + construct
                      : located_message(line, column, "unsupported: " + construct)),
      construct_(std::move(construct)),
      line_(line),
      column_(column) {}

UnknownPrefix::UnknownPrefix(std::string prefix)
    : Error("unknown prefix '" + prefix + ":'"), prefix_(std::move(prefix)) {}

LexicalizationError::LexicalizationError(Kind kind, std::string subject)
    : Error(std::string(kind_name(kind)) + ": " + subject), kind_(kind), subject_(std::move(subject)) {}

}  // namespace semverb
