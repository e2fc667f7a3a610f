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

#include <fstream>
#include <iterator>
#include <string>

#include "semverb/lexicalizer.hpp"

namespace semverb::test {

inline std::string source_path(const std::string& relative) { return std::string(SEMVERB_SOURCE_DIR) + "/" + relative; }

inline std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline const FrequencyLexicon& lexicon() {
  static const FrequencyLexicon lex = FrequencyLexicon::load(source_path("data/lexicon.tsv"));
  return lex;
}

inline Iri ex(const std::string& local) { return Iri("http://example.org/" + local); }

}  // namespace semverb::test
