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
#include <filesystem>
#include <string>
#include <string_view>

#include "semverb/lexicalizer.hpp"

namespace semverb {

enum class InputFormat { Auto, Rdf, Owl, Sparql };

/// "rdf", "owl", "sparql" or "auto". Throws Error otherwise.
InputFormat parse_format(std::string_view name);

/// Auto resolves by extension: .ttl, .omn, .rq. Throws Error when it cannot.
InputFormat resolve_format(InputFormat format, const std::filesystem::path& input);

struct RunConfig {
  /// "-" reads stdin.
  std::string input_path = "-";
  InputFormat format = InputFormat::Auto;
  std::filesystem::path lexicon_path;
  double theta = 1.0;
  std::size_t fanout_limit = 5;
  bool emit_trees = false;
  /// Empty or "-" writes stdout.
  std::string output_path;
};

struct RunResult {
  /// 0 success, 1 malformed input or other failure, 2 unsupported construct.
  int exit_code = 0;
  std::string output;
  /// One line per diagnostic, `file:line:column: message`.
  std::string diagnostics;
};

/// Verbalizes `text` (already read from `source_name`) in a resolved format.
RunResult verbalize_document(std::string_view text, InputFormat format, const FrequencyLexicon& lexicon,
                             const RunConfig& config, std::string_view source_name);

/// Reads the input and the lexicon, then verbalize_document. Does not write
/// the output anywhere.
RunResult run(const RunConfig& config);

/// The data/lexicon.tsv shipped with the sources.
std::filesystem::path default_lexicon_path();

}  // namespace semverb
