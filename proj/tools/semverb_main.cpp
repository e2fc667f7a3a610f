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

#include <cmath>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "semverb/pipeline.hpp"

int main(int argc, char** argv) {
  semverb::RunConfig config;
  std::string format = "auto";
  std::string lexicon;

  CLI::App app{"Verbalize RDF (Turtle), OWL (Manchester syntax) and SPARQL SELECT queries in English."};
  app.add_option("input", config.input_path, "Input file, or - for stdin")->default_val("-");
  app.add_option("--format", format, "rdf, owl, sparql or auto (by extension)")
      ->check(CLI::IsMember({"auto", "rdf", "owl", "sparql"}))
      ->default_val("auto");
  app.add_option("--lexicon", lexicon, "Frequency lexicon (TSV)");
  app.add_option("--theta", config.theta, "Verb/noun ratio threshold")
      ->check(CLI::PositiveNumber)
      ->default_val(1.0);
  app.add_option("--fanout-limit", config.fanout_limit, "Objects kept per subject and predicate")
      ->check(CLI::PositiveNumber)
      ->default_val(5);
  app.add_flag("--emit-trees", config.emit_trees, "Print dependency trees after each sentence");
  app.add_option("--output", config.output_path, "Output file, or - for stdout");
  CLI11_PARSE(app, argc, argv);

  if (!std::isfinite(config.theta)) {
    std::cerr << "semverb: --theta must be finite\n";
    return 1;
  }
  config.format = semverb::parse_format(format);
  if (!lexicon.empty()) config.lexicon_path = lexicon;

  const semverb::RunResult result = semverb::run(config);
  std::cerr << result.diagnostics;
  if (config.output_path.empty() || config.output_path == "-") {
    std::cout << result.output;
    std::cout.flush();
  } else {
    std::ofstream out(config.output_path, std::ios::binary);
    if (!out) {
      std::cerr << config.output_path << ":1:1: error: cannot write output\n";
      return 1;
    }
    out << result.output;
  }
  return result.exit_code;
}
