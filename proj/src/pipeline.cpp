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

#include "semverb/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "semverb/aggregator.hpp"
#include "semverb/owl_verbalizer.hpp"
#include "semverb/parsers.hpp"
#include "semverb/sparql_verbalizer.hpp"
#include "semverb/triple_verbalizer.hpp"

#ifndef SEMVERB_DEFAULT_LEXICON
#define SEMVERB_DEFAULT_LEXICON "data/lexicon.tsv"
#endif

namespace semverb {

namespace {

struct Location {
  std::size_t line = 1;
  std::size_t column = 1;
};

Location position_of(std::string_view text, std::size_t offset) {
  Location loc;
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++loc.line;
      loc.column = 1;
    } else {
      ++loc.column;
    }
  }
  return loc;
}

std::string local_name(const Iri& iri) {
  const std::string& v = iri.str();
  const std::size_t cut = v.find_last_of("#/");
  return cut == std::string::npos ? v : v.substr(cut + 1);
}

/// First spelling of `iri` in the source: prefixed, bracketed, local name.
Location locate(std::string_view text, const Iri& iri, const PrefixMap& prefixes) {
  const std::vector<std::string> spellings{compact_iri(iri, prefixes).value_or(iri.str()), "<" + iri.str() + ">",
                                           local_name(iri)};
  for (const auto& s : spellings) {
    const std::size_t at = text.find(s);
    if (at != std::string_view::npos) return position_of(text, at);
  }
  return Location{};
}

bool in_namespace(const Iri& iri, std::string_view ns) { return iri.str().rfind(ns, 0) == 0; }

/// Rejects OWL constructs serialized as triples.
void check_plain_rdf(const Graph& graph, std::string_view text) {
  for (const auto& t : graph.triples()) {
    const Iri& p = t.predicate();
    const Iri* offending = nullptr;
    const bool list = p.str() == std::string(vocab::kRdf) + "first" || p.str() == std::string(vocab::kRdf) + "rest";
    if (in_namespace(p, vocab::kOwl) || list) {
      offending = &p;
    } else if (p == vocab::rdf_type()) {
      const auto* o = std::get_if<Iri>(&t.object());
      if (o != nullptr && in_namespace(*o, vocab::kOwl)) offending = o;
    }
    if (offending != nullptr) {
      const Location loc = locate(text, *offending, graph.prefixes());
      const std::string name = compact_iri(*offending, graph.prefixes()).value_or(offending->str());
      throw Unsupported("OWL construct in RDF input (" + name + ")", loc.line, loc.column);
    }
  }
}

void append_sentence(RunResult& result, const DepTree& tree, bool emit_trees) {
  const std::string sentence = realize_tree(tree);
  if (emit_trees) {
    result.output += "# " + sentence + "\n" + serialize_tree(tree);
    if (result.output.back() != '\n') result.output += '\n';
  } else {
    result.output += sentence + "\n";
  }
}

RunResult verbalize_rdf(std::string_view text, Lexicalizer& lexicalizer, const RunConfig& config) {
  const Graph graph = parse_turtle(text);
  check_plain_rdf(graph, text);
  std::vector<DepTree> trees;
  for (const auto& t : graph.triples()) {
    if (t.predicate() == lexicalizer.config().label_property) continue;
    trees.push_back(realize_triple(t, graph, lexicalizer));
  }
  RunResult result;
  const SentencePlan plan = aggregate(std::move(trees), config.fanout_limit);
  const std::string* previous = nullptr;
  for (const auto& tree : plan.trees) {
    if (config.emit_trees ? previous != nullptr : previous != nullptr && *previous != tree.subject_key) {
      result.output += "\n";
    }
    previous = &tree.subject_key;
    append_sentence(result, tree, config.emit_trees);
  }
  return result;
}

RunResult verbalize_owl(std::string_view text, Lexicalizer& lexicalizer, const RunConfig& config) {
  const std::vector<Axiom> axioms = parse_manchester(text);
  const Graph labels;
  RunResult result;
  bool first = true;
  for (const auto& tree : axiom_trees(axioms, labels, lexicalizer, OwlOptions{}, config.fanout_limit)) {
    if (config.emit_trees && !first) result.output += "\n";
    first = false;
    append_sentence(result, tree, config.emit_trees);
  }
  return result;
}

RunResult verbalize_sparql(std::string_view text, Lexicalizer& lexicalizer, const RunConfig& config) {
  const SparqlSelect query = parse_sparql(text);
  const Graph labels;
  RunResult result;
  append_sentence(result, query_tree(query, labels, lexicalizer), config.emit_trees);
  return result;
}

std::string diagnostic(std::string_view source, std::size_t line, std::size_t column, std::string_view message) {
  std::string out(source);
  out += ":" + std::to_string(line) + ":" + std::to_string(column) + ": ";
  out += message;
  for (char& c : out) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return out + "\n";
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path.string());
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

}  // namespace

InputFormat parse_format(std::string_view name) {
  if (name == "auto") return InputFormat::Auto;
  if (name == "rdf") return InputFormat::Rdf;
  if (name == "owl") return InputFormat::Owl;
  if (name == "sparql") return InputFormat::Sparql;
  throw Error("unknown format '" + std::string(name) + "'");
}

InputFormat resolve_format(InputFormat format, const std::filesystem::path& input) {
  if (format != InputFormat::Auto) return format;
  const std::string ext = input.extension().string();
  if (ext == ".ttl") return InputFormat::Rdf;
  if (ext == ".omn") return InputFormat::Owl;
  if (ext == ".rq") return InputFormat::Sparql;
  throw Error("cannot infer the format of '" + input.string() + "'; pass --format");
}

RunResult verbalize_document(std::string_view text, InputFormat format, const FrequencyLexicon& lexicon,
                             const RunConfig& config, std::string_view source_name) {
  RunResult result;
  try {
    LexicalizerConfig lc;
    lc.theta = config.theta;
    Lexicalizer lexicalizer(lexicon, lc);
    switch (format) {
      case InputFormat::Rdf: result = verbalize_rdf(text, lexicalizer, config); break;
      case InputFormat::Owl: result = verbalize_owl(text, lexicalizer, config); break;
      case InputFormat::Sparql: result = verbalize_sparql(text, lexicalizer, config); break;
      case InputFormat::Auto: throw Error("format must be resolved before verbalization");
    }
    for (const auto& w : lexicalizer.warnings()) result.diagnostics += diagnostic(source_name, 1, 1, "warning: " + w);
  } catch (const ParseError& e) {
    result = RunResult{1, {}, diagnostic(source_name, e.line(), e.column(),
                                         "error: expected " + e.expected() + ", found " + e.found())};
  } catch (const Unsupported& e) {
    const bool located = e.located();
    result = RunResult{2, {}, diagnostic(source_name, located ? e.line() : 1, located ? e.column() : 1,
                                         "unsupported: " + e.construct())};
  } catch (const Error& e) {
    result = RunResult{1, {}, diagnostic(source_name, 1, 1, std::string("error: ") + e.what())};
  }
  return result;
}

RunResult run(const RunConfig& config) {
  const std::string source = config.input_path == "-" ? std::string("<stdin>") : config.input_path;
  InputFormat format;
  std::string text;
  try {
    format = resolve_format(config.format, config.input_path == "-" ? std::filesystem::path() : std::filesystem::path(config.input_path));
    if (config.input_path == "-") {
      std::ostringstream buf;
      buf << std::cin.rdbuf();
      text = buf.str();
    } else {
      text = read_file(config.input_path);
    }
  } catch (const Error& e) {
    return RunResult{1, {}, diagnostic(source, 1, 1, std::string("error: ") + e.what())};
  }

  const std::filesystem::path lexicon_path = config.lexicon_path.empty() ? default_lexicon_path() : config.lexicon_path;
  FrequencyLexicon lexicon;
  try {
    lexicon = FrequencyLexicon::load(lexicon_path);
  } catch (const ParseError& e) {
    return RunResult{1, {}, diagnostic(lexicon_path.string(), e.line(), e.column(),
                                       "error: expected " + e.expected() + ", found " + e.found())};
  } catch (const Error& e) {
    return RunResult{1, {}, diagnostic(lexicon_path.string(), 1, 1, std::string("error: ") + e.what())};
  }
  return verbalize_document(text, format, lexicon, config, source);
}

std::filesystem::path default_lexicon_path() { return SEMVERB_DEFAULT_LEXICON; }

}  // namespace semverb
