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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <sys/wait.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "semverb/aggregator.hpp"
#include "semverb/error.hpp"
#include "semverb/owl_verbalizer.hpp"
#include "semverb/parsers.hpp"
#include "semverb/pipeline.hpp"
#include "semverb/triple_verbalizer.hpp"
#include "support.hpp"

using namespace semverb;
namespace fs = std::filesystem;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int id, const std::string& name, bool ok, const std::string& detail) {
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << " [" << id << "] " << name << ": " << detail << std::endl;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string rstrip_lines(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::string out;
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r')) line.pop_back();
    out += line + "\n";
  }
  while (out.size() >= 2 && out[out.size() - 1] == '\n' && out[out.size() - 2] == '\n') out.pop_back();
  return out;
}

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(3);
  s << std::fixed << v;
  return s.str();
}

std::vector<fs::path> golden_inputs() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(test::source_path("tests/golden"))) {
    const auto ext = e.path().extension();
    if (ext == ".ttl" || ext == ".omn" || ext == ".rq") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> split_tab(const std::string& line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t tab = line.find('\t', start);
    out.push_back(line.substr(start, tab - start));
    if (tab == std::string::npos) return out;
    start = tab + 1;
  }
}

// 1 ------------------------------------------------------------------------

void golden_corpus() {
  const auto start = Clock::now();
  std::size_t docs = 0;
  std::size_t docs_ok = 0;
  std::vector<std::string> bad;
  for (const auto& input : golden_inputs()) {
    ++docs;
    fs::path status = input;
    status.replace_extension(".status");
    fs::path expected = input;
    expected.replace_extension(".expected");
    const RunResult r = verbalize_document(test::slurp(input.string()), resolve_format(InputFormat::Auto, input),
                                           test::lexicon(), RunConfig{}, input.filename().string());
    bool ok;
    if (fs::exists(status)) {
      ok = r.exit_code == std::stoi(test::slurp(status.string())) && r.output.empty();
    } else {
      ok = r.exit_code == 0 && rstrip_lines(r.output) == rstrip_lines(test::slurp(expected.string()));
    }
    if (ok) {
      ++docs_ok;
    } else {
      bad.push_back(input.filename().string());
    }
  }

  std::size_t phrases = 0;
  std::size_t phrases_ok = 0;
  std::istringstream table(test::slurp(test::source_path("tests/golden/ce_phrases.tsv")));
  std::string line;
  while (std::getline(table, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_tab(line);
    ++phrases;
    OwlOptions options;
    options.specialize = cols.at(0) == "on";
    Lexicalizer lex(test::lexicon());
    const std::string got = verbalize_ce(parse_class_expression(cols.at(1)), Graph(), lex, options).text();
    if (got == cols.at(2)) {
      ++phrases_ok;
    } else {
      bad.push_back("'" + cols.at(1) + "' -> '" + got + "'");
    }
  }

  std::size_t literals_ok = 0;
  const std::vector<std::pair<Literal, std::string>> literals{
      {Literal::lang_string("Albert Einstein", "en"), "Albert Einstein"},
      {Literal("123", Iri("http://www.w3.org/2001/XMLSchema#int")), "123"},
      {Literal("123", Iri("http://dbpedia.org/datatype/squareKilometre")), "123 square kilometres"},
      {Literal("1879-03-14", vocab::xsd_date()), "14 March 1879"}};
  for (const auto& [lit, want] : literals) literals_ok += realize_literal(lit, Graph(), LexicalizerConfig{}) == want;
  const bool people = lexicalize_iri(test::ex("Person"), Graph(), true, LexicalizerConfig{}).plural == "people";

  const double elapsed = seconds_since(start);
  const bool ok = docs_ok == docs && phrases_ok == phrases && literals_ok == literals.size() && people && elapsed < 1.0;
  std::string detail = std::to_string(docs_ok) + "/" + std::to_string(docs) + " documents, " +
                       std::to_string(phrases_ok) + "/" + std::to_string(phrases) + " class-expression phrases, " +
                       std::to_string(literals_ok + people) + "/" + std::to_string(literals.size() + 1) +
                       " lexicalizations, " + fmt(elapsed) + " s";
  for (const auto& b : bad) detail += "; mismatch " + b;
  report(1, "golden corpus", ok, detail);
}

// 2 ------------------------------------------------------------------------

void aggregation_pipeline() {
  const std::string text = test::slurp(test::source_path("tests/golden/ex3_clustering.ttl"));
  const Graph g = parse_turtle(text);
  Lexicalizer lex(test::lexicon());
  std::vector<DepTree> trees;
  for (const auto& t : g.triples()) trees.push_back(realize_triple(t, g, lex));
  std::vector<std::string> got;
  for (const auto& t : aggregate(std::move(trees), 5).trees) got.push_back(realize_tree(t));
  const std::vector<std::string> want{"Albert Einstein is a scientist.", "Albert Einstein's birth place is Ulm.",
                                      "Albert Einstein's death place is Princeton.", "William Shakespeare is a writer.",
                                      "William Shakespeare's death date is 23 April 1616."};
  std::string joined;
  for (const auto& s : got) joined += (joined.empty() ? "" : " ") + s;
  report(2, "aggregation ordering", got == want, joined);
}

// 3 ------------------------------------------------------------------------

void ratio_oracle() {
  std::map<std::string, double> frozen;
  std::istringstream in(test::slurp(test::source_path("tests/fixtures/pos_ratio_golden.tsv")));
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cols = split_tab(line);
    frozen[cols.at(0)] = cols.at(1) == "inf" ? INFINITY : std::stod(cols.at(1));
  }
  std::size_t agree = 0;
  const auto lemmas = test::lexicon().lemmas();
  std::vector<std::string> bad;
  for (const auto& lemma : lemmas) {
    auto it = frozen.find(lemma);
    const double got = score_pos_ratio(lemma, test::lexicon());
    bool ok = it != frozen.end();
    if (ok && (std::isinf(got) || std::isinf(it->second))) {
      ok = got == it->second;
    } else if (ok) {
      ok = std::abs(got - it->second) <= 1e-9 * std::max({std::abs(got), std::abs(it->second), 1e-300});
    }
    if (ok) {
      ++agree;
    } else {
      bad.push_back(lemma);
    }
  }
  LexicalizerConfig config;
  config.theta = 1.0;
  const bool crosses = classify_property("crosses", test::lexicon(), config) == PartOfSpeech::VerbPhrase;
  std::string detail = std::to_string(agree) + "/" + std::to_string(lemmas.size()) + " lemmas within 1e-9 (" +
                       std::to_string(frozen.size()) + " frozen), crosses -> " + (crosses ? "VerbPhrase" : "NounPhrase");
  for (const auto& b : bad) detail += "; mismatch " + b;
  report(3, "ratio oracle", agree == lemmas.size() && frozen.size() == lemmas.size() && crosses, detail);
}

// 4 ------------------------------------------------------------------------

std::vector<std::string> realize_all(const SentencePlan& plan) {
  std::vector<std::string> out;
  for (const auto& t : plan.trees) out.push_back(realize_tree(t));
  return out;
}

std::size_t token_count(const std::vector<std::string>& sentences) {
  std::size_t n = 0;
  for (const auto& s : sentences) n += split_words(s).size();
  return n;
}

void grouping_properties() {
  const auto start = Clock::now();
  const std::vector<std::string> subjects{"Ada_Lovelace", "Alan_Turing", "Grace_Hopper", "John_Neumann", "Kurt_Goedel"};
  const std::vector<std::string> predicates{"birthPlace", "deathPlace", "influenced", "worksAt", "bornIn"};
  const std::vector<std::string> objects{"Ulm", "Boston", "Vienna", "London", "Princeton"};
  std::mt19937 rng(20260401);
  Lexicalizer lex(test::lexicon());
  const Graph empty;

  std::size_t cases = 0;
  std::map<std::string, std::size_t> violations;
  for (; cases < 1200; ++cases) {
    const int n = std::uniform_int_distribution<int>(2, 10)(rng);
    std::vector<Triple> triples;
    while (static_cast<int>(triples.size()) < n) {
      Triple t(test::ex(subjects[rng() % 5]), test::ex(predicates[rng() % 5]), test::ex(objects[rng() % 5]));
      if (std::find(triples.begin(), triples.end(), t) == triples.end()) triples.push_back(t);
    }
    std::vector<DepTree> trees;
    for (const auto& t : triples) trees.push_back(realize_triple(t, empty, lex));

    const SentencePlan ordered = cluster_and_order(trees);
    const SentencePlan by_subject = group_subjects(ordered);
    const SentencePlan by_object = group_objects(by_subject);
    const auto s0 = realize_all(ordered);
    const auto s1 = realize_all(by_subject);
    const auto s2 = realize_all(by_object);

    for (const auto& t : triples) {
      const std::string subj = lex.resource(t.subject(), empty).singular;
      const std::string obj = lex.object(t.object(), empty);
      const LexicalEntry& pred = lex.property(t.predicate(), empty);
      const bool found = std::any_of(s2.begin(), s2.end(), [&](const std::string& s) {
        return s.find(subj) != std::string::npos && s.find(obj) != std::string::npos &&
               (s.find(pred.singular) != std::string::npos || s.find(pred.plural) != std::string::npos);
      });
      if (!found) ++violations["content"];
    }
    if (token_count(s1) > token_count(s0) || token_count(s2) > token_count(s1)) ++violations["monotonicity"];
    if (realize_all(group_subjects(by_subject)) != s1) ++violations["subject idempotence"];
    if (realize_all(group_objects(by_object)) != s2) ++violations["object idempotence"];
    std::map<std::string, int> seen;
    for (const auto& t : by_subject.trees) {
      const std::string s = subject_realization(t);
      if (!s.empty()) ++seen[t.subject_key + "\n" + s];
    }
    for (const auto& [key, count] : seen) {
      if (count != 1) ++violations["subject once"];
    }
  }
  const double elapsed = seconds_since(start);
  std::string detail = std::to_string(cases) + " random cases, " + fmt(elapsed) + " s";
  std::size_t total = 0;
  for (const auto& [name, count] : violations) {
    detail += "; " + name + " violated " + std::to_string(count) + "x";
    total += count;
  }
  report(4, "grouping properties", total == 0 && cases >= 1000 && elapsed < 30.0, detail);
}

// 5 ------------------------------------------------------------------------

using Extension = std::set<Iri>;

struct World {
  std::vector<Iri> individuals;
  std::vector<Iri> classes;
  std::vector<Iri> properties;
  Graph graph;
};

std::vector<Term> successors(const Graph& g, const Iri& s, const Iri& p) {
  std::set<std::string> seen;
  std::vector<Term> out;
  for (const auto& t : g.triples()) {
    if (t.subject() == s && t.predicate() == p && seen.insert(to_string(t.object())).second) out.push_back(t.object());
  }
  return out;
}

Extension brute_force(const ClassExpression& ce, const World& w) {
  using K = ClassExpression::Kind;
  Extension out;
  switch (ce.kind()) {
    case K::Atomic:
      for (const auto& t : w.graph.triples()) {
        if (t.predicate() == vocab::rdf_type() && t.object() == Term(ce.iri())) out.insert(t.subject());
      }
      return out;
    case K::And: {
      out = brute_force(ce.operands()[0], w);
      for (std::size_t i = 1; i < ce.operands().size(); ++i) {
        const Extension next = brute_force(ce.operands()[i], w);
        Extension both;
        std::set_intersection(out.begin(), out.end(), next.begin(), next.end(), std::inserter(both, both.begin()));
        out = both;
      }
      return out;
    }
    case K::Or:
      for (const auto& op : ce.operands()) {
        const Extension e = brute_force(op, w);
        out.insert(e.begin(), e.end());
      }
      return out;
    case K::Not: {
      const Extension inner = brute_force(ce.operands()[0], w);
      for (const auto& x : w.individuals) {
        if (!inner.count(x)) out.insert(x);
      }
      return out;
    }
    default:
      break;
  }
  Extension filler;
  if (ce.kind() == K::Some || ce.kind() == K::Only) filler = brute_force(ce.filler(), w);
  for (const auto& x : w.individuals) {
    const auto ys = ce.kind() == K::OneOf ? std::vector<Term>{} : successors(w.graph, x, ce.iri());
    auto in_filler = [&](const Term& y) { return std::holds_alternative<Iri>(y) && filler.count(std::get<Iri>(y)); };
    bool member = false;
    switch (ce.kind()) {
      case K::Some: member = std::any_of(ys.begin(), ys.end(), in_filler); break;
      case K::Only: member = std::all_of(ys.begin(), ys.end(), in_filler); break;
      case K::Min: member = ys.size() >= ce.cardinality(); break;
      case K::Max: member = ys.size() <= ce.cardinality(); break;
      case K::Exactly: member = ys.size() == ce.cardinality(); break;
      case K::Value: member = std::find(ys.begin(), ys.end(), ce.individual()) != ys.end(); break;
      case K::OneOf:
        member = std::find(ce.individuals().begin(), ce.individuals().end(), x) != ce.individuals().end();
        break;
      default: break;
    }
    if (member) out.insert(x);
  }
  return out;
}

ClassExpression random_ce(std::mt19937& rng, const World& w, int depth) {
  auto pick = [&](const auto& v) { return v[rng() % v.size()]; };
  const int choice = depth <= 1 ? 0 : static_cast<int>(rng() % 10);
  switch (choice) {
    case 0:
    case 1: {
      const int leaf = static_cast<int>(rng() % 6);
      if (leaf == 0) return ClassExpression::value(pick(w.properties), pick(w.individuals));
      if (leaf == 1) return ClassExpression::one_of({pick(w.individuals), pick(w.individuals)});
      if (leaf == 2) return ClassExpression::min(pick(w.properties), rng() % 3);
      return ClassExpression::atomic(pick(w.classes));
    }
    case 2: return ClassExpression::conjunction({random_ce(rng, w, depth - 1), random_ce(rng, w, depth - 1)});
    case 3: return ClassExpression::disjunction({random_ce(rng, w, depth - 1), random_ce(rng, w, depth - 1)});
    case 4: return ClassExpression::negation(random_ce(rng, w, depth - 1));
    case 5:
    case 6: return ClassExpression::some(pick(w.properties), random_ce(rng, w, depth - 1));
    case 7: return ClassExpression::only(pick(w.properties), random_ce(rng, w, depth - 1));
    case 8: return ClassExpression::max(pick(w.properties), rng() % 3);
    default: return ClassExpression::exactly(pick(w.properties), rng() % 3);
  }
}

World random_world(std::mt19937& rng) {
  World w;
  const int n = std::uniform_int_distribution<int>(1, 20)(rng);
  for (int i = 0; i < n; ++i) w.individuals.push_back(test::ex("i" + std::to_string(i)));
  for (const char* c : {"A", "B", "C"}) w.classes.push_back(test::ex(c));
  for (const char* p : {"p", "q", "r"}) w.properties.push_back(test::ex(p));
  for (const auto& x : w.individuals) {
    for (const auto& c : w.classes) {
      if (rng() % 3 == 0) w.graph.add(Triple(x, vocab::rdf_type(), c));
    }
    const int edges = static_cast<int>(rng() % 4);
    for (int e = 0; e < edges; ++e) {
      const Iri& p = w.properties[rng() % w.properties.size()];
      if (rng() % 8 == 0) {
        w.graph.add(Triple(x, p, Literal::integer(static_cast<long long>(rng() % 5))));
      } else {
        w.graph.add(Triple(x, p, w.individuals[rng() % w.individuals.size()]));
      }
    }
  }
  return w;
}

void ce_semantics() {
  std::mt19937 rng(4242);
  std::size_t expressions = 0;
  std::size_t checks = 0;
  std::size_t disagreements = 0;
  for (; expressions < 600; ++expressions) {
    const World w = random_world(rng);
    const ClassExpression ce = random_ce(rng, w, 1 + static_cast<int>(rng() % 4));
    const Extension expected = brute_force(ce, w);
    for (const auto& x : w.individuals) {
      ++checks;
      if (evaluate_ce(ce, w.graph, x) != static_cast<bool>(expected.count(x))) ++disagreements;
    }
  }

  const Graph desk = parse_turtle(
      ":Albert_Einstein a :Scientist ; :birthPlace :Ulm .\n"
      ":Marie_Curie a :Scientist ; :birthPlace :Warsaw ; :spouse :Pierre_Curie .\n"
      ":William_Shakespeare a :Writer ; :birthPlace :Stratford .\n"
      ":Benjamin_Franklin a :Scientist , :Writer ; :birthPlace :Boston .\n"
      ":Leonard_Nimoy a :Actor ; :birthPlace :Boston .\n"
      ":Ulm a :City ; :locatedIn :Germany .\n"
      ":Warsaw a :City ; :locatedIn :Poland .\n"
      ":Stratford a :Town ; :locatedIn :England .\n"
      ":Boston a :City ; :locatedIn :United_States .\n");
  const std::vector<std::pair<std::string, std::string>> tasks{
      {"Scientist and birthPlace some (City and locatedIn value Germany)", "Albert_Einstein"},
      {"Scientist and spouse min 1", "Marie_Curie"},
      {"Writer and not Scientist", "William_Shakespeare"},
      {"birthPlace value Boston and not Scientist", "Leonard_Nimoy"}};
  const std::vector<std::string> candidates{"Albert_Einstein", "Marie_Curie", "William_Shakespeare",
                                            "Benjamin_Franklin", "Leonard_Nimoy"};
  std::size_t solved = 0;
  std::string phrases;
  for (const auto& [text, answer] : tasks) {
    const ClassExpression ce = parse_class_expression(text);
    std::vector<std::string> matches;
    for (const auto& c : candidates) {
      if (evaluate_ce(ce, desk, test::ex(c))) matches.push_back(c);
    }
    solved += matches == std::vector<std::string>{answer};
    Lexicalizer lex(test::lexicon());
    phrases += "; '" + verbalize_ce(ce, Graph(), lex).text() + "' -> " + (matches.empty() ? "none" : matches[0]);
  }
  report(5, "class-expression semantics",
         disagreements == 0 && expressions >= 500 && solved == tasks.size(),
         std::to_string(expressions) + " random expressions, " + std::to_string(checks) + " memberships, " +
             std::to_string(disagreements) + " disagreements; " + std::to_string(solved) + "/" +
             std::to_string(tasks.size()) + " identification tasks" + phrases);
}

// 6 ------------------------------------------------------------------------

std::string mutate(const std::string& seed, std::mt19937& rng) {
  static const std::string alphabet = " \n\t.;,:{}()[]<>\"'@^#?_-+*/\\0123456789aAzZ";
  std::string s = seed;
  const int edits = 1 + static_cast<int>(rng() % 4);
  for (int e = 0; e < edits; ++e) {
    const std::size_t pos = s.empty() ? 0 : rng() % (s.size() + 1);
    switch (rng() % 6) {
      case 0:
        if (!s.empty() && pos < s.size()) s.erase(pos, 1 + rng() % 4);
        break;
      case 1: s.insert(pos, 1, alphabet[rng() % alphabet.size()]); break;
      case 2:
        if (pos < s.size()) s[pos] = alphabet[rng() % alphabet.size()];
        break;
      case 3: s = s.substr(0, pos); break;
      case 4:
        if (pos < s.size()) s.insert(pos, s.substr(pos, 1 + rng() % 12));
        break;
      default: s.insert(pos, 1, static_cast<char>(rng() % 256)); break;
    }
  }
  return s;
}

void parser_fuzzing() {
  struct Target {
    std::string name;
    InputFormat format;
    std::function<void(const std::string&)> parse;
    std::vector<std::string> seeds;
  };
  std::vector<Target> targets{
      {"turtle", InputFormat::Rdf, [](const std::string& s) { parse_turtle(s); }, {}},
      {"manchester", InputFormat::Owl, [](const std::string& s) { parse_manchester(s); }, {}},
      {"sparql", InputFormat::Sparql, [](const std::string& s) { parse_sparql(s); }, {}},
      {"class expression", InputFormat::Auto, [](const std::string& s) { parse_class_expression(s); }, {}},
      {"dependency tree", InputFormat::Auto, [](const std::string& s) { parse_tree(s); }, {}}};
  for (const auto& input : golden_inputs()) {
    const std::string text = test::slurp(input.string());
    const InputFormat f = resolve_format(InputFormat::Auto, input);
    for (auto& t : targets) {
      if (t.format == f) t.seeds.push_back(text);
    }
    if (f == InputFormat::Rdf) {
      RunConfig config;
      config.emit_trees = true;
      targets[4].seeds.push_back(verbalize_document(text, f, test::lexicon(), config, "seed").output);
    }
  }
  targets[0].seeds.push_back("@prefix e: <http://e.org/> .\ne:a e:p 1.5e3, true, \"x\\u0041\"@en-GB ; a e:C .");
  targets[1].seeds.push_back("Prefix: e: <http://e.org/>\nClass: e:A SubClassOf: p min 2 and not (B or {a, b})");
  targets[2].seeds.push_back(
      "PREFIX e: <http://e.org/> SELECT DISTINCT ?x WHERE { ?x a e:C ; e:p ?y OPTIONAL { ?x e:q ?z } } ORDER BY DESC(?y) LIMIT 5");
  std::istringstream ces(test::slurp(test::source_path("tests/golden/ce_phrases.tsv")));
  std::string line;
  while (std::getline(ces, line)) {
    if (!line.empty() && line[0] != '#') targets[3].seeds.push_back(split_tab(line).at(1));
  }

  std::mt19937 rng(1337);
  constexpr int kPerTarget = 4000;
  std::size_t runs = 0;
  std::size_t located_failures = 0;
  std::size_t bad = 0;
  double slowest = 0.0;
  std::string first_bad;
  for (const auto& t : targets) {
    for (int i = 0; i < kPerTarget; ++i) {
      const std::string input = mutate(t.seeds[rng() % t.seeds.size()], rng);
      ++runs;
      const auto start = Clock::now();
      bool ok = true;
      bool parsed = false;
      try {
        t.parse(input);
        parsed = true;
      } catch (const ParseError& e) {
        ok = e.line() >= 1 && e.column() >= 1;
        ++located_failures;
      } catch (const Unsupported& e) {
        ok = e.located();
        ++located_failures;
      } catch (const std::exception& e) {
        ok = false;
        if (first_bad.empty()) first_bad = t.name + ": " + e.what();
      }
      if (parsed && t.format != InputFormat::Auto) {
        try {
          const RunResult r = verbalize_document(input, t.format, test::lexicon(), RunConfig{}, "fuzz");
          ok = ok && r.exit_code >= 0 && r.exit_code <= 2;
        } catch (const std::exception& e) {
          ok = false;
          if (first_bad.empty()) first_bad = t.name + " pipeline: " + e.what();
        }
      }
      slowest = std::max(slowest, seconds_since(start));
      if (!ok) {
        ++bad;
        if (first_bad.empty()) first_bad = t.name + ": unlocated failure on '" + input.substr(0, 60) + "'";
      }
    }
  }
  report(6, "parser robustness", bad == 0 && slowest < 1.0,
         std::to_string(runs) + " mutated inputs over " + std::to_string(targets.size()) + " parsers, " +
             std::to_string(located_failures) + " located rejections, " + std::to_string(bad) +
             " crashes or unlocated errors, slowest " + fmt(slowest) + " s" + (first_bad.empty() ? "" : "; " + first_bad));
}

// 7 ------------------------------------------------------------------------

void fanout() {
  std::string doc;
  for (int i = 1; i <= 20; ++i) doc += ":Rhine_Bridge :crosses :River_" + std::to_string(i) + " .\n";
  RunConfig config;
  config.fanout_limit = 5;
  const RunResult r = verbalize_document(doc, InputFormat::Rdf, test::lexicon(), config, "fanout");
  std::size_t objects = 0;
  for (std::size_t at = r.output.find("River "); at != std::string::npos; at = r.output.find("River ", at + 1)) {
    ++objects;
  }
  const bool ok = r.exit_code == 0 && objects == 5 && r.output.find(" and 15 others.") != std::string::npos &&
                  std::count(r.output.begin(), r.output.end(), '\n') == 1;
  report(7, "fan-out shortening", ok, rstrip_lines(r.output).substr(0, r.output.size() - 1));
}

// 8 ------------------------------------------------------------------------

std::string run_cli(const std::string& args, int& status) {
  const std::string cmd = std::string(SEMVERB_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) {
    status = -1;
    return {};
  }
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int raw = pclose(pipe);
  status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return out;
}

void determinism() {
  std::vector<std::string> runs;
  std::size_t files = 0;
  for (int round = 0; round < 10; ++round) {
    std::string all;
    files = 0;
    for (const auto& input : golden_inputs()) {
      for (const char* flags : {"", "--emit-trees "}) {
        int status = 0;
        all += run_cli(flags + input.string(), status);
        all += "#exit " + std::to_string(status) + "\n";
      }
      ++files;
    }
    runs.push_back(all);
  }
  const bool same = std::all_of(runs.begin(), runs.end(), [&](const std::string& r) { return r == runs.front(); });
  report(8, "determinism", same && !runs.front().empty(),
         "10 CLI runs over " + std::to_string(files) + " golden files (plain and --emit-trees), " +
             std::to_string(runs.front().size()) + " bytes each, " + (same ? "byte-identical" : "outputs differ"));
}

}  // namespace

int main() {
  const std::vector<std::function<void()>> criteria{golden_corpus, aggregation_pipeline, ratio_oracle,
                                                    grouping_properties, ce_semantics, parser_fuzzing,
                                                    fanout, determinism};
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    try {
      criteria[i]();
    } catch (const std::exception& e) {
      report(static_cast<int>(i + 1), "criterion", false, std::string("exception: ") + e.what());
    }
  }
  return failures == 0 ? 0 : 1;
}
