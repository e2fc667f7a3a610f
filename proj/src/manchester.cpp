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

#include <array>

#include "cursor.hpp"
#include "semverb/parsers.hpp"

namespace semverb {

namespace {

using detail::Cursor;

constexpr std::size_t kMaxNesting = 128;

constexpr std::array<std::string_view, 9> kKeywords = {"and", "or",      "not",  "some", "only",
                                                       "min", "max", "exactly", "value"};

class ManchesterParser {
 public:
  ManchesterParser(std::string_view input, PrefixMap prefixes) : cursor_(input), prefixes_(std::move(prefixes)) {}

  std::vector<Axiom> document() {
    std::vector<Axiom> axioms;
    for (;;) {
      cursor_.skip_space();
      if (cursor_.at_end()) break;
      const std::size_t at = cursor_.pos();
      auto frame = frame_keyword();
      if (!frame) cursor_.fail("frame keyword (Class:, Individual: or Prefix:)");
      if (*frame == "Prefix") {
        prefix_frame();
      } else if (*frame == "Class") {
        class_frame(axioms);
      } else if (*frame == "Individual") {
        individual_frame(axioms);
      } else {
        cursor_.unsupported_at(at, "frame '" + *frame + ":'");
      }
    }
    return axioms;
  }

  ClassExpression standalone_expression() {
    ClassExpression ce = description(0);
    cursor_.skip_space();
    if (!cursor_.at_end()) cursor_.fail("end of class expression");
    return ce;
  }

 private:
  /// `Word:` followed by whitespace or end of input; consumes it.
  std::optional<std::string> frame_keyword() {
    cursor_.skip_space();
    std::size_t n = 0;
    while (std::isalpha(static_cast<unsigned char>(cursor_.peek(n)))) ++n;
    if (n == 0 || cursor_.peek(n) != ':') return std::nullopt;
    const char after = cursor_.peek(n + 1);
    if (after != '\0' && !std::isspace(static_cast<unsigned char>(after))) return std::nullopt;
    std::string word(cursor_.rest().substr(0, n));
    cursor_.reset(cursor_.pos() + n + 1);
    return word;
  }

  std::optional<std::string> peek_frame_keyword() {
    const std::size_t saved = cursor_.pos();
    auto word = frame_keyword();
    cursor_.reset(saved);
    return word;
  }

  static bool is_frame(const std::string& word) {
    return word == "Class" || word == "Individual" || word == "Prefix" || word == "ObjectProperty" ||
           word == "DataProperty" || word == "AnnotationProperty" || word == "Datatype" ||
           word == "Ontology" || word == "Import" || word == "Rule" || word == "DisjointClasses" ||
           word == "EquivalentClasses" || word == "SameIndividual" || word == "DifferentIndividuals";
  }

  void prefix_frame() {
    cursor_.skip_space();
    const std::size_t at = cursor_.pos();
    auto name = cursor_.read_prefixed_name();
    if (!name || name->back() != ':') cursor_.fail_at(at, "prefix name ending in ':'");
    cursor_.skip_space();
    if (cursor_.peek() != '<') cursor_.fail("namespace IRI in angle brackets");
    Iri ns = cursor_.read_iriref();
    name->pop_back();
    prefixes_[*name] = ns.str();
  }

  void class_frame(std::vector<Axiom>& axioms) {
    Iri cls = entity("class name");
    for (;;) {
      cursor_.skip_space();
      const std::size_t at = cursor_.pos();
      auto section = peek_frame_keyword();
      if (!section || is_frame(*section)) return;
      frame_keyword();
      if (*section != "SubClassOf") cursor_.unsupported_at(at, "class section '" + *section + ":'");
      do {
        axioms.emplace_back(SubClassOf{ClassExpression::atomic(cls), description(0)});
        cursor_.skip_space();
      } while (cursor_.consume(','));
    }
  }

  void individual_frame(std::vector<Axiom>& axioms) {
    Iri individual = entity("individual name");
    for (;;) {
      cursor_.skip_space();
      const std::size_t at = cursor_.pos();
      auto section = peek_frame_keyword();
      if (!section || is_frame(*section)) return;
      frame_keyword();
      if (*section == "Types") {
        do {
          axioms.emplace_back(ClassAssertion{individual, description(0)});
          cursor_.skip_space();
        } while (cursor_.consume(','));
      } else if (*section == "Facts") {
        do {
          cursor_.skip_space();
          if (cursor_.peek_keyword("not")) cursor_.unsupported("negative property assertion");
          Iri property = entity("property name");
          cursor_.skip_space();
          axioms.emplace_back(PropertyAssertion{individual, property, value_term()});
          cursor_.skip_space();
        } while (cursor_.consume(','));
      } else {
        cursor_.unsupported_at(at, "individual section '" + *section + ":'");
      }
    }
  }

  bool at_keyword() const {
    for (auto kw : kKeywords) {
      if (cursor_.peek_keyword(kw)) return true;
    }
    return false;
  }

  bool at_entity_start() const {
    const char c = cursor_.peek();
    return c == '<' || c == ':' || detail::is_name_start(c);
  }

  Iri entity(const std::string& what) {
    cursor_.skip_space();
    const std::size_t at = cursor_.pos();
    if (cursor_.peek() == '<') return cursor_.read_iriref();
    if (!detail::is_name_start(cursor_.peek()) && cursor_.peek() != ':') cursor_.fail(what);
    if (at_keyword()) cursor_.fail(what);
    std::size_t n = 0;
    while (detail::is_local_char(cursor_.peek(n))) ++n;
    while (n > 0 && cursor_.peek(n - 1) == '.') --n;
    std::string name(cursor_.rest().substr(0, n));
    if (name.back() == ':') cursor_.fail_at(at, what);
    cursor_.reset(at + n);
    if (name.find(':') == std::string::npos) name = ":" + name;
    return cursor_.expand(name, at, prefixes_);
  }

  Term value_term() {
    cursor_.skip_space();
    const std::size_t at = cursor_.pos();
    const char c = cursor_.peek();
    if (c == '"') {
      std::string lex = cursor_.read_string();
      if (cursor_.peek() == '@') {
        std::string tag = cursor_.read_langtag();
        return detail::make_literal_at(cursor_, at, [&] { return Literal::lang_string(lex, tag); });
      }
      if (cursor_.peek() == '^' && cursor_.peek(1) == '^') {
        cursor_.get();
        cursor_.get();
        Iri dt = entity("datatype");
        return detail::make_literal_at(cursor_, at, [&] { return Literal(lex, dt); });
      }
      return Literal::plain(std::move(lex));
    }
    if (cursor_.consume_keyword("true")) return Literal("true", vocab::xsd_boolean());
    if (cursor_.consume_keyword("false")) return Literal("false", vocab::xsd_boolean());
    if (auto number = cursor_.read_number()) return *number;
    return entity("individual or literal");
  }

  unsigned cardinality() {
    cursor_.skip_space();
    const std::size_t at = cursor_.pos();
    std::size_t n = 0;
    while (std::isdigit(static_cast<unsigned char>(cursor_.peek(n)))) ++n;
    if (n == 0) cursor_.fail("non-negative integer");
    if (n > 9) cursor_.fail_at(at, "cardinality below 10^9");
    const unsigned value = static_cast<unsigned>(std::stoul(std::string(cursor_.rest().substr(0, n))));
    cursor_.reset(at + n);
    return value;
  }

  ClassExpression description(std::size_t depth) {
    std::vector<ClassExpression> operands{conjunction(depth)};
    for (;;) {
      cursor_.skip_space();
      if (!cursor_.consume_keyword("or")) break;
      operands.push_back(conjunction(depth));
    }
    if (operands.size() == 1) return operands.front();
    return ClassExpression::disjunction(std::move(operands));
  }

  ClassExpression conjunction(std::size_t depth) {
    std::vector<ClassExpression> operands{primary(depth)};
    for (;;) {
      cursor_.skip_space();
      if (!cursor_.consume_keyword("and")) break;
      operands.push_back(primary(depth));
    }
    if (operands.size() == 1) return operands.front();
    return ClassExpression::conjunction(std::move(operands));
  }

  ClassExpression primary(std::size_t depth) {
    if (depth > kMaxNesting) cursor_.unsupported("class expression nested deeper than 128");
    cursor_.skip_space();
    if (cursor_.consume_keyword("not")) return ClassExpression::negation(primary(depth + 1));
    if (cursor_.consume('(')) {
      ClassExpression inner = description(depth + 1);
      cursor_.expect(')', "')'");
      return inner;
    }
    if (cursor_.consume('{')) {
      std::vector<Iri> individuals;
      do {
        individuals.push_back(entity("individual name"));
        cursor_.skip_space();
      } while (cursor_.consume(','));
      cursor_.expect('}', "'}' closing the individual list");
      return ClassExpression::one_of(std::move(individuals));
    }
    if (cursor_.peek() == '[') cursor_.unsupported("datatype restriction");
    if (peek_frame_keyword()) cursor_.fail("class expression");
    Iri name = entity("class expression");
    cursor_.skip_space();
    if (cursor_.consume_keyword("some")) return ClassExpression::some(name, primary(depth + 1));
    if (cursor_.consume_keyword("only")) return ClassExpression::only(name, primary(depth + 1));
    if (cursor_.consume_keyword("value")) return ClassExpression::value(name, value_term());
    if (cursor_.consume_keyword("min")) return ClassExpression::min(name, qualified_check(cardinality()));
    if (cursor_.consume_keyword("max")) return ClassExpression::max(name, qualified_check(cardinality()));
    if (cursor_.consume_keyword("exactly")) return ClassExpression::exactly(name, qualified_check(cardinality()));
    return ClassExpression::atomic(name);
  }

  unsigned qualified_check(unsigned n) {
    cursor_.skip_space();
    const char c = cursor_.peek();
    if ((c == '(' || c == '{' || at_entity_start()) && !at_keyword() && !peek_frame_keyword()) {
      cursor_.unsupported("qualified cardinality restriction");
    }
    return n;
  }

  Cursor cursor_;
  PrefixMap prefixes_;
};

}  // namespace

std::vector<Axiom> parse_manchester(std::string_view input) {
  return ManchesterParser(input, default_prefixes()).document();
}

ClassExpression parse_class_expression(std::string_view input, const PrefixMap& prefixes) {
  return ManchesterParser(input, prefixes).standalone_expression();
}

}  // namespace semverb
