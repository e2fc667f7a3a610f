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

#include <algorithm>

#include "cursor.hpp"
#include "semverb/parsers.hpp"

namespace semverb {

namespace {

using detail::Cursor;

bool mentions(const TriplePattern& p, const Variable& v) {
  auto is = [&](const Term& t) {
    const auto* var = std::get_if<Variable>(&t);
    return var != nullptr && *var == v;
  };
  return is(p.subject()) || is(p.predicate()) || is(p.object());
}

class SparqlParser {
 public:
  explicit SparqlParser(std::string_view input) : cursor_(input) { query_.prefixes = default_prefixes(); }

  SparqlSelect parse() {
    prologue();
    cursor_.skip_space();
    for (auto form : {"CONSTRUCT", "ASK", "DESCRIBE"}) {
      if (cursor_.peek_keyword(form)) cursor_.unsupported(std::string(form) + " query form");
    }
    if (!cursor_.consume_keyword("SELECT")) cursor_.fail("SELECT");
    select_clause();
    cursor_.skip_space();
    if (cursor_.peek_keyword("FROM")) cursor_.unsupported("dataset clause (FROM)");
    cursor_.consume_keyword("WHERE");
    cursor_.expect('{', "'{' opening the WHERE clause");
    group(query_.body, true);
    modifiers();
    cursor_.skip_space();
    if (!cursor_.at_end()) cursor_.fail("end of query");
    check_projection();
    return std::move(query_);
  }

 private:
  void prologue() {
    for (;;) {
      cursor_.skip_space();
      if (cursor_.peek_keyword("BASE")) cursor_.unsupported("BASE declaration");
      if (!cursor_.consume_keyword("PREFIX")) return;
      cursor_.skip_space();
      const std::size_t at = cursor_.pos();
      auto name = cursor_.read_prefixed_name();
      if (!name || name->back() != ':') cursor_.fail_at(at, "prefix name ending in ':'");
      cursor_.skip_space();
      if (cursor_.peek() != '<') cursor_.fail("namespace IRI in angle brackets");
      Iri ns = cursor_.read_iriref();
      name->pop_back();
      query_.prefixes[*name] = ns.str();
    }
  }

  void select_clause() {
    cursor_.skip_space();
    if (cursor_.consume_keyword("DISTINCT")) query_.distinct = true;
    cursor_.skip_space();
    if (cursor_.peek_keyword("REDUCED")) cursor_.unsupported("SELECT REDUCED");
    for (;;) {
      cursor_.skip_space();
      const char c = cursor_.peek();
      if (c == '*') cursor_.unsupported("SELECT *");
      if (c == '(') cursor_.unsupported("projection expression or aggregate");
      if (c != '?' && c != '$') break;
      projection_at_.push_back(cursor_.pos());
      query_.projection.push_back(variable());
    }
    if (query_.projection.empty()) cursor_.fail("projection variable");
  }

  Variable variable() {
    const std::size_t at = cursor_.pos();
    cursor_.get();
    std::size_t n = 0;
    while (std::isalnum(static_cast<unsigned char>(cursor_.peek(n))) || cursor_.peek(n) == '_') ++n;
    if (n == 0) cursor_.fail_at(at, "variable name");
    std::string name(cursor_.rest().substr(0, n));
    cursor_.reset(cursor_.pos() + n);
    return Variable(std::move(name));
  }

  void reject_keywords() {
    for (auto kw : {"FILTER", "BIND", "VALUES", "MINUS", "GRAPH", "SERVICE", "UNION"}) {
      if (cursor_.peek_keyword(kw)) cursor_.unsupported(std::string(kw));
    }
  }

  bool at_group_keyword() const {
    for (auto kw : {"OPTIONAL", "FILTER", "BIND", "VALUES", "MINUS", "GRAPH", "SERVICE", "UNION"}) {
      if (cursor_.peek_keyword(kw)) return true;
    }
    return false;
  }

  /// Reads patterns up to and including the closing '}'.
  void group(std::vector<TriplePattern>& out, bool allow_optional) {
    bool need_separator = false;
    for (;;) {
      cursor_.skip_space();
      if (cursor_.at_end()) cursor_.fail("'}' closing the group");
      if (cursor_.consume('}')) return;
      if (cursor_.consume('.')) {
        need_separator = false;
        continue;
      }
      if (cursor_.peek_keyword("OPTIONAL")) {
        if (!allow_optional) cursor_.unsupported("nested OPTIONAL");
        cursor_.consume_keyword("OPTIONAL");
        cursor_.expect('{', "'{' opening the OPTIONAL block");
        std::vector<TriplePattern> block;
        group(block, false);
        if (block.empty()) cursor_.fail("triple pattern inside OPTIONAL");
        query_.optionals.push_back(std::move(block));
        need_separator = false;
        continue;
      }
      reject_keywords();
      if (cursor_.peek() == '{') cursor_.unsupported("nested group graph pattern");
      if (need_separator) cursor_.fail("'.' or '}'");
      triples(out);
      need_separator = true;
      cursor_.skip_space();
      if (at_group_keyword()) need_separator = false;
    }
  }

  void reject_blank(const char* position) {
    const char c = cursor_.peek();
    if ((c == '_' && cursor_.peek(1) == ':') || c == '[') {
      cursor_.unsupported(std::string("blank node in ") + position);
    }
    if (c == '(') cursor_.unsupported(std::string("collection in ") + position);
  }

  std::optional<Iri> iri() {
    if (cursor_.peek() == '<') return cursor_.read_iriref();
    const std::size_t at = cursor_.pos();
    if (auto name = cursor_.read_prefixed_name()) return cursor_.expand(*name, at, query_.prefixes);
    return std::nullopt;
  }

  void triples(std::vector<TriplePattern>& out) {
    cursor_.skip_space();
    reject_blank("subject position");
    Term subject = [&]() -> Term {
      if (cursor_.peek() == '?' || cursor_.peek() == '$') return variable();
      if (auto s = iri()) return *s;
      cursor_.fail("subject (variable or IRI)");
    }();
    for (;;) {
      cursor_.skip_space();
      Term predicate = verb();
      cursor_.skip_space();
      const char c = cursor_.peek();
      if (c == '/' || c == '|' || c == '*' || c == '+' || (c == '?' && !std::isalnum(static_cast<unsigned char>(cursor_.peek(1))))) {
        cursor_.unsupported("property path");
      }
      for (;;) {
        cursor_.skip_space();
        Term object = object_term();
        out.emplace_back(subject, predicate, std::move(object));
        cursor_.skip_space();
        if (!cursor_.consume(',')) break;
      }
      cursor_.skip_space();
      if (!cursor_.consume(';')) return;
      for (;;) {
        cursor_.skip_space();
        if (!cursor_.consume(';')) break;
      }
      if (cursor_.peek() == '.' || cursor_.peek() == '}') return;
    }
  }

  Term verb() {
    if (cursor_.peek() == '^' || cursor_.peek() == '!') cursor_.unsupported("property path");
    if (cursor_.peek() == '?' || cursor_.peek() == '$') return variable();
    if (cursor_.peek() == 'a' && !detail::is_local_char(cursor_.peek(1))) {
      cursor_.get();
      return vocab::rdf_type();
    }
    if (cursor_.peek() == '(') cursor_.unsupported("property path");
    auto p = iri();
    if (!p) cursor_.fail("predicate (variable, IRI or 'a')");
    return *p;
  }

  Term object_term() {
    reject_blank("object position");
    const std::size_t at = cursor_.pos();
    const char c = cursor_.peek();
    if (c == '?' || c == '$') return variable();
    if (c == '"' || c == '\'') {
      std::string lex = cursor_.read_string();
      if (cursor_.peek() == '@') {
        std::string tag = cursor_.read_langtag();
        return detail::make_literal_at(cursor_, at, [&] { return Literal::lang_string(lex, tag); });
      }
      if (cursor_.peek() == '^' && cursor_.peek(1) == '^') {
        cursor_.get();
        cursor_.get();
        auto dt = iri();
        if (!dt) cursor_.fail("datatype IRI");
        return detail::make_literal_at(cursor_, at, [&] { return Literal(lex, *dt); });
      }
      return Literal::plain(std::move(lex));
    }
    if (cursor_.consume_keyword("true")) return Literal("true", vocab::xsd_boolean());
    if (cursor_.consume_keyword("false")) return Literal("false", vocab::xsd_boolean());
    if (auto number = cursor_.read_number()) return *number;
    if (auto o = iri()) return *o;
    cursor_.fail("object (variable, IRI or literal)");
  }

  void modifiers() {
    cursor_.skip_space();
    if (cursor_.peek_keyword("GROUP")) cursor_.unsupported("GROUP BY");
    if (cursor_.peek_keyword("HAVING")) cursor_.unsupported("HAVING");
    if (cursor_.consume_keyword("ORDER")) {
      cursor_.skip_space();
      if (!cursor_.consume_keyword("BY")) cursor_.fail("BY");
      cursor_.skip_space();
      OrderBy order{Variable("_"), false};
      if (cursor_.peek_keyword("ASC") || cursor_.peek_keyword("DESC")) {
        order.descending = cursor_.peek_keyword("DESC");
        cursor_.consume_keyword(order.descending ? "DESC" : "ASC");
        cursor_.expect('(', "'('");
        cursor_.skip_space();
        if (cursor_.peek() != '?' && cursor_.peek() != '$') cursor_.unsupported("ORDER BY expression");
        order.variable = variable();
        cursor_.expect(')', "')'");
      } else if (cursor_.peek() == '?' || cursor_.peek() == '$') {
        order.variable = variable();
      } else if (cursor_.peek() == '(') {
        cursor_.unsupported("ORDER BY expression");
      } else {
        cursor_.fail("ORDER BY condition");
      }
      cursor_.skip_space();
      const char c = cursor_.peek();
      if (c == '?' || c == '$' || c == '(' || cursor_.peek_keyword("ASC") || cursor_.peek_keyword("DESC")) {
        cursor_.unsupported("multiple ORDER BY conditions");
      }
      query_.order_by = std::move(order);
    }
    for (int i = 0; i < 2; ++i) {
      cursor_.skip_space();
      if (cursor_.peek_keyword("OFFSET")) cursor_.unsupported("OFFSET");
      if (!query_.limit && cursor_.consume_keyword("LIMIT")) {
        cursor_.skip_space();
        const std::size_t at = cursor_.pos();
        std::size_t n = 0;
        while (std::isdigit(static_cast<unsigned char>(cursor_.peek(n)))) ++n;
        if (n == 0) cursor_.fail("non-negative integer after LIMIT");
        if (n > 12) cursor_.fail_at(at, "LIMIT below 10^12");
        query_.limit = static_cast<std::size_t>(std::stoull(std::string(cursor_.rest().substr(0, n))));
        cursor_.reset(at + n);
      }
    }
    cursor_.skip_space();
    if (cursor_.peek_keyword("VALUES")) cursor_.unsupported("VALUES");
  }

  void check_projection() {
    for (std::size_t i = 0; i < query_.projection.size(); ++i) {
      const auto& v = query_.projection[i];
      bool bound = std::any_of(query_.body.begin(), query_.body.end(), [&](const auto& p) { return mentions(p, v); });
      for (const auto& block : query_.optionals) {
        bound = bound || std::any_of(block.begin(), block.end(), [&](const auto& p) { return mentions(p, v); });
      }
      if (!bound) cursor_.fail_at(projection_at_[i], "projection variable bound in WHERE");
    }
  }

  Cursor cursor_;
  SparqlSelect query_;
  std::vector<std::size_t> projection_at_;
};

}  // namespace

SparqlSelect parse_sparql(std::string_view input) { return SparqlParser(input).parse(); }

}  // namespace semverb
