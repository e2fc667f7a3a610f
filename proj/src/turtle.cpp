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

#include <set>

#include "cursor.hpp"
#include "semverb/parsers.hpp"

namespace semverb {

namespace {

using detail::Cursor;

class TurtleParser {
 public:
  explicit TurtleParser(std::string_view input) : cursor_(input) {}

  Graph parse() {
    for (;;) {
      cursor_.skip_space();
      if (cursor_.at_end()) break;
      if (cursor_.peek() == '@') {
        if (cursor_.consume_keyword("@prefix")) {
          prefix_directive(true);
        } else if (cursor_.peek_keyword("@base")) {
          cursor_.unsupported("@base directive");
        } else {
          cursor_.fail("@prefix directive");
        }
      } else if (cursor_.consume_keyword("PREFIX")) {
        prefix_directive(false);
      } else if (cursor_.peek_keyword("BASE")) {
        cursor_.unsupported("BASE directive");
      } else {
        triples();
        cursor_.expect('.', "'.' ending the statement");
      }
    }
    return std::move(graph_);
  }

 private:
  void prefix_directive(bool turtle_style) {
    cursor_.skip_space();
    const std::size_t at = cursor_.pos();
    auto name = cursor_.read_prefixed_name();
    if (!name || name->back() != ':') cursor_.fail_at(at, "prefix name ending in ':'");
    cursor_.skip_space();
    if (cursor_.peek() != '<') cursor_.fail("namespace IRI in angle brackets");
    Iri ns = cursor_.read_iriref();
    name->pop_back();
    graph_.set_prefix(*name, ns.str());
    if (turtle_style) cursor_.expect('.', "'.' after @prefix");
  }

  void reject_blank(const char* position) {
    const char c = cursor_.peek();
    if (c == '_' && cursor_.peek(1) == ':') cursor_.unsupported(std::string("blank node in ") + position);
    if (c == '[') cursor_.unsupported(std::string("blank node in ") + position);
    if (c == '(') cursor_.unsupported(std::string("collection in ") + position);
  }

  std::optional<Iri> iri() {
    if (cursor_.peek() == '<') return cursor_.read_iriref();
    const std::size_t at = cursor_.pos();
    if (auto name = cursor_.read_prefixed_name()) return cursor_.expand(*name, at, graph_.prefixes());
    return std::nullopt;
  }

  void triples() {
    cursor_.skip_space();
    reject_blank("subject position");
    auto subject = iri();
    if (!subject) cursor_.fail("subject IRI");
    for (;;) {
      cursor_.skip_space();
      Iri predicate = verb();
      for (;;) {
        cursor_.skip_space();
        graph_.add(Triple(*subject, predicate, object()));
        cursor_.skip_space();
        if (!cursor_.consume(',')) break;
      }
      cursor_.skip_space();
      if (!cursor_.consume(';')) return;
      // Repeated or trailing ';' is allowed.
      for (;;) {
        cursor_.skip_space();
        if (!cursor_.consume(';')) break;
      }
      if (cursor_.peek() == '.' || cursor_.at_end()) return;
    }
  }

  Iri verb() {
    if (cursor_.peek() == 'a' && !detail::is_local_char(cursor_.peek(1))) {
      cursor_.get();
      return vocab::rdf_type();
    }
    auto p = iri();
    if (!p) cursor_.fail("predicate");
    return *p;
  }

  Term object() {
    reject_blank("object position");
    const char c = cursor_.peek();
    const std::size_t at = cursor_.pos();
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
    cursor_.fail("object");
  }

  Cursor cursor_;
  Graph graph_;
};

std::string escape_string(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out;
}

class TurtleWriter {
 public:
  explicit TurtleWriter(const PrefixMap& prefixes) : prefixes_(prefixes) {}

  std::string iri(const Iri& value) {
    if (auto compact = compact_iri(value, prefixes_)) {
      used_.insert(compact->substr(0, compact->find(':')));
      return *compact;
    }
    return "<" + value.str() + ">";
  }

  std::string term(const Term& t) {
    if (const auto* i = std::get_if<Iri>(&t)) return iri(*i);
    const auto& lit = std::get<Literal>(t);
    std::string out = "\"" + escape_string(lit.lexical_form()) + "\"";
    if (lit.language_tag()) return out + "@" + *lit.language_tag();
    if (lit.datatype() == vocab::xsd_string()) return out;
    return out + "^^" + iri(lit.datatype());
  }

  const std::set<std::string>& used() const { return used_; }

 private:
  const PrefixMap& prefixes_;
  std::set<std::string> used_;
};

}  // namespace

Graph parse_turtle(std::string_view input) { return TurtleParser(input).parse(); }

std::string serialize_turtle(const Graph& graph) {
  TurtleWriter writer(graph.prefixes());
  std::string body;
  for (const auto& t : graph.triples()) {
    body += writer.iri(t.subject()) + " " + writer.iri(t.predicate()) + " " + writer.term(t.object()) + " .\n";
  }
  std::string header;
  for (const auto& prefix : writer.used()) {
    header += "@prefix " + prefix + ": <" + graph.prefixes().find(prefix)->second + "> .\n";
  }
  return header + body;
}

}  // namespace semverb
