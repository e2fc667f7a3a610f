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

#include "semverb/model.hpp"

#include <algorithm>
#include <cctype>
#include <regex>

#include "semverb/error.hpp"

namespace semverb {

namespace {

bool has_scheme(std::string_view s) {
  if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front()))) return false;
  for (std::size_t i = 1; i < s.size(); ++i) {
    const auto c = static_cast<unsigned char>(s[i]);
    if (c == ':') return true;
    if (!std::isalnum(c) && c != '+' && c != '.' && c != '-') return false;
  }
  return false;
}

Iri make_vocab(std::string_view ns, std::string_view local) {
  return Iri(std::string(ns) + std::string(local));
}

std::string lowercase(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

bool starts_with(std::string_view s, std::string_view prefix) {
  return s.substr(0, prefix.size()) == prefix;
}

}  // namespace

Iri::Iri(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw InvalidTerm("empty IRI");
  for (unsigned char c : value_) {
    if (std::isspace(c) || c == '<' || c == '>' || c == '"') {
      throw InvalidTerm("IRI contains an illegal character: " + value_);
    }
  }
  if (!has_scheme(value_)) throw InvalidTerm("IRI has no scheme: " + value_);
}

namespace vocab {

const Iri& rdf_type() {
  static const Iri iri = make_vocab(kRdf, "type");
  return iri;
}
const Iri& rdf_lang_string() {
  static const Iri iri = make_vocab(kRdf, "langString");
  return iri;
}
const Iri& rdfs_label() {
  static const Iri iri = make_vocab(kRdfs, "label");
  return iri;
}
const Iri& xsd_string() {
  static const Iri iri = make_vocab(kXsd, "string");
  return iri;
}
const Iri& xsd_integer() {
  static const Iri iri = make_vocab(kXsd, "integer");
  return iri;
}
const Iri& xsd_decimal() {
  static const Iri iri = make_vocab(kXsd, "decimal");
  return iri;
}
const Iri& xsd_double() {
  static const Iri iri = make_vocab(kXsd, "double");
  return iri;
}
const Iri& xsd_boolean() {
  static const Iri iri = make_vocab(kXsd, "boolean");
  return iri;
}
const Iri& xsd_date() {
  static const Iri iri = make_vocab(kXsd, "date");
  return iri;
}

bool is_builtin_datatype(const Iri& datatype) {
  const auto& s = datatype.str();
  return starts_with(s, kXsd) || starts_with(s, kRdf);
}

bool is_numeric_datatype(const Iri& datatype) {
  static const std::vector<std::string_view> numeric = {
      "integer", "int", "long", "short", "byte", "decimal", "double", "float",
      "nonNegativeInteger", "nonPositiveInteger", "positiveInteger", "negativeInteger",
      "unsignedLong", "unsignedInt", "unsignedShort", "unsignedByte"};
  const auto& s = datatype.str();
  if (!starts_with(s, kXsd)) return false;
  const std::string_view local = std::string_view(s).substr(kXsd.size());
  return std::find(numeric.begin(), numeric.end(), local) != numeric.end();
}

}  // namespace vocab

namespace {

bool valid_numeric_lexical(const Iri& datatype, const std::string& lex) {
  static const std::regex integer(R"([+-]?[0-9]+)");
  static const std::regex decimal(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+))");
  static const std::regex floating(R"([+-]?([0-9]+(\.[0-9]*)?|\.[0-9]+)([eE][+-]?[0-9]+)?|[+-]?INF|NaN)");
  const std::string local = datatype.str().substr(vocab::kXsd.size());
  if (local == "decimal") return std::regex_match(lex, decimal);
  if (local == "double" || local == "float") return std::regex_match(lex, floating);
  return std::regex_match(lex, integer);
}

}  // namespace

Literal::Literal(std::string lexical_form, Iri datatype)
    : Literal(std::move(lexical_form), std::move(datatype), std::nullopt) {}

Literal::Literal(std::string lexical_form, Iri datatype, std::optional<std::string> tag)
    : lexical_form_(std::move(lexical_form)), datatype_(std::move(datatype)), language_tag_(std::move(tag)) {
  const bool lang_typed = datatype_ == vocab::rdf_lang_string();
  if (lang_typed != language_tag_.has_value()) {
    throw InvalidTerm("language tag present iff datatype is rdf:langString");
  }
  if (language_tag_) {
    static const std::regex bcp47(R"([a-zA-Z]{1,8}(-[a-zA-Z0-9]{1,8})*)");
    if (!std::regex_match(*language_tag_, bcp47)) throw InvalidTerm("bad language tag: " + *language_tag_);
    language_tag_ = lowercase(*language_tag_);
  }
  if (vocab::is_numeric_datatype(datatype_) && !valid_numeric_lexical(datatype_, lexical_form_)) {
    throw InvalidTerm("'" + lexical_form_ + "' is not a valid " + datatype_.str());
  }
}

Literal Literal::plain(std::string lexical_form) {
  return Literal(std::move(lexical_form), vocab::xsd_string());
}

Literal Literal::lang_string(std::string lexical_form, std::string language_tag) {
  return Literal(std::move(lexical_form), vocab::rdf_lang_string(), std::move(language_tag));
}

Literal Literal::integer(long long value) { return Literal(std::to_string(value), vocab::xsd_integer()); }

Variable::Variable(std::string name) : name_(std::move(name)) {
  if (!name_.empty() && (name_.front() == '?' || name_.front() == '$')) name_.erase(0, 1);
  if (name_.empty()) throw InvalidTerm("empty variable name");
  for (unsigned char c : name_) {
    if (!std::isalnum(c) && c != '_') throw InvalidTerm("bad variable name: " + name_);
  }
}

std::string to_string(const Term& term) {
  struct Visitor {
    std::string operator()(const Iri& iri) const { return "<" + iri.str() + ">"; }
    std::string operator()(const Variable& v) const { return "?" + v.name(); }
    std::string operator()(const Literal& lit) const {
      std::string out = "\"";
      for (char c : lit.lexical_form()) {
        switch (c) {
          case '"': out += "\\\""; break;
          case '\\': out += "\\\\"; break;
          case '\n': out += "\\n"; break;
          case '\r': out += "\\r"; break;
          case '\t': out += "\\t"; break;
          default: out += c;
        }
      }
      out += '"';
      if (lit.language_tag()) return out + "@" + *lit.language_tag();
      if (lit.datatype() == vocab::xsd_string()) return out;
      return out + "^^<" + lit.datatype().str() + ">";
    }
  };
  return std::visit(Visitor{}, term);
}

// ---------------------------------------------------------------------------

const PrefixMap& default_prefixes() {
  static const PrefixMap prefixes = {
      {"", std::string(vocab::kDefaultBase)}, {"rdf", std::string(vocab::kRdf)},
      {"rdfs", std::string(vocab::kRdfs)},    {"owl", std::string(vocab::kOwl)},
      {"xsd", std::string(vocab::kXsd)},      {"dbo", std::string(vocab::kDbo)},
      {"dbr", std::string(vocab::kDbr)},
  };
  return prefixes;
}

Iri expand_prefixed_name(std::string_view prefixed, const PrefixMap& prefixes) {
  const auto colon = prefixed.find(':');
  if (colon == std::string_view::npos) throw InvalidTerm("not a prefixed name: " + std::string(prefixed));
  const auto prefix = prefixed.substr(0, colon);
  const auto it = prefixes.find(prefix);
  if (it == prefixes.end()) throw UnknownPrefix(std::string(prefix));
  return Iri(it->second + std::string(prefixed.substr(colon + 1)));
}

std::optional<std::string> compact_iri(const Iri& iri, const PrefixMap& prefixes) {
  static const std::regex safe_local(R"([A-Za-z0-9_]([A-Za-z0-9_.-]*[A-Za-z0-9_-])?)");
  const std::string& s = iri.str();
  const PrefixMap::value_type* best = nullptr;
  for (const auto& entry : prefixes) {
    if (starts_with(s, entry.second) && (best == nullptr || entry.second.size() > best->second.size())) {
      const std::string local = s.substr(entry.second.size());
      if (std::regex_match(local, safe_local)) best = &entry;
    }
  }
  if (best == nullptr) return std::nullopt;
  return best->first + ":" + s.substr(best->second.size());
}

// ---------------------------------------------------------------------------

Triple::Triple(Iri subject, Iri predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (is_variable(object_)) throw InvalidTerm("triple object must be ground: " + to_string(object_));
}

Graph::Graph() : prefixes_(default_prefixes()) {}

std::optional<std::string> Graph::label(const Iri& iri, const Iri& label_property,
                                        std::string_view language) const {
  for (const auto& t : triples_) {
    if (t.subject() != iri || t.predicate() != label_property) continue;
    const auto* lit = std::get_if<Literal>(&t.object());
    if (lit == nullptr || !lit->language_tag()) continue;
    const std::string& tag = *lit->language_tag();
    if (tag == language || (tag.size() > language.size() && starts_with(tag, language) &&
                            tag[language.size()] == '-')) {
      return lit->lexical_form();
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------

struct ClassExpression::Node {
  Kind kind;
  std::optional<Iri> iri;
  std::vector<ClassExpression> operands;
  unsigned n = 0;
  std::optional<Term> individual;
  std::vector<Iri> individuals;
};

ClassExpression ClassExpression::atomic(Iri cls) {
  return ClassExpression(std::make_shared<const Node>(Node{Kind::Atomic, std::move(cls), {}, 0, {}, {}}));
}

ClassExpression ClassExpression::nary(Kind kind, std::vector<ClassExpression> operands) {
  std::vector<ClassExpression> flat;
  for (auto& op : operands) {
    if (op.kind() == kind) {
      const auto inner = op.operands();
      flat.insert(flat.end(), inner.begin(), inner.end());
    } else {
      flat.push_back(std::move(op));
    }
  }
  if (flat.size() < 2) throw Error("AND/OR needs at least two operands");
  return ClassExpression(std::make_shared<const Node>(Node{kind, std::nullopt, std::move(flat), 0, {}, {}}));
}

ClassExpression ClassExpression::conjunction(std::vector<ClassExpression> operands) {
  return nary(Kind::And, std::move(operands));
}

ClassExpression ClassExpression::disjunction(std::vector<ClassExpression> operands) {
  return nary(Kind::Or, std::move(operands));
}

ClassExpression ClassExpression::negation(ClassExpression inner) {
  return ClassExpression(
      std::make_shared<const Node>(Node{Kind::Not, std::nullopt, {std::move(inner)}, 0, {}, {}}));
}

ClassExpression ClassExpression::some(Iri property, ClassExpression filler) {
  return ClassExpression(
      std::make_shared<const Node>(Node{Kind::Some, std::move(property), {std::move(filler)}, 0, {}, {}}));
}

ClassExpression ClassExpression::only(Iri property, ClassExpression filler) {
  return ClassExpression(
      std::make_shared<const Node>(Node{Kind::Only, std::move(property), {std::move(filler)}, 0, {}, {}}));
}

ClassExpression ClassExpression::min(Iri property, unsigned n) {
  return ClassExpression(std::make_shared<const Node>(Node{Kind::Min, std::move(property), {}, n, {}, {}}));
}

ClassExpression ClassExpression::max(Iri property, unsigned n) {
  return ClassExpression(std::make_shared<const Node>(Node{Kind::Max, std::move(property), {}, n, {}, {}}));
}

ClassExpression ClassExpression::exactly(Iri property, unsigned n) {
  return ClassExpression(std::make_shared<const Node>(Node{Kind::Exactly, std::move(property), {}, n, {}, {}}));
}

ClassExpression ClassExpression::value(Iri property, Term individual) {
  if (is_variable(individual)) throw InvalidTerm("VALUE needs an individual or literal");
  return ClassExpression(
      std::make_shared<const Node>(Node{Kind::Value, std::move(property), {}, 0, std::move(individual), {}}));
}

ClassExpression ClassExpression::one_of(std::vector<Iri> individuals) {
  if (individuals.empty()) throw Error("one-of needs at least one individual");
  return ClassExpression(
      std::make_shared<const Node>(Node{Kind::OneOf, std::nullopt, {}, 0, {}, std::move(individuals)}));
}

ClassExpression::Kind ClassExpression::kind() const noexcept { return node_->kind; }

const Iri& ClassExpression::iri() const {
  if (!node_->iri) throw Error("class expression has no IRI");
  return *node_->iri;
}

std::span<const ClassExpression> ClassExpression::operands() const { return node_->operands; }

const ClassExpression& ClassExpression::filler() const {
  if (node_->kind != Kind::Some && node_->kind != Kind::Only) throw Error("class expression has no filler");
  return node_->operands.front();
}

unsigned ClassExpression::cardinality() const { return node_->n; }

const Term& ClassExpression::individual() const {
  if (!node_->individual) throw Error("class expression has no individual");
  return *node_->individual;
}

std::span<const Iri> ClassExpression::individuals() const { return node_->individuals; }

bool ClassExpression::is_restriction() const noexcept {
  switch (node_->kind) {
    case Kind::Some:
    case Kind::Only:
    case Kind::Min:
    case Kind::Max:
    case Kind::Exactly:
    case Kind::Value: return true;
    default: return false;
  }
}

std::size_t ClassExpression::depth() const {
  std::size_t deepest = 0;
  for (const auto& op : node_->operands) deepest = std::max(deepest, op.depth());
  return deepest + 1;
}

bool operator==(const ClassExpression& a, const ClassExpression& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.iri == y.iri && x.n == y.n && x.individual == y.individual &&
         x.individuals == y.individuals && x.operands == y.operands;
}

namespace {

std::string manchester_name(const Iri& iri, const PrefixMap& prefixes) {
  if (auto compact = compact_iri(iri, prefixes)) {
    if (compact->front() == ':') return compact->substr(1);
    return *compact;
  }
  return "<" + iri.str() + ">";
}

std::string manchester_term(const Term& t, const PrefixMap& prefixes) {
  if (const auto* iri = std::get_if<Iri>(&t)) return manchester_name(*iri, prefixes);
  if (const auto* lit = std::get_if<Literal>(&t)) {
    if (lit->datatype() == vocab::xsd_integer()) return lit->lexical_form();
    std::string quoted = to_string(Literal::plain(lit->lexical_form()));
    if (lit->language_tag()) return quoted + "@" + *lit->language_tag();
    if (lit->datatype() == vocab::xsd_string()) return quoted;
    return quoted + "^^" + manchester_name(lit->datatype(), prefixes);
  }
  return to_string(t);
}

std::string manchester(const ClassExpression& ce, const PrefixMap& prefixes, bool nested) {
  using Kind = ClassExpression::Kind;
  auto wrap = [&](std::string s) { return nested ? "(" + s + ")" : s; };
  switch (ce.kind()) {
    case Kind::Atomic: return manchester_name(ce.iri(), prefixes);
    case Kind::And:
    case Kind::Or: {
      std::string out;
      const char* sep = ce.kind() == Kind::And ? " AND " : " OR ";
      for (const auto& op : ce.operands()) {
        if (!out.empty()) out += sep;
        out += manchester(op, prefixes, true);
      }
      return wrap(out);
    }
    case Kind::Not: return "NOT " + manchester(ce.operands().front(), prefixes, true);
    case Kind::Some:
      return wrap(manchester_name(ce.iri(), prefixes) + " SOME " + manchester(ce.filler(), prefixes, true));
    case Kind::Only:
      return wrap(manchester_name(ce.iri(), prefixes) + " ONLY " + manchester(ce.filler(), prefixes, true));
    case Kind::Min: return wrap(manchester_name(ce.iri(), prefixes) + " MIN " + std::to_string(ce.cardinality()));
    case Kind::Max: return wrap(manchester_name(ce.iri(), prefixes) + " MAX " + std::to_string(ce.cardinality()));
    case Kind::Exactly:
      return wrap(manchester_name(ce.iri(), prefixes) + " EXACTLY " + std::to_string(ce.cardinality()));
    case Kind::Value:
      return wrap(manchester_name(ce.iri(), prefixes) + " VALUE " + manchester_term(ce.individual(), prefixes));
    case Kind::OneOf: {
      std::string out = "{";
      for (const auto& ind : ce.individuals()) {
        if (out.size() > 1) out += ", ";
        out += manchester_name(ind, prefixes);
      }
      return out + "}";
    }
  }
  return {};
}

}  // namespace

std::string to_manchester(const ClassExpression& ce, const PrefixMap& prefixes) {
  return manchester(ce, prefixes, false);
}

std::optional<Triple> as_triple(const Axiom& axiom) {
  if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) {
    if (ca->ce.kind() != ClassExpression::Kind::Atomic) return std::nullopt;
    return Triple(ca->individual, vocab::rdf_type(), ca->ce.iri());
  }
  if (const auto* pa = std::get_if<PropertyAssertion>(&axiom)) {
    return Triple(pa->subject, pa->property, pa->object);
  }
  return std::nullopt;
}

TriplePattern::TriplePattern(Term subject, Term predicate, Term object)
    : subject_(std::move(subject)), predicate_(std::move(predicate)), object_(std::move(object)) {
  if (is_literal(subject_)) throw InvalidTerm("literal in subject position");
  if (is_literal(predicate_)) throw InvalidTerm("literal in predicate position");
}

}  // namespace semverb
