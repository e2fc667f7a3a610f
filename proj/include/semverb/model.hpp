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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace semverb {

// ---------------------------------------------------------------------------
// Terms

/// An absolute IRI. Construction rejects empty text, whitespace and text
/// without a scheme.
class Iri {
 public:
  explicit Iri(std::string value);

  const std::string& str() const noexcept { return value_; }

  friend bool operator==(const Iri&, const Iri&) = default;
  friend auto operator<=>(const Iri&, const Iri&) = default;

 private:
  std::string value_;
};

namespace vocab {

inline constexpr std::string_view kRdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kRdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view kOwl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view kXsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view kDbo = "http://dbpedia.org/ontology/";
inline constexpr std::string_view kDbr = "http://dbpedia.org/resource/";
inline constexpr std::string_view kDefaultBase = "http://example.org/";

const Iri& rdf_type();
const Iri& rdf_lang_string();
const Iri& rdfs_label();
const Iri& xsd_string();
const Iri& xsd_integer();
const Iri& xsd_decimal();
const Iri& xsd_double();
const Iri& xsd_boolean();
const Iri& xsd_date();

/// True for XML Schema datatypes and the rdf: literal datatypes.
bool is_builtin_datatype(const Iri& datatype);
bool is_numeric_datatype(const Iri& datatype);

}  // namespace vocab

/// An RDF literal: lexical form, datatype and, for rdf:langString only, a
/// lowercase language tag.
class Literal {
 public:
  Literal(std::string lexical_form, Iri datatype);

  static Literal plain(std::string lexical_form);
  static Literal lang_string(std::string lexical_form, std::string language_tag);
  static Literal integer(long long value);

  const std::string& lexical_form() const noexcept { return lexical_form_; }
  const Iri& datatype() const noexcept { return datatype_; }
  const std::optional<std::string>& language_tag() const noexcept { return language_tag_; }

  friend bool operator==(const Literal&, const Literal&) = default;

 private:
  Literal(std::string lexical_form, Iri datatype, std::optional<std::string> tag);

  std::string lexical_form_;
  Iri datatype_;
  std::optional<std::string> language_tag_;
};

/// A SPARQL variable; the name is stored without its leading '?' or '$'.
class Variable {
 public:
  explicit Variable(std::string name);

  const std::string& name() const noexcept { return name_; }

  friend bool operator==(const Variable&, const Variable&) = default;
  friend auto operator<=>(const Variable&, const Variable&) = default;

 private:
  std::string name_;
};

using Term = std::variant<Iri, Literal, Variable>;

inline bool is_iri(const Term& t) { return std::holds_alternative<Iri>(t); }
inline bool is_literal(const Term& t) { return std::holds_alternative<Literal>(t); }
inline bool is_variable(const Term& t) { return std::holds_alternative<Variable>(t); }

/// N-Triples style rendering, used in diagnostics and as a stable key.
std::string to_string(const Term& term);

// ---------------------------------------------------------------------------
// Prefixes

using PrefixMap = std::map<std::string, std::string, std::less<>>;

/// rdf, rdfs, owl, xsd, dbo, dbr and the empty prefix.
const PrefixMap& default_prefixes();

/// `prefix:local` -> namespace + local. Throws UnknownPrefix.
Iri expand_prefixed_name(std::string_view prefixed, const PrefixMap& prefixes);

/// Longest matching namespace wins; nullopt when no prefix applies or the
/// local part would not be a safe prefixed-name local part.
std::optional<std::string> compact_iri(const Iri& iri, const PrefixMap& prefixes);

// ---------------------------------------------------------------------------
// RDF graphs

/// A ground triple; the object is never a variable.
class Triple {
 public:
  Triple(Iri subject, Iri predicate, Term object);

  const Iri& subject() const noexcept { return subject_; }
  const Iri& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  friend bool operator==(const Triple&, const Triple&) = default;

 private:
  Iri subject_;
  Iri predicate_;
  Term object_;
};

/// Ordered multiset of triples plus the prefixes declared by the source.
class Graph {
 public:
  Graph();

  void add(Triple triple) { triples_.push_back(std::move(triple)); }
  void set_prefix(std::string prefix, std::string ns) { prefixes_[std::move(prefix)] = std::move(ns); }

  const std::vector<Triple>& triples() const noexcept { return triples_; }
  const PrefixMap& prefixes() const noexcept { return prefixes_; }
  std::size_t size() const noexcept { return triples_.size(); }
  bool empty() const noexcept { return triples_.empty(); }

  /// First literal object of (iri, label_property, "..."@lang). A tag matches
  /// when it equals `language` or starts with `language` followed by '-'.
  std::optional<std::string> label(const Iri& iri, const Iri& label_property,
                                   std::string_view language) const;

 private:
  std::vector<Triple> triples_;
  PrefixMap prefixes_;
};

// ---------------------------------------------------------------------------
// OWL class expressions and axioms

/// Immutable class-expression tree. And/Or are n-ary and kept flat.
class ClassExpression {
 public:
  enum class Kind { Atomic, And, Or, Not, Some, Only, Min, Max, Exactly, Value, OneOf };

  static ClassExpression atomic(Iri cls);
  static ClassExpression conjunction(std::vector<ClassExpression> operands);
  static ClassExpression disjunction(std::vector<ClassExpression> operands);
  static ClassExpression negation(ClassExpression inner);
  static ClassExpression some(Iri property, ClassExpression filler);
  static ClassExpression only(Iri property, ClassExpression filler);
  static ClassExpression min(Iri property, unsigned n);
  static ClassExpression max(Iri property, unsigned n);
  static ClassExpression exactly(Iri property, unsigned n);
  static ClassExpression value(Iri property, Term individual);
  static ClassExpression one_of(std::vector<Iri> individuals);

  Kind kind() const noexcept;

  /// The class of an Atomic expression, or the property of a restriction.
  const Iri& iri() const;
  /// Operands of And/Or; the single operand of Not.
  std::span<const ClassExpression> operands() const;
  /// Filler of Some/Only.
  const ClassExpression& filler() const;
  unsigned cardinality() const;
  const Term& individual() const;
  std::span<const Iri> individuals() const;

  bool is_restriction() const noexcept;
  std::size_t depth() const;

  friend bool operator==(const ClassExpression& a, const ClassExpression& b);

 private:
  struct Node;
  explicit ClassExpression(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static ClassExpression nary(Kind kind, std::vector<ClassExpression> operands);

  std::shared_ptr<const Node> node_;
};

/// Manchester-style rendering with full IRIs compacted through `prefixes`.
std::string to_manchester(const ClassExpression& ce, const PrefixMap& prefixes = default_prefixes());

struct SubClassOf {
  ClassExpression sub;
  ClassExpression sup;
};

struct ClassAssertion {
  Iri individual;
  ClassExpression ce;
};

struct PropertyAssertion {
  Iri subject;
  Iri property;
  Term object;
};

using Axiom = std::variant<SubClassOf, ClassAssertion, PropertyAssertion>;

/// The rdf:type triple equivalent of an atomic class assertion.
std::optional<Triple> as_triple(const Axiom& axiom);

// ---------------------------------------------------------------------------
// SPARQL

/// (Var ∪ IRI) × (Var ∪ IRI) × (Var ∪ IRI ∪ Literal)
class TriplePattern {
 public:
  TriplePattern(Term subject, Term predicate, Term object);

  const Term& subject() const noexcept { return subject_; }
  const Term& predicate() const noexcept { return predicate_; }
  const Term& object() const noexcept { return object_; }

  friend bool operator==(const TriplePattern&, const TriplePattern&) = default;

 private:
  Term subject_;
  Term predicate_;
  Term object_;
};

struct OrderBy {
  Variable variable;
  bool descending = false;

  friend bool operator==(const OrderBy&, const OrderBy&) = default;
};

struct SparqlSelect {
  std::vector<Variable> projection;
  bool distinct = false;
  std::vector<TriplePattern> body;
  std::vector<std::vector<TriplePattern>> optionals;
  std::optional<std::size_t> limit;
  std::optional<OrderBy> order_by;
  PrefixMap prefixes;

  friend bool operator==(const SparqlSelect&, const SparqlSelect&) = default;
};

}  // namespace semverb
