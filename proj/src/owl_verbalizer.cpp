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

#include "semverb/owl_verbalizer.hpp"

#include <algorithm>
#include <map>

#include "phrase.hpp"
#include "semverb/aggregator.hpp"
#include "semverb/error.hpp"
#include "semverb/triple_verbalizer.hpp"

namespace semverb {

namespace {

using detail::Clause;
using detail::Complement;
using detail::Group;
using detail::PhraseModel;

constexpr std::size_t kMaxDepth = 64;

LexicalEntry verb_entry(std::string singular, std::string plural) {
  LexicalEntry e;
  e.lemma = plural;
  e.pos = PartOfSpeech::VerbPhrase;
  e.singular = std::move(singular);
  e.plural = std::move(plural);
  return e;
}

LexicalEntry thing_entry() {
  LexicalEntry e;
  e.lemma = e.singular = "thing";
  e.plural = "things";
  return e;
}

class Modeler {
 public:
  Modeler(const Graph& graph, Lexicalizer& lexicalizer, const OwlOptions& options)
      : graph_(graph), lex_(lexicalizer), options_(options) {}

  /// `filler`: an atomic class becomes the head noun rather than a
  /// "that is a C" restriction.
  PhraseModel model(const ClassExpression& ce, bool filler) {
    using K = ClassExpression::Kind;
    switch (ce.kind()) {
      case K::Atomic: {
        PhraseModel m;
        if (filler) {
          m.head = lex_.class_noun(ce.iri(), graph_);
        } else {
          m.restrictions.items.push_back(detail::clause_item(be_class(ce)));
        }
        return m;
      }
      case K::And: return conjunction(ce);
      case K::Or: {
        PhraseModel m;
        m.restrictions.coordinator = "or";
        for (const auto& op : ce.operands()) detail::splice(m.restrictions, as_restrictions(model(op, false)));
        return m;
      }
      case K::Not: return negation(ce.operands().front());
      case K::Some:
      case K::Only: {
        const bool only = ce.kind() == K::Only;
        const LexicalEntry& p = lex_.property(ce.iri(), graph_);
        Complement c;
        c.kind = Complement::Kind::Class;
        c.phrase = std::make_shared<const PhraseModel>(model(ce.filler(), true));
        if (only) {
          c.advmod = "only";
          c.bare_plural = p.pos == PartOfSpeech::VerbPhrase;
        }
        Clause clause = property_clause(p, std::move(c));
        if (!only && p.pos == PartOfSpeech::NounPhrase && !options_.functional_noun_properties) {
          clause.possessed_number = Number::Plural;
          clause.verb = verb_entry("includes", "include");
        }
        return single(std::move(clause));
      }
      case K::Min:
      case K::Max:
      case K::Exactly: {
        const LexicalEntry& p = lex_.property(ce.iri(), graph_);
        Complement c;
        c.kind = Complement::Kind::Counted;
        c.quantifier = ce.kind() == K::Min ? "at least" : ce.kind() == K::Max ? "at most" : "exactly";
        c.count = ce.cardinality();
        Clause clause;
        if (p.pos == PartOfSpeech::NounPhrase) {
          clause.verb = verb_entry("has", "have");
          c.counted_noun = p;
        } else {
          clause.verb = p;
          c.counted_noun = thing_entry();
        }
        clause.complement = std::move(c);
        return single(std::move(clause));
      }
      case K::Value: {
        Complement c;
        c.kind = Complement::Kind::Text;
        c.text = lex_.object(ce.individual(), graph_);
        return single(property_clause(lex_.property(ce.iri(), graph_), std::move(c)));
      }
      case K::OneOf: {
        Complement c;
        c.kind = Complement::Kind::OneOf;
        for (const auto& i : ce.individuals()) c.items.push_back(lex_.resource(i, graph_).singular);
        Clause clause;
        clause.complement = std::move(c);
        return single(std::move(clause));
      }
    }
    throw Unsupported("class expression kind");
  }

  /// A headed phrase folded into a single "that is a C ..." clause.
  Group as_restrictions(const PhraseModel& m) {
    if (!m.head) return m.restrictions;
    Clause clause;
    clause.complement.kind = Complement::Kind::Class;
    clause.complement.phrase = std::make_shared<const PhraseModel>(m);
    Group g;
    g.items.push_back(detail::clause_item(std::move(clause)));
    return g;
  }

 private:
  static PhraseModel single(Clause clause) {
    PhraseModel m;
    m.restrictions.items.push_back(detail::clause_item(std::move(clause)));
    return m;
  }

  Clause be_class(const ClassExpression& atomic) {
    Clause clause;
    clause.complement.kind = Complement::Kind::Class;
    PhraseModel noun;
    noun.head = lex_.class_noun(atomic.iri(), graph_);
    clause.complement.phrase = std::make_shared<const PhraseModel>(std::move(noun));
    return clause;
  }

  static Clause property_clause(const LexicalEntry& p, Complement c) {
    Clause clause;
    if (p.pos == PartOfSpeech::NounPhrase) {
      clause.subject = Clause::Subject::Possessed;
      clause.possessed = p;
    } else {
      clause.verb = p;
    }
    clause.complement = std::move(c);
    return clause;
  }

  PhraseModel conjunction(const ClassExpression& ce) {
    const auto ops = ce.operands();
    std::optional<std::size_t> chosen;
    if (options_.specialize) {
      for (std::size_t i = 0; i < ops.size() && !chosen; ++i) {
        if (ops[i].kind() == ClassExpression::Kind::Atomic) chosen = i;
      }
    }
    PhraseModel m;
    if (chosen) m.head = lex_.class_noun(ops[*chosen].iri(), graph_);
    for (std::size_t i = 0; i < ops.size(); ++i) {
      if (chosen && i == *chosen) continue;
      detail::splice(m.restrictions, as_restrictions(model(ops[i], false)));
    }
    return m;
  }

  PhraseModel negation(const ClassExpression& inner) {
    PhraseModel m = model(inner, false);
    if (!m.head && m.restrictions.items.size() == 1 && m.restrictions.items.front().clause) {
      Clause clause = *m.restrictions.items.front().clause;
      if (clause.takes_be() && clause.verb_advmod.empty() && clause.subject != Clause::Subject::External) {
        clause.verb_advmod = "not";
        return single(std::move(clause));
      }
    }
    Clause clause;
    clause.verb_advmod = "not";
    clause.complement.kind = Complement::Kind::Class;
    clause.complement.phrase = std::make_shared<const PhraseModel>(model(inner, true));
    return single(std::move(clause));
  }

  const Graph& graph_;
  Lexicalizer& lex_;
  const OwlOptions& options_;
};

void check_depth(const ClassExpression& ce) {
  if (ce.depth() > kMaxDepth) throw Unsupported("class expression nested deeper than 64");
}

/// "X is a C ..." or, without a head noun, the restrictions as clauses of X.
DepTree predicate_sentence(const DepTree& subject, const PhraseModel& m) {
  if (m.head) {
    DepTree t(DepNode::be());
    t.graft(0, Relation::Subj, subject, subject.root());
    const DepTree object = detail::render_phrase(m, Number::Singular, detail::Det::Indefinite);
    t.graft(0, Relation::Dobj, object, object.root());
    return t;
  }
  return detail::render_main_clauses(m.restrictions, subject, Number::Singular);
}

std::vector<Term> objects(const Graph& graph, const Iri& s, const Iri& p) {
  std::vector<Term> out;
  for (const auto& t : graph.triples()) {
    if (t.subject() == s && t.predicate() == p && std::find(out.begin(), out.end(), t.object()) == out.end()) {
      out.push_back(t.object());
    }
  }
  return out;
}

}  // namespace

CEPhrase verbalize_ce(const ClassExpression& ce, const Graph& graph, Lexicalizer& lexicalizer,
                      const OwlOptions& options) {
  check_depth(ce);
  Modeler modeler(graph, lexicalizer, options);
  const PhraseModel m = modeler.model(ce, false);
  CEPhrase phrase;
  if (m.head) {
    phrase.placeholder = CEPhrase::Placeholder::SpecializedNoun;
    phrase.noun = m.head->plural;
    phrase.number = Number::Plural;
  }
  phrase.tree = detail::render_phrase(m, phrase.number, detail::Det::Bare);
  return phrase;
}

DepTree axiom_tree(const Axiom& axiom, const Graph& graph, Lexicalizer& lexicalizer, const OwlOptions& options) {
  Modeler modeler(graph, lexicalizer, options);
  if (const auto* sub = std::get_if<SubClassOf>(&axiom)) {
    check_depth(sub->sub);
    check_depth(sub->sup);
    const DepTree subject = detail::render_phrase(modeler.model(sub->sub, true), Number::Singular, detail::Det::Every);
    return predicate_sentence(subject, modeler.model(sub->sup, true));
  }
  if (const auto* ca = std::get_if<ClassAssertion>(&axiom)) {
    check_depth(ca->ce);
    const DepTree subject(DepNode::word(lexicalizer.resource(ca->individual, graph).singular));
    return predicate_sentence(subject, modeler.model(ca->ce, true));
  }
  const auto& pa = std::get<PropertyAssertion>(axiom);
  return realize_triple(Triple(pa.subject, pa.property, pa.object), graph, lexicalizer);
}

std::string verbalize_axiom(const Axiom& axiom, const Graph& graph, Lexicalizer& lexicalizer,
                            const OwlOptions& options) {
  return realize_tree(axiom_tree(axiom, graph, lexicalizer, options));
}

std::vector<DepTree> axiom_trees(const std::vector<Axiom>& axioms, const Graph& graph, Lexicalizer& lexicalizer,
                                 const OwlOptions& options, std::size_t fanout_limit) {
  struct Individual {
    std::vector<ClassExpression> types;
    std::vector<PropertyAssertion> facts;
  };
  std::vector<std::variant<const SubClassOf*, Iri>> order;
  std::map<Iri, Individual> individuals;
  for (const auto& ax : axioms) {
    if (const auto* sub = std::get_if<SubClassOf>(&ax)) {
      order.emplace_back(sub);
      continue;
    }
    const Iri& who = std::holds_alternative<ClassAssertion>(ax) ? std::get<ClassAssertion>(ax).individual
                                                                 : std::get<PropertyAssertion>(ax).subject;
    if (!individuals.count(who)) order.emplace_back(who);
    auto& entry = individuals[who];
    if (const auto* ca = std::get_if<ClassAssertion>(&ax)) {
      entry.types.push_back(ca->ce);
    } else {
      entry.facts.push_back(std::get<PropertyAssertion>(ax));
    }
  }

  std::vector<DepTree> sentences;
  for (const auto& item : order) {
    if (const auto* sub = std::get_if<const SubClassOf*>(&item)) {
      sentences.push_back(axiom_tree(**sub, graph, lexicalizer, options));
      continue;
    }
    const Iri& who = std::get<Iri>(item);
    const Individual& entry = individuals.at(who);
    if (!entry.types.empty()) {
      std::vector<ClassExpression> parts = entry.types;
      for (const auto& f : entry.facts) parts.push_back(ClassExpression::value(f.property, f.object));
      const ClassExpression ce = parts.size() == 1 ? parts.front() : ClassExpression::conjunction(parts);
      sentences.push_back(axiom_tree(ClassAssertion{who, ce}, graph, lexicalizer, options));
      continue;
    }
    std::vector<DepTree> trees;
    for (const auto& f : entry.facts) {
      trees.push_back(realize_triple(Triple(f.subject, f.property, f.object), graph, lexicalizer));
    }
    for (auto& t : aggregate(std::move(trees), fanout_limit).trees) sentences.push_back(std::move(t));
  }
  return sentences;
}

std::vector<std::string> verbalize_axioms(const std::vector<Axiom>& axioms, const Graph& graph,
                                          Lexicalizer& lexicalizer, const OwlOptions& options,
                                          std::size_t fanout_limit) {
  std::vector<std::string> sentences;
  for (const auto& t : axiom_trees(axioms, graph, lexicalizer, options, fanout_limit)) {
    sentences.push_back(realize_tree(t));
  }
  return sentences;
}

bool evaluate_ce(const ClassExpression& ce, const Graph& graph, const Iri& individual) {
  using K = ClassExpression::Kind;
  switch (ce.kind()) {
    case K::Atomic: {
      const Term cls(ce.iri());
      return std::any_of(graph.triples().begin(), graph.triples().end(), [&](const Triple& t) {
        return t.subject() == individual && t.predicate() == vocab::rdf_type() && t.object() == cls;
      });
    }
    case K::And:
      return std::all_of(ce.operands().begin(), ce.operands().end(),
                         [&](const ClassExpression& op) { return evaluate_ce(op, graph, individual); });
    case K::Or:
      return std::any_of(ce.operands().begin(), ce.operands().end(),
                         [&](const ClassExpression& op) { return evaluate_ce(op, graph, individual); });
    case K::Not: return !evaluate_ce(ce.operands().front(), graph, individual);
    case K::Some:
    case K::Only: {
      const auto objs = objects(graph, individual, ce.iri());
      auto fits = [&](const Term& o) {
        const auto* iri = std::get_if<Iri>(&o);
        return iri != nullptr && evaluate_ce(ce.filler(), graph, *iri);
      };
      if (ce.kind() == K::Some) return std::any_of(objs.begin(), objs.end(), fits);
      return std::all_of(objs.begin(), objs.end(), fits);
    }
    case K::Min: return objects(graph, individual, ce.iri()).size() >= ce.cardinality();
    case K::Max: return objects(graph, individual, ce.iri()).size() <= ce.cardinality();
    case K::Exactly: return objects(graph, individual, ce.iri()).size() == ce.cardinality();
    case K::Value: {
      const auto objs = objects(graph, individual, ce.iri());
      return std::find(objs.begin(), objs.end(), ce.individual()) != objs.end();
    }
    case K::OneOf:
      return std::find(ce.individuals().begin(), ce.individuals().end(), individual) != ce.individuals().end();
  }
  return false;
}

}  // namespace semverb
