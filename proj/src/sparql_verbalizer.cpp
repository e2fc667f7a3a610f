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

#include "semverb/sparql_verbalizer.hpp"

#include <set>

#include "phrase.hpp"
#include "semverb/dep_tree.hpp"

namespace semverb {

namespace {

using detail::Clause;
using detail::Complement;
using detail::PhraseModel;

const detail::Placeholders& placeholders() {
  static const detail::Placeholders words{"entity", "something", "entities"};
  return words;
}

LexicalEntry related_to() {
  LexicalEntry e;
  e.lemma = e.singular = e.plural = "related to";
  e.pos = PartOfSpeech::VerbPhrase;
  e.verb_form = VerbForm::Copular;
  return e;
}

bool is_var(const Term& t, const Variable& v) {
  const auto* var = std::get_if<Variable>(&t);
  return var != nullptr && *var == v;
}

std::string variable_words(const Variable& v) {
  std::vector<std::string> words = split_identifier(v.name());
  for (auto& w : words) {
    if (!is_acronym(w)) w = to_lower(w);
  }
  return join_words(words);
}

class Describer {
 public:
  Describer(const std::vector<TriplePattern>& body, const Graph& graph, Lexicalizer& lex)
      : body_(body), used_(body.size(), false), graph_(graph), lex_(lex) {}

  PhraseModel describe(const Variable& v) {
    if (!visited_.insert(v.name()).second) throw Unsupported("cyclic graph pattern");
    PhraseModel m;
    std::vector<Clause> clauses;
    for (std::size_t i = 0; i < body_.size(); ++i) {
      if (used_[i]) continue;
      const TriplePattern& p = body_[i];
      if (is_var(p.subject(), v) && p.predicate() == Term(vocab::rdf_type())) {
        used_[i] = true;
        const auto* cls = std::get_if<Iri>(&p.object());
        if (cls == nullptr) throw Unsupported("class variable or literal class in rdf:type pattern");
        if (!m.head) {
          m.head = lex_.class_noun(*cls, graph_);
        } else {
          Clause c;
          c.complement.kind = Complement::Kind::Class;
          PhraseModel noun;
          noun.head = lex_.class_noun(*cls, graph_);
          c.complement.phrase = std::make_shared<const PhraseModel>(std::move(noun));
          clauses.push_back(std::move(c));
        }
      } else if (is_var(p.subject(), v)) {
        used_[i] = true;
        clauses.push_back(forward(p));
      } else if (is_var(p.object(), v)) {
        used_[i] = true;
        clauses.push_back(inverse(p));
      }
    }
    for (auto& c : clauses) m.restrictions.items.push_back(detail::clause_item(std::move(c)));
    return m;
  }

  bool all_used() const {
    for (bool u : used_) {
      if (!u) return false;
    }
    return true;
  }

  LexicalEntry property(const Term& predicate) {
    if (const auto* iri = std::get_if<Iri>(&predicate)) return lex_.property(*iri, graph_);
    return related_to();
  }

 private:
  Clause forward(const TriplePattern& p) {
    const LexicalEntry entry = property(p.predicate());
    Complement c;
    if (const auto* w = std::get_if<Variable>(&p.object())) {
      c.kind = Complement::Kind::Class;
      c.phrase = std::make_shared<const PhraseModel>(describe(*w));
    } else {
      c.kind = Complement::Kind::Text;
      c.text = lex_.object(p.object(), graph_);
    }
    Clause clause;
    if (entry.pos == PartOfSpeech::NounPhrase) {
      clause.subject = Clause::Subject::Possessed;
      clause.possessed = entry;
    } else {
      clause.verb = entry;
    }
    clause.complement = std::move(c);
    return clause;
  }

  Clause inverse(const TriplePattern& p) {
    const LexicalEntry entry = property(p.predicate());
    std::string owner;
    if (const auto* w = std::get_if<Variable>(&p.subject())) {
      owner = realize_fragment(detail::render_phrase(describe(*w), Number::Singular, detail::Det::Indefinite,
                                                     placeholders()));
    } else {
      owner = lex_.object(p.subject(), graph_);
    }
    Clause clause;
    if (entry.pos == PartOfSpeech::NounPhrase) {
      clause.complement.kind = Complement::Kind::Text;
      clause.complement.text = "the " + entry.singular + " of " + owner;
    } else {
      clause.subject = Clause::Subject::External;
      clause.external = owner;
      clause.verb = entry;
    }
    return clause;
  }

  const std::vector<TriplePattern>& body_;
  std::vector<bool> used_;
  std::set<std::string> visited_;
  const Graph& graph_;
  Lexicalizer& lex_;
};

std::string optional_phrase(const std::vector<TriplePattern>& block, const QueryPlan& plan,
                            const std::set<std::string>& body_vars, Describer& describer) {
  std::vector<std::string> items;
  for (const auto& p : block) {
    const auto* w = std::get_if<Variable>(&p.object());
    if (!is_var(p.subject(), plan.subject_var) || !is_iri(p.predicate()) || w == nullptr ||
        *w == plan.subject_var || body_vars.count(w->name())) {
      throw Unsupported("OPTIONAL pattern other than (?x property ?new)");
    }
    const LexicalEntry entry = describer.property(p.predicate());
    if (entry.pos == PartOfSpeech::NounPhrase) {
      items.push_back("their " + entry.singular);
    } else if (entry.verb_form == VerbForm::Copular) {
      items.push_back("what they " + inflect_be(Number::Plural, entry.tense) + " " + entry.plural);
    } else {
      items.push_back("what they " + entry.plural);
    }
  }
  return "and, if available, " + join_coordination(items, "and");
}

std::string order_phrase(const OrderBy& order, const SparqlSelect& query, const QueryPlan& plan,
                         Describer& describer) {
  std::string key = variable_words(order.variable);
  auto consider = [&](const TriplePattern& p) {
    if (is_var(p.subject(), plan.subject_var) && is_var(p.object(), order.variable) && is_iri(p.predicate())) {
      const LexicalEntry entry = describer.property(p.predicate());
      if (entry.pos == PartOfSpeech::NounPhrase) key = entry.singular;
      return true;
    }
    return false;
  };
  bool found = false;
  for (const auto& p : query.body) found = found || consider(p);
  for (const auto& block : query.optionals) {
    for (const auto& p : block) found = found || consider(p);
  }
  return ", sorted by " + key + (order.descending ? " in descending order" : " in ascending order");
}

}  // namespace

QueryPlan plan_query(const SparqlSelect& query) {
  if (query.projection.size() > 1) throw MultiProjectionUnsupported();
  if (query.projection.empty()) throw Unsupported("SELECT without projection variables");
  QueryPlan plan;
  plan.subject_var = query.projection.front();
  for (const auto& p : query.body) {
    if (is_var(p.subject(), plan.subject_var) && p.predicate() == Term(vocab::rdf_type())) {
      plan.class_patterns.push_back(p);
    } else {
      plan.restriction_patterns.push_back(p);
    }
  }
  plan.optional_phrases = query.optionals;
  plan.limit = query.limit;
  plan.order_by = query.order_by;
  return plan;
}

DepTree query_tree(const SparqlSelect& query, const Graph& labels, Lexicalizer& lexicalizer) {
  const QueryPlan plan = plan_query(query);
  Describer describer(query.body, labels, lexicalizer);
  const PhraseModel model = describer.describe(plan.subject_var);
  if (!describer.all_used()) throw Unsupported("graph pattern not connected to the projection variable");

  const Number number = plan.limit && *plan.limit == 1 ? Number::Singular : Number::Plural;
  DepTree object = detail::render_phrase(model, number, detail::Det::Bare, placeholders());
  if (plan.limit) {
    object.add(0, Relation::Advmod, DepNode::word("at most"));
    object.add(0, Relation::Num, DepNode::word(std::to_string(*plan.limit)));
  }

  DepTree sentence(DepNode::word("retrieves"));
  sentence.add(0, Relation::Subj, DepNode::word("this query"));
  sentence.graft(0, Relation::Dobj, object, object.root());

  std::set<std::string> body_vars;
  for (const auto& p : query.body) {
    for (const Term* t : {&p.subject(), &p.predicate(), &p.object()}) {
      if (const auto* v = std::get_if<Variable>(t)) body_vars.insert(v->name());
    }
  }
  for (const auto& block : plan.optional_phrases) {
    DepNode tail = DepNode::word(optional_phrase(block, plan, body_vars, describer));
    tail.placement = Placement::Back;
    sentence.add(0, Relation::Advmod, std::move(tail));
  }
  if (plan.order_by) {
    DepNode tail = DepNode::word(order_phrase(*plan.order_by, query, plan, describer));
    tail.placement = Placement::Back;
    sentence.add(0, Relation::Advmod, std::move(tail));
  }
  return sentence;
}

std::string verbalize_query(const SparqlSelect& query, const Graph& labels, Lexicalizer& lexicalizer) {
  return realize_tree(query_tree(query, labels, lexicalizer));
}

}  // namespace semverb
