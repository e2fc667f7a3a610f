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

#include "semverb/triple_verbalizer.hpp"

namespace semverb {

DepTree realize_triple(const Triple& triple, const Graph& graph, Lexicalizer& lexicalizer) {
  const std::string subject = lexicalizer.resource(triple.subject(), graph).singular;
  DepTree tree;

  if (triple.predicate() == vocab::rdf_type() && is_iri(triple.object())) {
    const LexicalEntry cls = lexicalizer.class_noun(std::get<Iri>(triple.object()), graph);
    tree = DepTree(DepNode::be());
    tree.add(0, Relation::Subj, DepNode::word(subject));
    tree.add(0, Relation::Dobj, DepNode::word(with_indefinite_article(cls.singular), cls.plural));
  } else {
    const LexicalEntry& p = lexicalizer.property(triple.predicate(), graph);
    const std::string object = lexicalizer.object(triple.object(), graph);
    if (p.pos == PartOfSpeech::NounPhrase) {
      tree = DepTree(DepNode::be());
      const NodeId head = tree.add(0, Relation::Subj, DepNode::word(p.singular, p.plural));
      tree.add(head, Relation::Poss, DepNode::word(subject));
    } else {
      DepNode verb = DepNode::word(p.singular, p.plural);
      verb.tense = p.tense;
      tree = DepTree(std::move(verb));
      if (p.verb_form == VerbForm::Copular) tree.add(0, Relation::Cop, DepNode::be());
      tree.add(0, Relation::Subj, DepNode::word(subject));
    }
    tree.add(0, Relation::Dobj, DepNode::word(object));
  }
  tree.subject_key = to_string(Term(triple.subject()));
  tree.predicate_key = to_string(Term(triple.predicate()));
  return tree;
}

}  // namespace semverb
