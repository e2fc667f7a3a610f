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

#include "phrase.hpp"

#include "semverb/aggregator.hpp"

namespace semverb::detail {

namespace {

DepTree render_group(const Group& group, Number number, const DepTree* subject, const Placeholders& words);

DepTree complement_tree(const Complement& c, Number clause_number, bool plain_be, const Placeholders& words) {
  DepTree t;
  switch (c.kind) {
    case Complement::Kind::None:
      return t;
    case Complement::Kind::Text:
      t = DepTree(DepNode::word(c.text));
      break;
    case Complement::Kind::Class: {
      if (c.bare_plural || (plain_be && clause_number == Number::Plural)) {
        t = render_phrase(*c.phrase, Number::Plural, Det::Bare, words);
      } else {
        t = render_phrase(*c.phrase, Number::Singular, Det::Indefinite, words);
      }
      break;
    }
    case Complement::Kind::Counted: {
      DepNode noun = DepNode::word(c.counted_noun.singular, c.counted_noun.plural);
      noun.number = c.count == 1 ? Number::Singular : Number::Plural;
      t = DepTree(std::move(noun));
      t.add(0, Relation::Advmod, DepNode::word(c.quantifier));
      t.add(0, Relation::Num, DepNode::word(number_word(c.count)));
      break;
    }
    case Complement::Kind::OneOf:
      t = DepTree(DepNode::word(c.items.size() == 1 ? c.items.front()
                                                    : "one of " + join_coordination(c.items, "and")));
      break;
  }
  if (!c.advmod.empty()) t.add(0, Relation::Advmod, DepNode::word(c.advmod));
  return t;
}

DepTree render_clause(const Clause& c, Number head_number, const DepTree* subject, const Placeholders& words) {
  Number number = head_number;
  if (c.subject == Clause::Subject::Possessed) number = c.possessed_number;
  if (c.subject == Clause::Subject::External) number = Number::Singular;

  DepNode head;
  if (c.verb) {
    head = DepNode::word(c.verb->singular, c.verb->plural);
    head.tense = c.verb->tense;
  } else {
    head = DepNode::be();
  }
  head.number = number;
  DepTree t(std::move(head));
  if (c.verb && c.verb->verb_form == VerbForm::Copular) t.add(0, Relation::Cop, DepNode::be());

  switch (c.subject) {
    case Clause::Subject::Self:
      if (subject) {
        t.graft(0, Relation::Subj, *subject, subject->root());
      } else {
        t.add(0, Relation::Subj, DepNode::word("that"));
      }
      break;
    case Clause::Subject::Possessed: {
      const NodeId owned = t.add(0, Relation::Subj, DepNode::word(c.possessed.form(c.possessed_number)));
      if (subject) {
        t.graft(owned, Relation::Poss, *subject, subject->root());
      } else {
        t.add(owned, Relation::Poss, DepNode::word("whose"));
      }
      break;
    }
    case Clause::Subject::External: {
      t.add(0, Relation::Subj, DepNode::word(c.external));
      DepNode pronoun = DepNode::word("that");
      pronoun.placement = Placement::Front;
      t.add(0, Relation::Dobj, std::move(pronoun));
      break;
    }
  }
  if (!c.verb_advmod.empty()) t.add(0, Relation::Advmod, DepNode::word(c.verb_advmod));
  const DepTree object = complement_tree(c.complement, number, !c.verb, words);
  if (!object.empty()) t.graft(0, Relation::Dobj, object, object.root());
  return t;
}

DepTree render_group(const Group& group, Number number, const DepTree* subject, const Placeholders& words) {
  SentencePlan plan;
  for (const auto& item : group.items) {
    if (item.clause) {
      plan.trees.push_back(render_clause(*item.clause, number, subject, words));
    } else {
      plan.trees.push_back(render_group(*item.group, number, subject, words));
    }
  }
  plan = group_subjects(std::move(plan), group.coordinator);
  if (plan.trees.size() == 1) return std::move(plan.trees.front());
  DepTree coord(DepNode::word(group.coordinator));
  const Relation rel = group.coordinator == "or" ? Relation::Disj : Relation::Conj;
  for (const auto& t : plan.trees) coord.graft(0, rel, t, t.root());
  return coord;
}

}  // namespace

DepTree render_phrase(const PhraseModel& model, Number number, Det det, const Placeholders& words) {
  DepNode head;
  if (model.head) {
    head = DepNode::word(model.head->singular, model.head->plural);
    if (number == Number::Singular && det == Det::Indefinite) head.surface = with_indefinite_article(head.surface);
    if (number == Number::Singular && det == Det::Every) head.surface = "every " + head.surface;
  } else if (number == Number::Plural) {
    head = DepNode::word(words.plural);
  } else {
    head = DepNode::word(det == Det::Indefinite ? words.some : words.every);
  }
  head.number = number;
  DepTree t(std::move(head));
  if (!model.restrictions.items.empty()) {
    const DepTree rel = render_group(model.restrictions, number, nullptr, words);
    t.graft(0, Relation::Relcl, rel, rel.root());
  }
  return t;
}

DepTree render_main_clauses(const Group& group, const DepTree& subject, Number number, const Placeholders& words) {
  return render_group(group, number, &subject, words);
}

Item clause_item(Clause c) { return Item{std::move(c), nullptr}; }

void splice(Group& into, const Group& group) {
  if (group.items.empty()) return;
  if (group.coordinator == into.coordinator || group.items.size() == 1) {
    into.items.insert(into.items.end(), group.items.begin(), group.items.end());
  } else {
    into.items.push_back(Item{std::nullopt, std::make_shared<const Group>(group)});
  }
}

}  // namespace semverb::detail
