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

// Intermediate noun-phrase model shared by the OWL and SPARQL verbalizers:
// an optional head noun plus coordinated restriction clauses, rendered to
// dependency trees with relative clauses.

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "semverb/dep_tree.hpp"
#include "semverb/lexicalizer.hpp"

namespace semverb::detail {

struct PhraseModel;

struct Complement {
  enum class Kind { None, Text, Class, Counted, OneOf };
  Kind kind = Kind::None;
  std::string text;
  std::shared_ptr<const PhraseModel> phrase;
  /// Class complements read as a bare plural ("only universities").
  bool bare_plural = false;
  std::string quantifier;
  unsigned long long count = 0;
  LexicalEntry counted_noun;
  std::vector<std::string> items;
  std::string advmod;
};

struct Clause {
  enum class Subject { Self, Possessed, External };
  Subject subject = Subject::Self;
  /// Possessed: the owned noun ("whose birth place").
  LexicalEntry possessed;
  Number possessed_number = Number::Singular;
  /// External: the clause subject; the relative pronoun becomes a fronted
  /// object ("that Albert Einstein influenced").
  std::string external;
  /// Absent: a plain BE clause.
  std::optional<LexicalEntry> verb;
  std::string verb_advmod;
  Complement complement;

  bool takes_be() const { return !verb || verb->verb_form == VerbForm::Copular; }
};

struct Group;

struct Item {
  std::optional<Clause> clause;
  std::shared_ptr<const Group> group;
};

struct Group {
  std::string coordinator = "and";
  std::vector<Item> items;
};

struct PhraseModel {
  /// Absent: a placeholder ("everything", "something", "things").
  std::optional<LexicalEntry> head;
  Group restrictions;
};

enum class Det { Bare, Indefinite, Every };

struct Placeholders {
  std::string every = "everything";
  std::string some = "something";
  std::string plural = "things";
};

/// Noun phrase with its restrictions attached as relative clauses.
DepTree render_phrase(const PhraseModel& model, Number number, Det det, const Placeholders& words = {});

/// Restrictions as clauses of `subject` (a rendered noun phrase) instead of
/// relative clauses; one tree, coordinated when needed.
DepTree render_main_clauses(const Group& group, const DepTree& subject, Number number,
                            const Placeholders& words = {});

Item clause_item(Clause c);
/// Appends `group` to `into`: spliced when the coordinators match or it has
/// a single item, nested otherwise.
void splice(Group& into, const Group& group);

}  // namespace semverb::detail
