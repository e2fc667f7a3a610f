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

#include <string>
#include <vector>

#include "semverb/dep_tree.hpp"
#include "semverb/lexicalizer.hpp"
#include "semverb/model.hpp"

namespace semverb {

struct OwlOptions {
  /// Some over a noun property reads "whose p is a C"; off: "whose ps
  /// include a C".
  bool functional_noun_properties = true;
  /// Replace "everything" by the plural of the leftmost atomic conjunct.
  bool specialize = true;
};

struct CEPhrase {
  enum class Placeholder { Everything, SpecializedNoun };

  DepTree tree;
  Placeholder placeholder = Placeholder::Everything;
  /// Plural head noun when specialized.
  std::string noun;
  Number number = Number::Singular;

  std::string text() const { return realize_fragment(tree); }
};

/// Post-order verbalization of a class expression. Throws Unsupported for
/// expressions nested deeper than 64.
CEPhrase verbalize_ce(const ClassExpression& ce, const Graph& graph, Lexicalizer& lexicalizer,
                      const OwlOptions& options = OwlOptions{});

/// Sentence tree for a single axiom.
DepTree axiom_tree(const Axiom& axiom, const Graph& graph, Lexicalizer& lexicalizer,
                   const OwlOptions& options = OwlOptions{});

/// One sentence for a single axiom.
std::string verbalize_axiom(const Axiom& axiom, const Graph& graph, Lexicalizer& lexicalizer,
                            const OwlOptions& options = OwlOptions{});

/// Sentences for a document. Assertions are gathered per individual: with a
/// type they become one "X is a C whose ..." sentence, without one they go
/// through the triple pipeline.
std::vector<std::string> verbalize_axioms(const std::vector<Axiom>& axioms, const Graph& graph,
                                          Lexicalizer& lexicalizer, const OwlOptions& options = OwlOptions{},
                                          std::size_t fanout_limit = 5);

/// The sentence trees behind verbalize_axioms.
std::vector<DepTree> axiom_trees(const std::vector<Axiom>& axioms, const Graph& graph, Lexicalizer& lexicalizer,
                                 const OwlOptions& options = OwlOptions{}, std::size_t fanout_limit = 5);

/// Closed-world membership of `individual` in `ce` over the triples of
/// `graph`.
bool evaluate_ce(const ClassExpression& ce, const Graph& graph, const Iri& individual);

}  // namespace semverb
