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

#include "semverb/dep_tree.hpp"
#include "semverb/lexicalizer.hpp"
#include "semverb/model.hpp"

namespace semverb {

/// One clause per triple. NounPhrase predicates give the possessive copular
/// clause ("s's p is o"), VerbPhrase predicates the transitive one ("s p o",
/// with a BE for copular verbs), rdf:type "s is a C". The tree's
/// subject_key/predicate_key hold the N-Triples text of s and p.
DepTree realize_triple(const Triple& triple, const Graph& graph, Lexicalizer& lexicalizer);

}  // namespace semverb
