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
#include <string_view>
#include <vector>

#include "semverb/model.hpp"

namespace semverb {

/// Turtle subset: @prefix/PREFIX, prefixed names, <IRI>s, `a`, `;` and `,`
/// abbreviations, plain/typed/language-tagged literals, numbers, booleans.
/// Blank nodes, collections and @base raise Unsupported.
Graph parse_turtle(std::string_view input);

/// One triple per line, prefixed names where possible, trailing " .".
/// Prefix declarations for the prefixes actually used come first.
std::string serialize_turtle(const Graph& graph);

/// Manchester-syntax frames: Prefix:, Class: (SubClassOf:), Individual:
/// (Types:, Facts:). Keywords are case-insensitive.
std::vector<Axiom> parse_manchester(std::string_view input);

/// A single class expression in Manchester syntax. Bare names resolve
/// against the empty prefix.
ClassExpression parse_class_expression(std::string_view input,
                                       const PrefixMap& prefixes = default_prefixes());

/// SELECT queries over a basic graph pattern with OPTIONAL blocks, ORDER BY
/// and LIMIT.
SparqlSelect parse_sparql(std::string_view input);

}  // namespace semverb
