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

#include <optional>
#include <string>
#include <vector>

#include "semverb/dep_tree.hpp"
#include "semverb/error.hpp"
#include "semverb/lexicalizer.hpp"
#include "semverb/model.hpp"

namespace semverb {

/// SELECT with more than one projection variable.
class MultiProjectionUnsupported : public Unsupported {
 public:
  MultiProjectionUnsupported() : Unsupported("SELECT with more than one projection variable") {}
};

struct QueryPlan {
  Variable subject_var{"x"};
  /// (subject_var, rdf:type, C) patterns.
  std::vector<TriplePattern> class_patterns;
  /// Every other body pattern, in query order.
  std::vector<TriplePattern> restriction_patterns;
  std::vector<std::vector<TriplePattern>> optional_phrases;
  std::optional<std::size_t> limit;
  std::optional<OrderBy> order_by;
};

/// Buckets the query. Throws MultiProjectionUnsupported.
QueryPlan plan_query(const SparqlSelect& query);

/// "This query retrieves <description>." Restrictions on the projection
/// variable become relative clauses, restrictions on other variables nest
/// inside them. Throws Unsupported for disconnected or cyclic patterns,
/// class variables and OPTIONAL blocks other than (?x p ?new).
std::string verbalize_query(const SparqlSelect& query, const Graph& labels, Lexicalizer& lexicalizer);

/// The sentence tree behind verbalize_query.
DepTree query_tree(const SparqlSelect& query, const Graph& labels, Lexicalizer& lexicalizer);

}  // namespace semverb
