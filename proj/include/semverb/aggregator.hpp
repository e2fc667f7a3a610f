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
#include <string>
#include <string_view>
#include <vector>

#include "semverb/dep_tree.hpp"

namespace semverb {

struct SentencePlan {
  std::vector<DepTree> trees;
};

/// "X is a C": BE root whose subject has no possessor.
bool is_copular_sentence(const DepTree& tree);

/// Realized subject of a clause or subject-grouped tree; empty if none.
std::string subject_realization(const DepTree& tree);

/// Realized clause without its subject ("was born in Boston"); empty for
/// trees object grouping does not apply to.
std::string predicate_realization(const DepTree& tree);

/// Clusters by subject_key, largest cluster first (ties keep first
/// appearance), copular sentences first inside a cluster.
SentencePlan cluster_and_order(std::vector<DepTree> trees);

/// Merges trees of one cluster that share their subject realization into a
/// single coordination (`coordinator` is "and" or "or") at the position of
/// the first. Trees with fronted dependents are left alone.
SentencePlan group_subjects(SentencePlan plan, std::string_view coordinator = "and");

/// Merges trees with identical predicate realization anywhere in the plan:
/// subjects are conjoined and the verb pluralized.
SentencePlan group_objects(SentencePlan plan);

/// Keeps the first `limit` trees of every (subject, predicate) group and
/// adds one tree whose object is "N others". Throws Error if limit is 0.
std::vector<DepTree> shorten_fanout(std::vector<DepTree> trees, std::size_t limit);

/// shorten_fanout, cluster_and_order, group_subjects, group_objects.
SentencePlan aggregate(std::vector<DepTree> trees, std::size_t fanout_limit);

}  // namespace semverb
