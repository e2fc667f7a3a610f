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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "semverb/morphology.hpp"

namespace semverb {

enum class Relation { Root, Subj, Dobj, Poss, Cop, Cc, Conj, Disj, Advmod, Num, Relcl };

std::string_view relation_name(Relation r);
std::optional<Relation> relation_from_name(std::string_view name);

/// Where a dependent is linearized relative to its clause. Natural follows
/// the relation's default slot.
enum class Placement { Natural, Front, Back };

struct DepNode {
  std::string surface;
  /// Surface used when `number` is Plural; empty means same as `surface`.
  std::string plural_surface;
  Number number = Number::Singular;
  Tense tense = Tense::Present;
  bool is_be = false;
  Placement placement = Placement::Natural;

  static DepNode word(std::string surface, std::string plural = {});
  static DepNode be(Number n = Number::Singular, Tense t = Tense::Present);

  friend bool operator==(const DepNode&, const DepNode&) = default;
};

using NodeId = std::size_t;

struct DepEdge {
  NodeId head;
  Relation relation;
  NodeId dependent;

  friend bool operator==(const DepEdge&, const DepEdge&) = default;
};

/// A rooted dependency tree. Nodes are owned by the tree and addressed by id;
/// edges keep insertion order, which is also the linearization order among
/// dependents of the same relation.
class DepTree {
 public:
  DepTree() = default;
  explicit DepTree(DepNode root);

  NodeId root() const;
  bool empty() const noexcept { return nodes_.empty(); }
  std::size_t size() const noexcept { return nodes_.size(); }

  DepNode& node(NodeId id);
  const DepNode& node(NodeId id) const;

  NodeId add(NodeId head, Relation relation, DepNode dependent);
  /// Copies the subtree of `other` rooted at `from` under `head`.
  NodeId graft(NodeId head, Relation relation, const DepTree& other, NodeId from);

  std::vector<NodeId> dependents(NodeId head) const;
  std::vector<NodeId> dependents(NodeId head, Relation relation) const;
  std::optional<NodeId> first_dependent(NodeId head, Relation relation) const;
  std::optional<NodeId> head_of(NodeId id) const;
  Relation relation_of(NodeId id) const;
  const std::vector<DepEdge>& edges() const noexcept { return edges_; }

  /// Copy of the subtree rooted at `id` as a tree of its own.
  DepTree subtree(NodeId id) const;
  /// Copy of this tree without the subtree rooted at `id` (not the root).
  DepTree without(NodeId id) const;

  /// Throws MalformedTree unless the tree satisfies its invariants.
  void validate() const;

  /// Source atoms the tree was built from; used by the aggregator.
  std::string subject_key;
  std::string predicate_key;

 private:
  std::vector<DepNode> nodes_;
  std::vector<DepEdge> edges_;
  std::vector<std::optional<std::size_t>> parent_edge_;
};

/// "is", "are", "was", "were".
std::string inflect_be(Number number, Tense tense);

/// Joins conjuncts with `coordinator`: "a and b and c" up to three, "a, b,
/// c and d" above.
std::string join_coordination(const std::vector<std::string>& items, std::string_view coordinator);

/// Linearizes the subtree at `id` without capitalization or final period.
std::string realize_fragment(const DepTree& tree, NodeId id);
std::string realize_fragment(const DepTree& tree);

/// Full sentence: validated, capitalized, exactly one final period.
std::string realize_tree(const DepTree& tree);

/// Verb-chain words of a clause head, already inflected ("is", "is known
/// for", "works at"); empty for non-clauses.
std::vector<std::string> verb_chain(const DepTree& tree, NodeId id);

/// True when the node heads a clause: it has a subject, is BE or takes a
/// copula.
bool is_clause(const DepTree& tree, NodeId id);
/// True for "and"/"or" nodes with conj/disj dependents.
bool is_coordination(const DepTree& tree, NodeId id);

/// Indented `rel(HEAD, #id "surface" attrs)` lines, one per node.
std::string serialize_tree(const DepTree& tree);
/// Reads the serialize_tree format back; '#' comment lines and blank lines
/// are ignored. Throws ParseError.
DepTree parse_tree(std::string_view text);

}  // namespace semverb
