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

#include "semverb/aggregator.hpp"

#include <algorithm>
#include <map>

#include "semverb/error.hpp"

namespace semverb {

namespace {

bool has_fronted(const DepTree& tree) {
  for (auto d : tree.dependents(tree.root())) {
    if (tree.node(d).placement == Placement::Front) return true;
  }
  return false;
}

std::optional<NodeId> subject_of(const DepTree& tree) {
  const NodeId root = tree.root();
  if (!is_clause(tree, root) && !is_coordination(tree, root)) return std::nullopt;
  return tree.first_dependent(root, Relation::Subj);
}

Relation member_relation(std::string_view coordinator) {
  return coordinator == "or" ? Relation::Disj : Relation::Conj;
}

/// The tree as a coordination of predicates under its subject.
DepTree coordinated(const DepTree& tree, std::string_view coordinator) {
  const NodeId root = tree.root();
  if (is_coordination(tree, root) && tree.node(root).surface == coordinator) return tree;
  const NodeId subj = *subject_of(tree);
  DepTree out(DepNode::word(std::string(coordinator)));
  out.graft(0, Relation::Subj, tree, subj);
  const DepTree predicate = tree.without(subj);
  out.graft(0, member_relation(coordinator), predicate, predicate.root());
  out.subject_key = tree.subject_key;
  out.predicate_key = tree.predicate_key;
  return out;
}

void add_predicates(DepTree& target, const DepTree& tree, std::string_view coordinator) {
  const NodeId root = tree.root();
  const Relation rel = member_relation(coordinator);
  if (is_coordination(tree, root) && tree.node(root).surface == coordinator) {
    for (auto d : tree.dependents(root)) {
      const Relation r = tree.relation_of(d);
      if (r == Relation::Conj || r == Relation::Disj) target.graft(0, rel, tree, d);
    }
    return;
  }
  const DepTree predicate = tree.without(*subject_of(tree));
  target.graft(0, rel, predicate, predicate.root());
}

void make_plural(DepTree& tree, NodeId id) {
  DepNode& n = tree.node(id);
  n.number = Number::Plural;
  const bool copular = n.is_be || tree.first_dependent(id, Relation::Cop).has_value();
  if (copular) {
    for (auto d : tree.dependents(id, Relation::Dobj)) {
      if (!tree.node(d).plural_surface.empty()) tree.node(d).number = Number::Plural;
    }
  }
  for (auto d : tree.dependents(id)) {
    const Relation r = tree.relation_of(d);
    if (r == Relation::Conj || r == Relation::Disj) make_plural(tree, d);
  }
}

}  // namespace

bool is_copular_sentence(const DepTree& tree) {
  const NodeId root = tree.root();
  if (!tree.node(root).is_be) return false;
  auto subj = tree.first_dependent(root, Relation::Subj);
  return subj && !tree.first_dependent(*subj, Relation::Poss);
}

std::string subject_realization(const DepTree& tree) {
  auto subj = subject_of(tree);
  return subj ? realize_fragment(tree, *subj) : std::string();
}

std::string predicate_realization(const DepTree& tree) {
  const NodeId root = tree.root();
  if (is_coordination(tree, root) || !is_clause(tree, root) || has_fronted(tree)) return {};
  auto subj = tree.first_dependent(root, Relation::Subj);
  if (!subj || tree.first_dependent(*subj, Relation::Poss)) return {};
  const DepTree rest = tree.without(*subj);
  return realize_fragment(rest);
}

SentencePlan cluster_and_order(std::vector<DepTree> trees) {
  std::vector<std::string> order;
  std::map<std::string, std::vector<DepTree>> clusters;
  for (auto& t : trees) {
    if (!clusters.count(t.subject_key)) order.push_back(t.subject_key);
    clusters[t.subject_key].push_back(std::move(t));
  }
  std::stable_sort(order.begin(), order.end(), [&](const std::string& a, const std::string& b) {
    return clusters[a].size() > clusters[b].size();
  });
  SentencePlan plan;
  for (const auto& key : order) {
    auto& members = clusters[key];
    std::stable_partition(members.begin(), members.end(), is_copular_sentence);
    for (auto& m : members) plan.trees.push_back(std::move(m));
  }
  return plan;
}

SentencePlan group_subjects(SentencePlan plan, std::string_view coordinator) {
  SentencePlan out;
  std::map<std::string, std::size_t> position;
  for (auto& tree : plan.trees) {
    const std::string subject = subject_realization(tree);
    if (subject.empty() || has_fronted(tree)) {
      out.trees.push_back(std::move(tree));
      continue;
    }
    const std::string key = tree.subject_key + '\n' + subject;
    auto it = position.find(key);
    if (it == position.end()) {
      position.emplace(key, out.trees.size());
      out.trees.push_back(std::move(tree));
      continue;
    }
    DepTree& target = out.trees[it->second];
    target = coordinated(target, coordinator);
    add_predicates(target, tree, coordinator);
  }
  return out;
}

SentencePlan group_objects(SentencePlan plan) {
  std::map<std::string, std::vector<std::size_t>> groups;
  std::vector<std::string> keys(plan.trees.size());
  for (std::size_t i = 0; i < plan.trees.size(); ++i) {
    keys[i] = predicate_realization(plan.trees[i]);
    if (!keys[i].empty()) groups[keys[i]].push_back(i);
  }
  SentencePlan out;
  for (std::size_t i = 0; i < plan.trees.size(); ++i) {
    if (keys[i].empty()) {
      out.trees.push_back(std::move(plan.trees[i]));
      continue;
    }
    const auto& members = groups[keys[i]];
    if (members.size() == 1) {
      out.trees.push_back(std::move(plan.trees[i]));
      continue;
    }
    if (members.front() != i) continue;

    const DepTree& first = plan.trees[i];
    const NodeId root = first.root();
    DepTree merged(first.node(root));
    merged.subject_key = first.subject_key;
    merged.predicate_key = first.predicate_key;
    for (auto d : first.dependents(root)) {
      if (first.relation_of(d) != Relation::Subj) {
        merged.graft(0, first.relation_of(d), first, d);
        continue;
      }
      const NodeId coord = merged.add(0, Relation::Subj, DepNode::word("and"));
      merged.node(coord).number = Number::Plural;
      for (auto m : members) {
        const DepTree& member = plan.trees[m];
        const NodeId subj = *member.first_dependent(member.root(), Relation::Subj);
        if (is_coordination(member, subj) && member.node(subj).surface == "and") {
          for (auto c : member.dependents(subj, Relation::Conj)) merged.graft(coord, Relation::Conj, member, c);
        } else {
          merged.graft(coord, Relation::Conj, member, subj);
        }
      }
    }
    make_plural(merged, 0);
    out.trees.push_back(std::move(merged));
  }
  return out;
}

std::vector<DepTree> shorten_fanout(std::vector<DepTree> trees, std::size_t limit) {
  if (limit == 0) throw Error("fan-out limit must be at least 1");
  std::map<std::pair<std::string, std::string>, std::size_t> totals;
  for (const auto& t : trees) {
    if (!t.subject_key.empty() && !t.predicate_key.empty()) ++totals[{t.subject_key, t.predicate_key}];
  }
  std::map<std::pair<std::string, std::string>, std::size_t> seen;
  std::vector<DepTree> out;
  for (auto& t : trees) {
    const std::pair<std::string, std::string> key{t.subject_key, t.predicate_key};
    auto total = totals.find(key);
    if (total == totals.end() || total->second <= limit) {
      out.push_back(std::move(t));
      continue;
    }
    const std::size_t index = seen[key]++;
    if (index >= limit) continue;
    out.push_back(t);
    if (index + 1 == limit) {
      DepTree residual = t;
      if (auto dobj = t.first_dependent(t.root(), Relation::Dobj)) residual = t.without(*dobj);
      const std::size_t rest = total->second - limit;
      DepNode others = DepNode::word(std::to_string(rest) + (rest == 1 ? " other" : " others"));
      others.number = rest == 1 ? Number::Singular : Number::Plural;
      residual.add(residual.root(), Relation::Dobj, std::move(others));
      out.push_back(std::move(residual));
    }
  }
  return out;
}

SentencePlan aggregate(std::vector<DepTree> trees, std::size_t fanout_limit) {
  SentencePlan plan = cluster_and_order(shorten_fanout(std::move(trees), fanout_limit));
  return group_objects(group_subjects(std::move(plan)));
}

}  // namespace semverb
