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

#include "semverb/dep_tree.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <regex>

#include "semverb/error.hpp"

namespace semverb {

namespace {

constexpr std::array<std::pair<Relation, std::string_view>, 11> kRelationNames = {{
    {Relation::Root, "root"},
    {Relation::Subj, "subj"},
    {Relation::Dobj, "dobj"},
    {Relation::Poss, "poss"},
    {Relation::Cop, "cop"},
    {Relation::Cc, "cc"},
    {Relation::Conj, "conj"},
    {Relation::Disj, "disj"},
    {Relation::Advmod, "advmod"},
    {Relation::Num, "num"},
    {Relation::Relcl, "relcl"},
}};

const std::string& form(const DepNode& n) {
  return n.number == Number::Plural && !n.plural_surface.empty() ? n.plural_surface : n.surface;
}

void append(std::string& out, const std::string& piece) {
  if (piece.empty()) return;
  if (!out.empty() && piece.front() != ',') out += ' ';
  out += piece;
}

std::string join_pieces(const std::vector<std::string>& pieces) {
  std::string out;
  for (const auto& p : pieces) append(out, p);
  return out;
}

class Realizer {
 public:
  explicit Realizer(const DepTree& tree) : t_(tree) {}

  std::string node(NodeId id) const {
    if (is_coordination(t_, id)) return coordination(id);
    if (is_clause(t_, id)) return clause(id);
    return noun_phrase(id);
  }

  std::string clause(NodeId id) const {
    std::vector<std::string> pieces = placed(id, Placement::Front);
    for (auto s : natural(id, Relation::Subj)) pieces.push_back(node(s));
    auto chain = verb_chain(t_, id);
    pieces.insert(pieces.end(), chain.begin(), chain.end());
    pieces.push_back(complements(id));
    return join_pieces(pieces);
  }

  /// Everything after the verb chain: objects, relative clauses, trailing
  /// dependents.
  std::string complements(NodeId id) const {
    std::vector<std::string> pieces;
    for (auto d : natural(id, Relation::Dobj)) pieces.push_back(node(d));
    for (auto r : natural(id, Relation::Relcl)) pieces.push_back(node(r));
    for (auto b : placed(id, Placement::Back)) pieces.push_back(b);
    return join_pieces(pieces);
  }

  std::string noun_phrase(NodeId id) const {
    std::vector<std::string> pieces = placed(id, Placement::Front);
    for (auto a : natural(id, Relation::Advmod)) pieces.push_back(node(a));
    for (auto n : natural(id, Relation::Num)) pieces.push_back(node(n));
    for (auto p : natural(id, Relation::Poss)) {
      const auto& owner = t_.node(p);
      if (owner.surface == "whose" && t_.dependents(p).empty()) {
        pieces.push_back("whose");
      } else {
        pieces.push_back(node(p) + "'s");
      }
    }
    pieces.push_back(form(t_.node(id)));
    for (auto r : natural(id, Relation::Relcl)) pieces.push_back(node(r));
    for (auto b : placed(id, Placement::Back)) pieces.push_back(b);
    return join_pieces(pieces);
  }

  std::string coordination(NodeId id) const {
    const std::string& word = t_.node(id).surface;
    auto members = conjuncts(id);
    auto subjects = natural(id, Relation::Subj);
    std::vector<std::string> pieces = placed(id, Placement::Front);
    if (subjects.empty()) {
      std::vector<std::string> items;
      for (auto m : members) items.push_back(node(m));
      pieces.push_back(join_coordination(items, word));
    } else {
      for (auto s : subjects) pieces.push_back(node(s));
      pieces.push_back(predicates(members, word));
    }
    for (auto b : placed(id, Placement::Back)) pieces.push_back(b);
    return join_pieces(pieces);
  }

 private:
  struct Run {
    std::vector<std::string> chain;
    std::vector<std::string> rests;
  };

  /// Conjoined predicates sharing one subject. Consecutive conjuncts with
  /// the same verb chain share it; a chain prefix common to all runs is
  /// said once ("is a scientist and known for ...").
  std::string predicates(const std::vector<NodeId>& members, const std::string& word) const {
    std::vector<Run> runs;
    for (auto m : members) {
      std::vector<std::string> chain;
      std::string rest;
      if (is_clause(t_, m) && !is_coordination(t_, m)) {
        chain = verb_chain(t_, m);
        rest = join_pieces({join_pieces(placed(m, Placement::Front)), complements(m)});
      } else {
        rest = node(m);
      }
      if (!runs.empty() && !chain.empty() && runs.back().chain == chain) {
        runs.back().rests.push_back(rest);
      } else {
        runs.push_back({std::move(chain), {std::move(rest)}});
      }
    }
    std::size_t common = runs.front().chain.size();
    for (const auto& r : runs) {
      std::size_t k = 0;
      while (k < common && k < r.chain.size() && r.chain[k] == runs.front().chain[k]) ++k;
      common = k;
    }
    std::vector<std::string> pieces(runs.front().chain.begin(), runs.front().chain.begin() + common);
    std::vector<std::string> items;
    for (const auto& r : runs) {
      std::vector<std::string> item(r.chain.begin() + common, r.chain.end());
      item.push_back(join_coordination(r.rests, word));
      items.push_back(join_pieces(item));
    }
    pieces.push_back(join_coordination(items, word));
    return join_pieces(pieces);
  }

  std::vector<NodeId> conjuncts(NodeId id) const {
    std::vector<NodeId> out;
    for (auto d : t_.dependents(id)) {
      const Relation r = t_.relation_of(d);
      if (r == Relation::Conj || r == Relation::Disj) out.push_back(d);
    }
    return out;
  }

  std::vector<NodeId> natural(NodeId id, Relation r) const {
    std::vector<NodeId> out;
    for (auto d : t_.dependents(id, r)) {
      if (t_.node(d).placement == Placement::Natural) out.push_back(d);
    }
    return out;
  }

  std::vector<std::string> placed(NodeId id, Placement p) const {
    std::vector<std::string> out;
    for (auto d : t_.dependents(id)) {
      if (t_.node(d).placement == p) out.push_back(node(d));
    }
    return out;
  }

  const DepTree& t_;
};

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') {
      out += '\\';
      out += c;
    } else if (c == '\n') {
      out += "\\n";
    } else {
      out += c;
    }
  }
  return out + "\"";
}

std::string unquote(std::string_view s) {
  std::string out;
  for (std::size_t i = 1; i + 1 < s.size(); ++i) {
    if (s[i] == '\\' && i + 2 < s.size()) {
      ++i;
      out += s[i] == 'n' ? '\n' : s[i];
    } else {
      out += s[i];
    }
  }
  return out;
}

}  // namespace

std::string_view relation_name(Relation r) {
  for (auto [rel, name] : kRelationNames) {
    if (rel == r) return name;
  }
  return "?";
}

std::optional<Relation> relation_from_name(std::string_view name) {
  for (auto [rel, n] : kRelationNames) {
    if (n == name) return rel;
  }
  return std::nullopt;
}

DepNode DepNode::word(std::string surface, std::string plural) {
  DepNode n;
  n.surface = std::move(surface);
  n.plural_surface = std::move(plural);
  return n;
}

DepNode DepNode::be(Number n, Tense t) {
  DepNode node;
  node.is_be = true;
  node.number = n;
  node.tense = t;
  return node;
}

DepTree::DepTree(DepNode root) {
  nodes_.push_back(std::move(root));
  parent_edge_.emplace_back();
}

NodeId DepTree::root() const {
  if (nodes_.empty()) throw MalformedTree("empty tree has no root");
  return 0;
}

DepNode& DepTree::node(NodeId id) {
  if (id >= nodes_.size()) throw MalformedTree("node id out of range");
  return nodes_[id];
}

const DepNode& DepTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw MalformedTree("node id out of range");
  return nodes_[id];
}

NodeId DepTree::add(NodeId head, Relation relation, DepNode dependent) {
  if (head >= nodes_.size()) throw MalformedTree("head id out of range");
  if (relation == Relation::Root) throw MalformedTree("root is not a dependency relation");
  nodes_.push_back(std::move(dependent));
  parent_edge_.push_back(edges_.size());
  edges_.push_back({head, relation, nodes_.size() - 1});
  return nodes_.size() - 1;
}

NodeId DepTree::graft(NodeId head, Relation relation, const DepTree& other, NodeId from) {
  const NodeId copy = add(head, relation, other.node(from));
  for (auto d : other.dependents(from)) graft(copy, other.relation_of(d), other, d);
  return copy;
}

std::vector<NodeId> DepTree::dependents(NodeId head) const {
  std::vector<NodeId> out;
  for (const auto& e : edges_) {
    if (e.head == head) out.push_back(e.dependent);
  }
  return out;
}

std::vector<NodeId> DepTree::dependents(NodeId head, Relation relation) const {
  std::vector<NodeId> out;
  for (const auto& e : edges_) {
    if (e.head == head && e.relation == relation) out.push_back(e.dependent);
  }
  return out;
}

std::optional<NodeId> DepTree::first_dependent(NodeId head, Relation relation) const {
  for (const auto& e : edges_) {
    if (e.head == head && e.relation == relation) return e.dependent;
  }
  return std::nullopt;
}

std::optional<NodeId> DepTree::head_of(NodeId id) const {
  if (id >= parent_edge_.size() || !parent_edge_[id]) return std::nullopt;
  return edges_[*parent_edge_[id]].head;
}

Relation DepTree::relation_of(NodeId id) const {
  if (id >= parent_edge_.size()) throw MalformedTree("node id out of range");
  if (!parent_edge_[id]) return Relation::Root;
  return edges_[*parent_edge_[id]].relation;
}

DepTree DepTree::subtree(NodeId id) const {
  DepTree out(node(id));
  for (auto d : dependents(id)) out.graft(0, relation_of(d), *this, d);
  out.subject_key = subject_key;
  out.predicate_key = predicate_key;
  return out;
}

DepTree DepTree::without(NodeId id) const {
  if (id == root()) throw MalformedTree("cannot remove the root");
  DepTree out(node(root()));
  auto copy = [&](auto& self, NodeId from, NodeId to) -> void {
    for (auto d : dependents(from)) {
      if (d == id) continue;
      self(self, d, out.add(to, relation_of(d), node(d)));
    }
  };
  copy(copy, root(), 0);
  out.subject_key = subject_key;
  out.predicate_key = predicate_key;
  return out;
}

void DepTree::validate() const {
  if (nodes_.empty()) throw MalformedTree("tree has no root");
  if (parent_edge_[0]) throw MalformedTree("root has a head");
  for (NodeId id = 1; id < nodes_.size(); ++id) {
    if (!parent_edge_[id]) throw MalformedTree("node #" + std::to_string(id) + " is detached");
  }
  for (const auto& e : edges_) {
    if (e.head >= nodes_.size() || e.dependent >= nodes_.size()) throw MalformedTree("edge out of range");
    if (e.relation == Relation::Root) throw MalformedTree("root used as an edge label");
    if (e.relation == Relation::Cop && !nodes_[e.dependent].is_be) {
      throw MalformedTree("cop edge must attach BE");
    }
  }
  // Heads are always added before their dependents, so following heads
  // strictly decreases the id and cannot cycle.
  for (const auto& e : edges_) {
    if (e.head >= e.dependent) throw MalformedTree("edge does not point away from the root");
  }
  for (NodeId id = 0; id < nodes_.size(); ++id) {
    const auto& n = nodes_[id];
    if (!n.is_be && n.surface.empty()) throw MalformedTree("node #" + std::to_string(id) + " has no surface");
    const auto conj = dependents(id, Relation::Conj).size();
    const auto disj = dependents(id, Relation::Disj).size();
    if ((conj > 0 && conj < 2) || (disj > 0 && disj < 2) || (conj > 0 && disj > 0)) {
      throw MalformedTree("coordination node #" + std::to_string(id) + " needs two or more conjuncts of one kind");
    }
  }
}

std::string inflect_be(Number number, Tense tense) {
  if (tense == Tense::Past) return number == Number::Plural ? "were" : "was";
  return number == Number::Plural ? "are" : "is";
}

std::string join_coordination(const std::vector<std::string>& items, std::string_view coordinator) {
  std::string out;
  const std::string word(coordinator);
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i == 0) {
      out = items[i];
    } else if (items.size() > 3 && i + 1 < items.size()) {
      out += ", " + items[i];
    } else {
      out += " " + word + " " + items[i];
    }
  }
  return out;
}

bool is_coordination(const DepTree& tree, NodeId id) {
  return tree.first_dependent(id, Relation::Conj) || tree.first_dependent(id, Relation::Disj);
}

bool is_clause(const DepTree& tree, NodeId id) {
  return tree.node(id).is_be || tree.first_dependent(id, Relation::Subj) || tree.first_dependent(id, Relation::Cop) ||
         tree.first_dependent(id, Relation::Dobj);
}

std::vector<std::string> verb_chain(const DepTree& tree, NodeId id) {
  if (!is_clause(tree, id) || is_coordination(tree, id)) return {};
  const DepNode& n = tree.node(id);
  Realizer r(tree);
  std::vector<std::string> adverbs;
  for (auto a : tree.dependents(id, Relation::Advmod)) {
    if (tree.node(a).placement == Placement::Natural) adverbs.push_back(r.node(a));
  }
  std::vector<std::string> chain;
  if (n.is_be) {
    chain.push_back(inflect_be(n.number, n.tense));
    chain.insert(chain.end(), adverbs.begin(), adverbs.end());
  } else if (tree.first_dependent(id, Relation::Cop)) {
    chain.push_back(inflect_be(n.number, n.tense));
    chain.insert(chain.end(), adverbs.begin(), adverbs.end());
    chain.push_back(form(n));
  } else {
    chain = adverbs;
    chain.push_back(form(n));
  }
  return chain;
}

std::string realize_fragment(const DepTree& tree, NodeId id) { return Realizer(tree).node(id); }

std::string realize_fragment(const DepTree& tree) { return realize_fragment(tree, tree.root()); }

std::string realize_tree(const DepTree& tree) {
  tree.validate();
  std::string text = capitalize(realize_fragment(tree));
  while (!text.empty() && (text.back() == ' ' || text.back() == '.')) text.pop_back();
  return text + ".";
}

std::string serialize_tree(const DepTree& tree) {
  tree.validate();
  std::string out;
  NodeId next = 0;
  auto visit = [&](auto& self, NodeId id, const std::string& head, std::size_t depth) -> void {
    const NodeId printed = next++;
    const DepNode& n = tree.node(id);
    out += std::string(depth * 2, ' ');
    out += std::string(relation_name(tree.relation_of(id))) + "(" + head + ", #" + std::to_string(printed) + " " +
           quote(n.surface);
    out += n.number == Number::Plural ? " pl" : " sg";
    if (n.tense == Tense::Past) out += " past";
    if (n.is_be) out += " BE";
    if (!n.plural_surface.empty()) out += " plural=" + quote(n.plural_surface);
    if (n.placement == Placement::Front) out += " front";
    if (n.placement == Placement::Back) out += " back";
    out += ")\n";
    for (auto d : tree.dependents(id)) self(self, d, "#" + std::to_string(printed), depth + 1);
  };
  visit(visit, tree.root(), "ROOT", 0);
  return out;
}

DepTree parse_tree(std::string_view text) {
  static const std::regex line_re(
      R"(^\s*([a-z]+)\((ROOT|#\d+), #(\d+) ("(?:[^"\\]|\\.)*")((?: (?:plural="(?:[^"\\]|\\.)*"|sg|pl|past|BE|front|back))*)\)\s*$)");
  static const std::regex attr_re(R"( (plural=("(?:[^"\\]|\\.)*")|sg|pl|past|BE|front|back))");
  DepTree tree;
  std::map<std::string, NodeId> ids;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    const std::string line(text.substr(start, end - start));
    start = end + 1;
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::smatch m;
    if (!std::regex_match(line, m, line_re)) {
      throw ParseError(line_no, first + 1, "rel(HEAD, #id \"surface\" attributes)", "'" + line + "'");
    }
    auto rel = relation_from_name(m[1].str());
    if (!rel) throw ParseError(line_no, first + 1, "relation name", "'" + m[1].str() + "'");
    DepNode node;
    node.surface = unquote(m[4].str());
    const std::string attrs = m[5].str();
    for (auto it = std::sregex_iterator(attrs.begin(), attrs.end(), attr_re); it != std::sregex_iterator(); ++it) {
      const std::string a = (*it)[1].str();
      if (a == "pl") node.number = Number::Plural;
      else if (a == "past") node.tense = Tense::Past;
      else if (a == "BE") node.is_be = true;
      else if (a == "front") node.placement = Placement::Front;
      else if (a == "back") node.placement = Placement::Back;
      else if (a.rfind("plural=", 0) == 0) node.plural_surface = unquote((*it)[2].str());
    }
    const std::string id = "#" + m[3].str();
    if (ids.count(id)) throw ParseError(line_no, first + 1, "fresh node id", "'" + id + "'");
    if (m[2].str() == "ROOT") {
      if (*rel != Relation::Root || !tree.empty()) throw ParseError(line_no, first + 1, "a single root line", "'" + line + "'");
      tree = DepTree(std::move(node));
      ids[id] = 0;
    } else {
      auto head = ids.find(m[2].str());
      if (head == ids.end()) throw ParseError(line_no, first + 1, "previously declared head", "'" + m[2].str() + "'");
      if (*rel == Relation::Root) throw ParseError(line_no, first + 1, "dependency relation", "'root'");
      ids[id] = tree.add(head->second, *rel, std::move(node));
    }
  }
  if (tree.empty()) throw ParseError(line_no == 0 ? 1 : line_no, 1, "root line", "end of input");
  try {
    tree.validate();
  } catch (const MalformedTree& e) {
    throw ParseError(line_no, 1, "well-formed tree", e.what());
  }
  return tree;
}

}  // namespace semverb
