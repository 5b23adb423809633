// Copyright 2026 The Pentaform Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "core/tree.h"

#include <algorithm>
#include <map>
#include <queue>

#include "core/axioms.h"
#include "core/error.h"

namespace pentaform {

namespace {

std::map<NodeId, NodeId> PredecessorMap(const EdgeSet& edges) {
  std::map<NodeId, NodeId> pred;
  for (const auto& [w, y] : edges) pred.emplace(y, w);
  return pred;
}

std::set<NodeId> FirstProjection(const EdgeSet& edges) {
  std::set<NodeId> out;
  for (const auto& [w, y] : edges) out.insert(w);
  return out;
}

std::set<NodeId> SecondProjection(const EdgeSet& edges) {
  std::set<NodeId> out;
  for (const auto& [w, y] : edges) out.insert(y);
  return out;
}

}  // namespace

UndirectedEdge MakeUndirected(const NodeId& a, const NodeId& b) {
  return a < b ? UndirectedEdge{a, b} : UndirectedEdge{b, a};
}

void ValidateRootedTree(const RootedTree& t) {
  if (!t.nodes.count(t.root)) {
    throw Error(ErrorCode::kInvalidTree, "root is not a node of the tree");
  }
  for (const auto& [a, b] : t.edges) {
    if (a == b) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge {" + a + "} is not a two-element set");
    }
    if (a > b) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge {" + a + "," + b + "} is not normalized");
    }
    if (!t.nodes.count(a) || !t.nodes.count(b)) {
      throw Error(ErrorCode::kInvalidTree,
                  "edge {" + a + "," + b + "} mentions a non-node");
    }
  }
  if (t.nodes.empty()) {
    throw Error(ErrorCode::kInvalidTree, "a tree needs at least one node");
  }
  // Connected and acyclic, i.e. reach everything from the root and have
  // exactly |nodes| - 1 edges.
  std::multimap<NodeId, NodeId> adjacent;
  for (const auto& [a, b] : t.edges) {
    adjacent.emplace(a, b);
    adjacent.emplace(b, a);
  }
  std::set<NodeId> seen = {t.root};
  std::queue<NodeId> frontier;
  frontier.push(t.root);
  while (!frontier.empty()) {
    NodeId node = frontier.front();
    frontier.pop();
    auto [lo, hi] = adjacent.equal_range(node);
    for (auto it = lo; it != hi; ++it) {
      if (seen.insert(it->second).second) frontier.push(it->second);
    }
  }
  if (seen.size() != t.nodes.size()) {
    throw Error(ErrorCode::kInvalidTree, "graph is not connected");
  }
  if (t.edges.size() != t.nodes.size() - 1) {
    throw Error(ErrorCode::kInvalidTree, "graph has a cycle");
  }
}

std::optional<EdgeTreeViolation> ValidateEdgeTree(const EdgeSet& edges) {
  std::set<NodeId> successors = SecondProjection(edges);

  std::map<NodeId, NodeId> pred;
  for (const auto& [w, y] : edges) {
    auto [it, inserted] = pred.emplace(y, w);
    if (!inserted && it->second != w) {
      EdgeTreeViolation v;
      v.condition = EdgeTreeCondition::kFunctionalPredecessor;
      v.witnesses = {y, it->second, w};
      v.message = "node " + y + " has two predecessors " + it->second +
                  " and " + w;
      return v;
    }
  }

  for (const NodeId& start : successors) {
    NodeId current = start;
    std::size_t bound = successors.size();
    bool escaped = false;
    for (std::size_t step = 0; step < bound; ++step) {
      current = pred.at(current);
      if (!successors.count(current)) {
        escaped = true;
        break;
      }
    }
    if (!escaped) {
      EdgeTreeViolation v;
      v.condition = EdgeTreeCondition::kGroundedAncestry;
      v.witnesses = {start};
      v.message =
          "predecessor chain from " + start + " never leaves the successors";
      return v;
    }
  }

  std::vector<NodeId> sources;
  for (const NodeId& w : FirstProjection(edges)) {
    if (!successors.count(w)) sources.push_back(w);
  }
  if (sources.size() != 1) {
    EdgeTreeViolation v;
    v.condition = EdgeTreeCondition::kUniqueSource;
    v.witnesses = sources;
    std::string names;
    for (const NodeId& s : sources) {
      if (!names.empty()) names += ", ";
      names += s;
    }
    v.message = sources.empty() ? "edge set has no source node"
                                : "edge set has sources {" + names + "}";
    return v;
  }
  return std::nullopt;
}

void ValidateOutTree(const OutTree& t) {
  if (t.edges.empty()) {
    if (t.nodes.size() != 1) {
      throw Error(ErrorCode::kInvalidTree,
                  "an edgeless out-tree must be a single node");
    }
    return;
  }
  if (auto v = ValidateEdgeTree(t.edges)) {
    throw Error(ErrorCode::kInvalidTree, v->message);
  }
  std::set<NodeId> covered = FirstProjection(t.edges);
  for (const NodeId& y : SecondProjection(t.edges)) covered.insert(y);
  if (covered != t.nodes) {
    throw Error(ErrorCode::kInvalidTree,
                "node set differs from the nodes the edges cover");
  }
}

OutTree OrientDivergently(const RootedTree& t) {
  ValidateRootedTree(t);
  std::multimap<NodeId, NodeId> adjacent;
  for (const auto& [a, b] : t.edges) {
    adjacent.emplace(a, b);
    adjacent.emplace(b, a);
  }
  OutTree out;
  out.nodes = t.nodes;
  std::set<NodeId> seen = {t.root};
  std::queue<NodeId> frontier;
  frontier.push(t.root);
  while (!frontier.empty()) {
    NodeId node = frontier.front();
    frontier.pop();
    auto [lo, hi] = adjacent.equal_range(node);
    for (auto it = lo; it != hi; ++it) {
      if (seen.insert(it->second).second) {
        out.edges.emplace(node, it->second);
        frontier.push(it->second);
      }
    }
  }
  return out;
}

RootedTree UnderlyingRooted(const OutTree& t) {
  ValidateOutTree(t);
  RootedTree out;
  out.nodes = t.nodes;
  for (const auto& [w, y] : t.edges) {
    out.edges.insert(MakeUndirected(w, y));
  }
  out.root = RootOfTree(t);
  return out;
}

NodeId RootOfTree(const OutTree& t) {
  if (t.edges.empty()) {
    if (t.nodes.size() != 1) {
      throw Error(ErrorCode::kInvalidTree,
                  "an edgeless out-tree must be a single node");
    }
    return *t.nodes.begin();
  }
  std::set<NodeId> successors = SecondProjection(t.edges);
  std::vector<NodeId> sources;
  for (const NodeId& w : FirstProjection(t.edges)) {
    if (!successors.count(w)) sources.push_back(w);
  }
  if (sources.size() != 1) {
    throw Error(ErrorCode::kInvalidTree, "out-tree has no unique source");
  }
  return sources.front();
}

OutTree OutTreeOf(const QuintupleSet& q) {
  for (AxiomId a : {AxiomId::kPredecessorOfSuccessor,
                    AxiomId::kGroundedAncestry, AxiomId::kUniqueRoot}) {
    if (auto violation = CheckAxiom(q, a)) {
      throw Error(ErrorCode::kAxiomViolation,
                  std::string("relation has no tree: axiom ") +
                      std::string(AxiomName(a)) + " fails (" +
                      violation->message + ")");
    }
  }
  OutTree out;
  for (const Value& x : NodesOf(q)) out.nodes.insert(x.atom());
  for (const Quintuple& row : q.rows()) {
    out.edges.emplace(row.decision_node.atom(), row.successor.atom());
  }
  return out;
}

NodeOrder ComparePrecedence(const OutTree& t, const NodeId& a,
                            const NodeId& b) {
  if (!t.nodes.count(a)) {
    throw Error(ErrorCode::kUnknownNode, "unknown node " + a);
  }
  if (!t.nodes.count(b)) {
    throw Error(ErrorCode::kUnknownNode, "unknown node " + b);
  }
  if (a == b) return NodeOrder::kEqual;
  std::map<NodeId, NodeId> pred = PredecessorMap(t.edges);
  // Climb from b; meeting a means a comes before b. The step bound guards
  // against edge sets that are not actually trees.
  std::size_t bound = t.nodes.size();
  auto climbs_to = [&pred, bound](const NodeId& from, const NodeId& target) {
    std::size_t steps = 0;
    for (auto it = pred.find(from); it != pred.end() && steps < bound;
         it = pred.find(it->second), ++steps) {
      if (it->second == target) return true;
    }
    return false;
  };
  if (climbs_to(b, a)) return NodeOrder::kStrictlyBefore;
  if (climbs_to(a, b)) return NodeOrder::kStrictlyAfter;
  return NodeOrder::kUnrelated;
}

bool WeaklyPrecedes(const OutTree& t, const NodeId& a, const NodeId& b) {
  NodeOrder order = ComparePrecedence(t, a, b);
  return order == NodeOrder::kEqual || order == NodeOrder::kStrictlyBefore;
}

bool StrictlyPrecedes(const OutTree& t, const NodeId& a, const NodeId& b) {
  return ComparePrecedence(t, a, b) == NodeOrder::kStrictlyBefore;
}

std::vector<Run> RunsOf(const OutTree& t) {
  std::map<NodeId, NodeId> pred = PredecessorMap(t.edges);
  std::vector<Run> runs;
  for (const NodeId& leaf : TreeEndNodes(t)) {
    Run run;
    run.nodes.push_back(leaf);
    for (auto it = pred.find(leaf); it != pred.end();
         it = pred.find(it->second)) {
      run.nodes.push_back(it->second);
    }
    std::sort(run.nodes.begin(), run.nodes.end());
    runs.push_back(std::move(run));
  }
  std::sort(runs.begin(), runs.end());
  return runs;
}

EdgeSet RunEdges(const OutTree& t, const Run& run) {
  EdgeSet out;
  for (const auto& edge : t.edges) {
    if (std::binary_search(run.nodes.begin(), run.nodes.end(), edge.first) &&
        std::binary_search(run.nodes.begin(), run.nodes.end(), edge.second)) {
      out.insert(edge);
    }
  }
  return out;
}

std::set<NodeId> TreeEndNodes(const OutTree& t) {
  std::set<NodeId> decision = FirstProjection(t.edges);
  std::set<NodeId> out;
  for (const NodeId& y : SecondProjection(t.edges)) {
    if (!decision.count(y)) out.insert(y);
  }
  return out;
}

}  // namespace pentaform
