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

#ifndef PENTAFORM_CORE_TREE_H_
#define PENTAFORM_CORE_TREE_H_

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "core/relation.h"

namespace pentaform {

using NodeId = std::string;
// Ordered (parent, child) pair.
using DirectedEdge = std::pair<NodeId, NodeId>;
// Unordered pair, normalized so first < second.
using UndirectedEdge = std::pair<NodeId, NodeId>;
using EdgeSet = std::set<DirectedEdge>;

// An undirected tree plus a distinguished root node.
struct RootedTree {
  std::set<NodeId> nodes;
  std::set<UndirectedEdge> edges;
  NodeId root;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;
};

// A directed tree with every edge pointed away from the root. The trivial
// case is a single node with no edges; any nontrivial edge set determines
// its node set.
struct OutTree {
  std::set<NodeId> nodes;
  EdgeSet edges;

  friend bool operator==(const OutTree&, const OutTree&) = default;
};

// Normalizes an unordered pair.
UndirectedEdge MakeUndirected(const NodeId& a, const NodeId& b);

// Throws kInvalidTree unless the edges are two-element subsets of the node
// set, the root is a node, and the graph is connected and acyclic.
void ValidateRootedTree(const RootedTree& t);

// The three conditions a bare edge set must meet to be the edge set of a
// nontrivial out-tree: the reversed relation is a function, every successor
// escapes the successor set under iterated predecessors, and there is
// exactly one non-successor source.
enum class EdgeTreeCondition {
  kFunctionalPredecessor,
  kGroundedAncestry,
  kUniqueSource,
};

struct EdgeTreeViolation {
  EdgeTreeCondition condition;
  std::vector<NodeId> witnesses;
  std::string message;
};

std::optional<EdgeTreeViolation> ValidateEdgeTree(const EdgeSet& edges);

// Throws kInvalidTree unless `t` is a single isolated node (trivial) or its
// edge set passes ValidateEdgeTree and covers exactly the node set.
void ValidateOutTree(const OutTree& t);

// Points every edge of a rooted tree away from its root. Throws
// kInvalidTree if the input is not a rooted tree.
OutTree OrientDivergently(const RootedTree& t);

// Inverse of OrientDivergently: recovers the undirected tree and its root
// (the sole non-successor node; the only node, when trivial).
RootedTree UnderlyingRooted(const OutTree& t);

NodeId RootOfTree(const OutTree& t);

// (nodes(q), edge projection of q). Requires the three tree axioms;
// throws kAxiomViolation naming the first one that fails.
OutTree OutTreeOf(const QuintupleSet& q);

// How two nodes of an out-tree relate under the precedence order.
enum class NodeOrder { kEqual, kStrictlyBefore, kStrictlyAfter, kUnrelated };

// Throws kUnknownNode if either node is absent. Implemented by climbing
// predecessor chains toward the root.
NodeOrder ComparePrecedence(const OutTree& t, const NodeId& a,
                            const NodeId& b);
// a comes weakly before b: equal nodes or a directed path from a to b.
bool WeaklyPrecedes(const OutTree& t, const NodeId& a, const NodeId& b);
bool StrictlyPrecedes(const OutTree& t, const NodeId& a, const NodeId& b);

// A maximal path from the root, represented by its node set (the hosting
// tree recovers the edges; see RunEdges).
struct Run {
  std::vector<NodeId> nodes;  // sorted, unique

  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

// One run per end node, sorted by node set. A trivial out-tree has none.
std::vector<Run> RunsOf(const OutTree& t);

// The edges a run induces inside its host tree: exactly the tree edges with
// both ends in the run's node set.
EdgeSet RunEdges(const OutTree& t, const Run& run);

std::set<NodeId> TreeEndNodes(const OutTree& t);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_TREE_H_
