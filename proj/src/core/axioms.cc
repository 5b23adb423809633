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

#include "core/axioms.h"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "core/error.h"

namespace pentaform {

namespace {

std::string Join(const std::vector<Value>& values) {
  std::string out;
  for (const Value& v : values) {
    if (!out.empty()) out += ", ";
    out += v.ToString();
  }
  return out;
}

// Reports the first pair of rows whose `key` coordinates agree while their
// `dep` coordinate differs. Shared helper for the four single-coordinate
// functionality axioms and the node-action one.
std::optional<Violation> CheckFunctional(const QuintupleSet& q, AxiomId axiom,
                                         std::vector<Coord> key, Coord dep,
                                         const char* what) {
  std::map<std::vector<Value>, const Quintuple*> seen;
  auto dep_of = [dep](const Quintuple& row) -> const Value& {
    switch (dep) {
      case Coord::kPlayer:
        return row.player;
      case Coord::kSituation:
        return row.situation;
      case Coord::kDecisionNode:
        return row.decision_node;
      case Coord::kAction:
        return row.action;
      default:
        return row.successor;
    }
  };
  auto key_of = [&key](const Quintuple& row) {
    std::vector<Value> k;
    for (Coord c : key) {
      switch (c) {
        case Coord::kPlayer:
          k.push_back(row.player);
          break;
        case Coord::kSituation:
          k.push_back(row.situation);
          break;
        case Coord::kDecisionNode:
          k.push_back(row.decision_node);
          break;
        case Coord::kAction:
          k.push_back(row.action);
          break;
        case Coord::kSuccessor:
          k.push_back(row.successor);
          break;
      }
    }
    return k;
  };
  for (const Quintuple& row : q.rows()) {
    auto k = key_of(row);
    auto [it, inserted] = seen.emplace(k, &row);
    if (!inserted && dep_of(*it->second) != dep_of(row)) {
      const Quintuple& first = *it->second;
      Violation v;
      v.axiom = axiom;
      v.witness_rows = {first, row};
      v.witness_values = k;
      v.witness_values.push_back(dep_of(first));
      v.witness_values.push_back(dep_of(row));
      v.message = std::string(what) + " " + Join(k) +
                  " is assigned both " + dep_of(first).ToString() + " and " +
                  dep_of(row).ToString();
      return v;
    }
  }
  return std::nullopt;
}

std::optional<Violation> CheckActionRectangle(const QuintupleSet& q) {
  for (const auto& [j, slice] : SlicePartition(q)) {
    ValueSet nodes;
    ValueSet actions;
    std::set<std::pair<Value, Value>> pairs;
    for (const Quintuple& row : slice.rows()) {
      nodes.insert(row.decision_node);
      actions.insert(row.action);
      pairs.emplace(row.decision_node, row.action);
    }
    if (pairs.size() == nodes.size() * actions.size()) continue;
    // Locate the first missing (node, action) pair, then two rows that
    // jointly witness the hole: one listing the node, one listing the
    // action at another node.
    for (const Value& w : nodes) {
      for (const Value& a : actions) {
        if (pairs.count({w, a})) continue;
        const Quintuple* row_with_node = nullptr;
        const Quintuple* row_with_action = nullptr;
        for (const Quintuple& row : slice.rows()) {
          if (row_with_node == nullptr && row.decision_node == w) {
            row_with_node = &row;
          }
          if (row_with_action == nullptr && row.action == a) {
            row_with_action = &row;
          }
        }
        Violation v;
        v.axiom = AxiomId::kActionRectangle;
        v.witness_rows = {*row_with_node, *row_with_action};
        std::sort(v.witness_rows.begin(), v.witness_rows.end());
        v.witness_values = {j, w, a};
        v.message = "situation " + j.ToString() + ": node " + w.ToString() +
                    " lacks action " + a.ToString() +
                    " available elsewhere in the slice";
        return v;
      }
    }
  }
  return std::nullopt;
}

// Edge map w -> successors and the (functional) predecessor map y -> w.
std::map<Value, Value> PredecessorMap(const QuintupleSet& q) {
  std::map<Value, Value> pred;
  for (const Quintuple& row : q.rows()) {
    pred.emplace(row.successor, row.decision_node);
  }
  return pred;
}

// Grounded ancestry when the predecessor relation is a function: iterate the
// predecessor map from each successor; a chain that stays inside Y must
// revisit a node within |Y| steps, and that cycle is the witness.
std::optional<Violation> CheckGroundedAncestryFunctional(
    const QuintupleSet& q) {
  ComponentSets c = Components(q);
  std::map<Value, Value> pred = PredecessorMap(q);
  for (const Value& start : c.successors) {
    std::vector<Value> chain = {start};
    std::set<Value> on_chain = {start};
    Value current = start;
    bool escaped = false;
    while (true) {
      const Value& up = pred.at(current);
      if (!c.successors.count(up)) {
        escaped = true;
        break;
      }
      if (on_chain.count(up)) {
        // Cycle: everything from the first occurrence of `up` onwards.
        auto begin = std::find(chain.begin(), chain.end(), up);
        std::vector<Value> cycle(begin, chain.end());
        std::sort(cycle.begin(), cycle.end());
        Violation v;
        v.axiom = AxiomId::kGroundedAncestry;
        for (const Quintuple& row : q.rows()) {
          if (std::binary_search(cycle.begin(), cycle.end(), row.successor)) {
            v.witness_rows.push_back(row);
          }
        }
        v.witness_values = cycle;
        v.message = "predecessor chain from " + start.ToString() +
                    " never leaves the successor set; cycle {" + Join(cycle) +
                    "}";
        return v;
      }
      chain.push_back(up);
      on_chain.insert(up);
      current = up;
    }
    if (escaped) continue;
  }
  return std::nullopt;
}

// Fallback reading when the predecessor relation is not a function: every
// successor must be reachable by an edge path from some non-successor
// decision node.
std::optional<Violation> CheckGroundedAncestryPaths(const QuintupleSet& q) {
  ComponentSets c = Components(q);
  std::multimap<Value, Value> children;
  for (const Quintuple& row : q.rows()) {
    children.emplace(row.decision_node, row.successor);
  }
  std::set<Value> reached;
  std::queue<Value> frontier;
  for (const Value& w : c.decision_nodes) {
    if (!c.successors.count(w)) {
      reached.insert(w);
      frontier.push(w);
    }
  }
  while (!frontier.empty()) {
    Value node = frontier.front();
    frontier.pop();
    auto [lo, hi] = children.equal_range(node);
    for (auto it = lo; it != hi; ++it) {
      if (it->second != node && reached.insert(it->second).second) {
        frontier.push(it->second);
      }
    }
  }
  std::vector<Value> unreachable;
  for (const Value& y : c.successors) {
    if (!reached.count(y)) unreachable.push_back(y);
  }
  if (unreachable.empty()) return std::nullopt;
  Violation v;
  v.axiom = AxiomId::kGroundedAncestry;
  for (const Quintuple& row : q.rows()) {
    if (std::binary_search(unreachable.begin(), unreachable.end(),
                           row.successor)) {
      v.witness_rows.push_back(row);
    }
  }
  v.witness_values = unreachable;
  v.message = "successor " + unreachable.front().ToString() +
              " is not reachable by any edge path from a start node";
  return v;
}

std::optional<Violation> CheckGroundedAncestry(const QuintupleSet& q) {
  if (PredecessorRelation(q).IsFunctionFromFirst(1)) {
    return CheckGroundedAncestryFunctional(q);
  }
  return CheckGroundedAncestryPaths(q);
}

std::optional<Violation> CheckUniqueRoot(const QuintupleSet& q) {
  ValueSet starts = StartNodes(q);
  if (starts.size() == 1) return std::nullopt;
  Violation v;
  v.axiom = AxiomId::kUniqueRoot;
  v.witness_values.assign(starts.begin(), starts.end());
  for (const Quintuple& row : q.rows()) {
    if (starts.count(row.decision_node)) v.witness_rows.push_back(row);
  }
  v.message = starts.empty()
                  ? "no start node: every decision node is also a successor"
                  : "multiple start nodes {" + Join(v.witness_values) + "}";
  return v;
}

}  // namespace

std::string_view AxiomName(AxiomId a) {
  switch (a) {
    case AxiomId::kPlayerOfSituation:
      return "player-of-situation";
    case AxiomId::kSituationOfNode:
      return "situation-of-node";
    case AxiomId::kActionRectangle:
      return "action-rectangle";
    case AxiomId::kSuccessorOfNodeAction:
      return "successor-of-node-action";
    case AxiomId::kPredecessorOfSuccessor:
      return "predecessor-of-successor";
    case AxiomId::kActionOfSuccessor:
      return "action-of-successor";
    case AxiomId::kGroundedAncestry:
      return "grounded-ancestry";
    case AxiomId::kUniqueRoot:
      return "unique-root";
  }
  return "?";
}

std::optional<AxiomId> AxiomFromName(std::string_view name) {
  for (AxiomId a : kAllAxioms) {
    if (AxiomName(a) == name) return a;
  }
  return std::nullopt;
}

std::optional<Violation> CheckAxiom(const QuintupleSet& q, AxiomId axiom) {
  switch (axiom) {
    case AxiomId::kPlayerOfSituation:
      return CheckFunctional(q, axiom, {Coord::kSituation}, Coord::kPlayer,
                             "situation");
    case AxiomId::kSituationOfNode:
      return CheckFunctional(q, axiom, {Coord::kDecisionNode},
                             Coord::kSituation, "decision node");
    case AxiomId::kActionRectangle:
      return CheckActionRectangle(q);
    case AxiomId::kSuccessorOfNodeAction:
      return CheckFunctional(q, axiom,
                             {Coord::kDecisionNode, Coord::kAction},
                             Coord::kSuccessor, "node/action pair");
    case AxiomId::kPredecessorOfSuccessor:
      return CheckFunctional(q, axiom, {Coord::kSuccessor},
                             Coord::kDecisionNode, "successor");
    case AxiomId::kActionOfSuccessor:
      return CheckFunctional(q, axiom, {Coord::kSuccessor}, Coord::kAction,
                             "successor");
    case AxiomId::kGroundedAncestry:
      return CheckGroundedAncestry(q);
    case AxiomId::kUniqueRoot:
      return CheckUniqueRoot(q);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad axiom id");
}

const AxiomStatus& AxiomReport::StatusOf(AxiomId a) const {
  for (const auto& [id, status] : axioms) {
    if (id == a) return status;
  }
  throw Error(ErrorCode::kInvalidArgument, "axiom missing from report");
}

AxiomReport Validate(const QuintupleSet& q) {
  AxiomReport report;
  bool first_seven = true;
  bool all_eight = true;
  for (AxiomId a : kAllAxioms) {
    AxiomStatus status;
    if (auto violation = CheckAxiom(q, a)) {
      status.state = AxiomState::kFail;
      status.violation = std::move(violation);
      all_eight = false;
      if (a != AxiomId::kUniqueRoot) first_seven = false;
    }
    report.axioms.emplace_back(a, std::move(status));
  }
  report.is_pentaform = all_eight;
  report.is_block = first_seven;
  return report;
}

bool IsPentaform(const QuintupleSet& q) { return Validate(q).is_pentaform; }

bool IsBlock(const QuintupleSet& q) { return Validate(q).is_block; }

ValueSet StartNodes(const QuintupleSet& q) {
  ComponentSets c = Components(q);
  ValueSet out;
  for (const Value& w : c.decision_nodes) {
    if (!c.successors.count(w)) out.insert(w);
  }
  return out;
}

ValueSet EndNodes(const QuintupleSet& q) {
  ComponentSets c = Components(q);
  ValueSet out;
  for (const Value& y : c.successors) {
    if (!c.decision_nodes.count(y)) out.insert(y);
  }
  return out;
}

std::optional<std::size_t> PredecessorEscapeSteps(const QuintupleSet& q,
                                                  const Value& successor) {
  if (!PredecessorRelation(q).IsFunctionFromFirst(1)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "predecessor relation is not a function");
  }
  ComponentSets c = Components(q);
  if (!c.successors.count(successor)) {
    throw Error(ErrorCode::kUnknownSuccessor,
                "unknown successor " + successor.ToString());
  }
  std::map<Value, Value> pred = PredecessorMap(q);
  Value current = successor;
  std::size_t bound = c.successors.size();
  for (std::size_t steps = 1; steps <= bound; ++steps) {
    current = pred.at(current);
    if (!c.successors.count(current)) return steps;
  }
  return std::nullopt;
}

SituationPartitionCheck CheckSituationPartition(const QuintupleSet& q) {
  SituationPartitionCheck out;
  out.projection_functional =
      !CheckAxiom(q, AxiomId::kSituationOfNode).has_value();

  std::map<Value, ValueSet> info_sets;
  for (const Quintuple& row : q.rows()) {
    info_sets[row.situation].insert(row.decision_node);
  }

  out.info_sets_disjoint = true;
  for (auto it1 = info_sets.begin(); it1 != info_sets.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != info_sets.end(); ++it2) {
      for (const Value& w : it1->second) {
        if (it2->second.count(w)) {
          out.info_sets_disjoint = false;
          break;
        }
      }
      if (!out.info_sets_disjoint) break;
    }
    if (!out.info_sets_disjoint) break;
  }

  // Injectively indexed partition: the indexed family is injective and its
  // image partitions W. Members are nonempty by construction, and their
  // union is W by construction, so what remains is injectivity plus
  // pairwise disjointness of the image.
  bool injective = true;
  std::set<ValueSet> image;
  for (const auto& [j, ws] : info_sets) {
    if (!image.insert(ws).second) injective = false;
  }
  bool image_disjoint = true;
  for (auto it1 = image.begin(); it1 != image.end(); ++it1) {
    for (auto it2 = std::next(it1); it2 != image.end(); ++it2) {
      for (const Value& w : *it1) {
        if (it2->count(w)) {
          image_disjoint = false;
          break;
        }
      }
    }
  }
  out.injective_partition = injective && image_disjoint;
  return out;
}

FeasibilityConstancyCheck CheckFeasibilityConstancy(const QuintupleSet& q) {
  if (CheckAxiom(q, AxiomId::kSituationOfNode)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "situation-of-node must hold before comparing feasibility "
                "readings");
  }
  FeasibilityConstancyCheck out;
  out.rectangular = !CheckAxiom(q, AxiomId::kActionRectangle).has_value();

  out.product_form = true;
  out.slice_actions_match = true;
  out.constant_on_info_sets = true;
  for (const auto& [j, slice] : SlicePartition(q)) {
    ValueSet nodes;
    ValueSet actions;
    std::set<std::pair<Value, Value>> pairs;
    for (const Quintuple& row : slice.rows()) {
      nodes.insert(row.decision_node);
      actions.insert(row.action);
      pairs.emplace(row.decision_node, row.action);
    }
    std::set<std::pair<Value, Value>> product;
    for (const Value& w : nodes) {
      for (const Value& a : actions) product.emplace(w, a);
    }
    if (pairs != product) out.product_form = false;

    std::optional<ValueSet> shared;
    for (const Value& w : nodes) {
      ValueSet feasible = FeasibleActions(q, w);
      if (feasible != actions) out.slice_actions_match = false;
      if (shared && feasible != *shared) out.constant_on_info_sets = false;
      shared = std::move(feasible);
    }
  }
  return out;
}

}  // namespace pentaform
