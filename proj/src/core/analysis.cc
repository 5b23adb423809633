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

#include "core/analysis.h"

#include <algorithm>
#include <map>
#include <set>

#include "core/axioms.h"
#include "core/error.h"
#include "core/tree.h"

namespace pentaform {

namespace {

void RequireBlock(const QuintupleSet& q, const char* which) {
  AxiomReport report = Validate(q);
  if (report.is_block) return;
  std::string failing;
  for (const auto& [axiom, status] : report.axioms) {
    if (axiom == AxiomId::kUniqueRoot) continue;
    if (status.state == AxiomState::kFail) {
      if (!failing.empty()) failing += ", ";
      failing += AxiomName(axiom);
    }
  }
  throw Error(ErrorCode::kPreconditionViolation,
              std::string(which) + " is not a block; failing axioms: " +
                  failing);
}

void RequirePentaform(const QuintupleSet& q) {
  if (!IsPentaform(q)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "relation is not a pentaform");
  }
}

std::vector<Value> Intersect(const ValueSet& a, const ValueSet& b) {
  std::vector<Value> shared;
  for (const Value& v : a) {
    if (b.count(v)) shared.push_back(v);
  }
  return shared;
}

ValueSet UnionOf(const ValueSet& a, const ValueSet& b) {
  ValueSet out = a;
  out.insert(b.begin(), b.end());
  return out;
}

ValueSet DifferenceOf(const ValueSet& a, const ValueSet& b) {
  ValueSet out;
  for (const Value& v : a) {
    if (!b.count(v)) out.insert(v);
  }
  return out;
}

// The unique row per successor node, keyed by the successor. Requires the
// four functionality axioms that make the row unique.
std::map<Value, Quintuple> RowsBySuccessor(const QuintupleSet& q) {
  std::map<Value, Quintuple> out;
  for (const Quintuple& row : q.rows()) {
    out.emplace(row.successor, row);
  }
  return out;
}

}  // namespace

namespace {

// node -> the nodes weakly preceding it (its root path, self included).
std::map<NodeId, std::set<NodeId>> WeakAncestors(const QuintupleSet& q) {
  std::map<NodeId, NodeId> pred;
  for (const Quintuple& row : q.rows()) {
    pred.emplace(row.successor.atom(), row.decision_node.atom());
  }
  std::map<NodeId, std::set<NodeId>> out;
  for (const Value& x : NodesOf(q)) {
    std::set<NodeId> chain = {x.atom()};
    for (auto it = pred.find(x.atom()); it != pred.end();
         it = pred.find(it->second)) {
      chain.insert(it->second);
    }
    out.emplace(x.atom(), std::move(chain));
  }
  return out;
}

}  // namespace

QuintupleSet WeaklyAfter(const QuintupleSet& q, const Value& decision_node) {
  RequirePentaform(q);
  if (!Components(q).decision_nodes.count(decision_node)) {
    throw Error(ErrorCode::kUnknownNode,
                "unknown decision node " + decision_node.ToString());
  }
  std::map<NodeId, std::set<NodeId>> ancestors = WeakAncestors(q);
  const NodeId& w = decision_node.atom();
  std::vector<Quintuple> rows;
  for (const Quintuple& row : q.rows()) {
    if (ancestors.at(row.decision_node.atom()).count(w)) {
      rows.push_back(row);
    }
  }
  return QuintupleSet(std::move(rows));
}

ValueSet Subroots(const QuintupleSet& q) {
  RequirePentaform(q);
  std::map<NodeId, std::set<NodeId>> ancestors = WeakAncestors(q);
  ValueSet decision_nodes = Components(q).decision_nodes;
  ValueSet subroots;
  for (const Value& t : decision_nodes) {
    const NodeId& node = t.atom();
    ValueSet inside;
    ValueSet outside;
    for (const Quintuple& row : q.rows()) {
      if (ancestors.at(row.decision_node.atom()).count(node)) {
        inside.insert(row.situation);
      } else {
        outside.insert(row.situation);
      }
    }
    if (Intersect(inside, outside).empty()) subroots.insert(t);
  }
  return subroots;
}

QuintupleSet Subgame(const QuintupleSet& q, const Value& subroot) {
  QuintupleSet rows = WeaklyAfter(q, subroot);  // validates q and the node
  ValueSet inside;
  for (const Quintuple& row : rows.rows()) inside.insert(row.situation);
  QuintupleSet rest = q.Difference(rows);
  for (const Quintuple& row : rest.rows()) {
    if (inside.count(row.situation)) {
      throw Error(ErrorCode::kNotASubroot,
                  subroot.ToString() + " is not a subroot: situation " +
                      row.situation.ToString() +
                      " spans the cut");
    }
  }
  return rows;
}

SeparationVerdict Separation(const std::vector<QuintupleSet>& family) {
  std::vector<ComponentSets> components;
  components.reserve(family.size());
  for (const QuintupleSet& q : family) components.push_back(Components(q));

  SeparationVerdict verdict;
  bool weak = true;
  bool strong = true;
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t k = i + 1; k < family.size(); ++k) {
      auto clash = [&](const char* kind, std::vector<Value> shared) {
        verdict.witnesses.push_back({i, k, kind, std::move(shared)});
      };
      std::vector<Value> shared;
      shared = Intersect(components[i].situations, components[k].situations);
      if (!shared.empty()) {
        weak = strong = false;
        clash("situation", std::move(shared));
      }
      shared = Intersect(components[i].decision_nodes,
                         components[k].decision_nodes);
      if (!shared.empty()) {
        weak = strong = false;
        clash("decision-node", std::move(shared));
      }
      shared =
          Intersect(components[i].successors, components[k].successors);
      if (!shared.empty()) {
        weak = strong = false;
        clash("successor-node", std::move(shared));
      }
      ValueSet nodes_i = UnionOf(components[i].decision_nodes,
                                 components[i].successors);
      ValueSet nodes_k = UnionOf(components[k].decision_nodes,
                                 components[k].successors);
      shared = Intersect(nodes_i, nodes_k);
      if (!shared.empty() && weak) {
        strong = false;
        clash("node", std::move(shared));
      }
    }
  }
  verdict.level = strong ? SeparationLevel::kStrong
                         : (weak ? SeparationLevel::kWeak
                                 : SeparationLevel::kNone);
  if (verdict.level == SeparationLevel::kStrong) verdict.witnesses.clear();
  return verdict;
}

BlockUnion UnionPair(const QuintupleSet& first, const QuintupleSet& second) {
  RequireBlock(first, "first relation");
  RequireBlock(second, "second relation");
  SeparationVerdict verdict = Separation({first, second});
  if (verdict.level == SeparationLevel::kNone) {
    throw Error(ErrorCode::kNotSeparated,
                "the two blocks are not weakly separated (shared " +
                    verdict.witnesses.front().kind + " " +
                    verdict.witnesses.front().shared.front().ToString() +
                    ")");
  }
  ValueSet start1 = StartNodes(first);
  ValueSet end1 = EndNodes(first);
  ValueSet start2 = StartNodes(second);
  ValueSet end2 = EndNodes(second);
  std::vector<Value> clash = Intersect(start1, end2);
  if (!clash.empty()) {
    throw Error(ErrorCode::kPreconditionViolation,
                "start node " + clash.front().ToString() +
                    " of the first block is an end node of the second");
  }

  BlockUnion out;
  out.relation = first.Union(second);
  out.start_nodes = UnionOf(start1, DifferenceOf(start2, end1));
  out.end_nodes = UnionOf(DifferenceOf(end1, start2), end2);
  if (!IsBlock(out.relation) || out.start_nodes != StartNodes(out.relation) ||
      out.end_nodes != EndNodes(out.relation)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "union failed its block or start/end cross-check");
  }
  return out;
}

BlockUnion UnionFamily(const std::vector<QuintupleSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    RequireBlock(family[i], "family member");
  }
  SeparationVerdict verdict = Separation(family);
  if (verdict.level != SeparationLevel::kStrong) {
    std::string detail = "the family is not strongly separated";
    if (!verdict.witnesses.empty()) {
      detail += " (shared " + verdict.witnesses.front().kind + " " +
                verdict.witnesses.front().shared.front().ToString() + ")";
    }
    throw Error(ErrorCode::kNotSeparated, detail);
  }
  BlockUnion out;
  for (const QuintupleSet& q : family) {
    out.relation = out.relation.Union(q);
    out.start_nodes = UnionOf(out.start_nodes, StartNodes(q));
    out.end_nodes = UnionOf(out.end_nodes, EndNodes(q));
  }
  if (!IsBlock(out.relation) || out.start_nodes != StartNodes(out.relation) ||
      out.end_nodes != EndNodes(out.relation)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "union failed its block or start/end cross-check");
  }
  return out;
}

QuintupleSet UnionChain(const std::vector<QuintupleSet>& chain) {
  if (chain.empty()) {
    throw Error(ErrorCode::kChainOrder, "chain must be nonempty");
  }
  std::optional<Value> root;
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (!IsPentaform(chain[i])) {
      throw Error(ErrorCode::kChainOrder,
                  "chain element " + std::to_string(i) +
                      " is not a pentaform");
    }
    if (i > 0 && !chain[i - 1].IsSubsetOf(chain[i])) {
      throw Error(ErrorCode::kChainOrder,
                  "chain element " + std::to_string(i) +
                      " does not contain its predecessor");
    }
    Value r = RootOf(chain[i]);
    if (root && r != *root) {
      throw Error(ErrorCode::kChainOrder,
                  "chain element " + std::to_string(i) + " has root " +
                      r.ToString() + ", expected " + root->ToString());
    }
    if (!root) root = r;
  }
  return chain.back();
}

Quintuple QuintupleOfSuccessor(const QuintupleSet& q, const Value& successor) {
  std::optional<Quintuple> found;
  for (const Quintuple& row : q.rows()) {
    if (row.successor != successor) continue;
    if (found) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "successor " + successor.ToString() +
                      " appears in more than one row");
    }
    found = row;
  }
  if (!found) {
    throw Error(ErrorCode::kUnknownSuccessor,
                successor.ToString() + " is not a successor node");
  }
  return *found;
}

namespace {

// For each successor node, the successor nodes strictly preceding it along
// its root path, in canonical order. The root itself never appears (it is
// not a successor).
std::map<Value, std::vector<Value>> SuccessorAncestors(const QuintupleSet& q) {
  ValueSet successors = Components(q).successors;
  std::map<Value, Value> pred;
  for (const Quintuple& row : q.rows()) {
    pred.emplace(row.successor, row.decision_node);
  }
  std::map<Value, std::vector<Value>> out;
  for (const Value& y : successors) {
    std::vector<Value> ancestors;
    for (auto it = pred.find(y); it != pred.end();
         it = pred.find(it->second)) {
      if (successors.count(it->second)) ancestors.push_back(it->second);
    }
    std::sort(ancestors.begin(), ancestors.end());
    out.emplace(y, std::move(ancestors));
  }
  return out;
}

}  // namespace

std::optional<RecallWitness> CheckPerfectRecall(const QuintupleSet& q) {
  RequirePentaform(q);
  std::map<Value, Quintuple> by_successor = RowsBySuccessor(q);
  std::map<Value, std::vector<Value>> ancestors = SuccessorAncestors(q);

  for (const auto& [y2, row2] : by_successor) {
    for (const Value& y1 : ancestors.at(y2)) {
      const Quintuple& row1 = by_successor.at(y1);
      if (row1.player != row2.player) continue;
      for (const auto& [y3, row3] : by_successor) {
        if (row3.situation != row2.situation) continue;
        bool recalled = false;
        for (const Value& y4 : ancestors.at(y3)) {
          const Quintuple& row4 = by_successor.at(y4);
          if (row4.situation == row1.situation &&
              row4.action == row1.action) {
            recalled = true;
            break;
          }
        }
        if (!recalled) {
          return RecallWitness{y1, y2, y3};
        }
      }
    }
  }
  return std::nullopt;
}

std::optional<RecallWitness> CheckNoAbsentmindedness(const QuintupleSet& q) {
  RequirePentaform(q);
  std::map<Value, Quintuple> by_successor = RowsBySuccessor(q);
  std::map<Value, std::vector<Value>> ancestors = SuccessorAncestors(q);
  std::optional<RecallWitness> witness;
  for (const auto& [y2, row2] : by_successor) {
    for (const Value& y1 : ancestors.at(y2)) {
      if (by_successor.at(y1).situation != row2.situation) continue;
      if (!witness || y1 < witness->first ||
          (y1 == witness->first && y2 < witness->second)) {
        witness = RecallWitness{y1, y2, std::nullopt};
      }
    }
  }
  return witness;
}

}  // namespace pentaform
