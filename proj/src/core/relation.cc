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

#include "core/relation.h"

#include <algorithm>
#include <cctype>
#include <utility>

#include "core/error.h"

namespace pentaform {

namespace {

Value RequireAtom(Value v, const char* role) {
  if (!v.is_atom()) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(role) + " must be an atom, got " + v.ToString());
  }
  return v;
}

const Value& Component(const Quintuple& row, Coord c) {
  switch (c) {
    case Coord::kPlayer:
      return row.player;
    case Coord::kSituation:
      return row.situation;
    case Coord::kDecisionNode:
      return row.decision_node;
    case Coord::kAction:
      return row.action;
    case Coord::kSuccessor:
      return row.successor;
  }
  throw Error(ErrorCode::kInvalidArgument, "bad coordinate");
}

}  // namespace

Quintuple::Quintuple(Value i, Value j, Value w, Value a, Value y)
    : player(std::move(i)),
      situation(std::move(j)),
      decision_node(RequireAtom(std::move(w), "decision node")),
      action(RequireAtom(std::move(a), "action")),
      successor(RequireAtom(std::move(y), "successor node")) {}

QuintupleSet::QuintupleSet(std::vector<Quintuple> rows)
    : rows_(std::move(rows)) {
  std::sort(rows_.begin(), rows_.end());
  rows_.erase(std::unique(rows_.begin(), rows_.end()), rows_.end());
}

bool QuintupleSet::Contains(const Quintuple& row) const {
  return std::binary_search(rows_.begin(), rows_.end(), row);
}

bool QuintupleSet::IsSubsetOf(const QuintupleSet& other) const {
  return std::includes(other.rows_.begin(), other.rows_.end(), rows_.begin(),
                       rows_.end());
}

QuintupleSet QuintupleSet::Union(const QuintupleSet& other) const {
  std::vector<Quintuple> merged;
  merged.reserve(rows_.size() + other.rows_.size());
  std::set_union(rows_.begin(), rows_.end(), other.rows_.begin(),
                 other.rows_.end(), std::back_inserter(merged));
  QuintupleSet out;
  out.rows_ = std::move(merged);  // already sorted and unique
  return out;
}

QuintupleSet QuintupleSet::Difference(const QuintupleSet& other) const {
  std::vector<Quintuple> rest;
  std::set_difference(rows_.begin(), rows_.end(), other.rows_.begin(),
                      other.rows_.end(), std::back_inserter(rest));
  QuintupleSet out;
  out.rows_ = std::move(rest);
  return out;
}

char CoordLetter(Coord c) {
  switch (c) {
    case Coord::kPlayer:
      return 'I';
    case Coord::kSituation:
      return 'J';
    case Coord::kDecisionNode:
      return 'W';
    case Coord::kAction:
      return 'A';
    case Coord::kSuccessor:
      return 'Y';
  }
  return '?';
}

std::vector<Coord> ParseCoords(std::string_view letters) {
  if (letters.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate sequence must be nonempty");
  }
  std::vector<Coord> coords;
  for (char raw : letters) {
    Coord c;
    switch (std::toupper(static_cast<unsigned char>(raw))) {
      case 'I':
        c = Coord::kPlayer;
        break;
      case 'J':
        c = Coord::kSituation;
        break;
      case 'W':
        c = Coord::kDecisionNode;
        break;
      case 'A':
        c = Coord::kAction;
        break;
      case 'Y':
        c = Coord::kSuccessor;
        break;
      default:
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("unknown coordinate letter '") + raw +
                        "' (expected I, J, W, A, Y)");
    }
    if (std::find(coords.begin(), coords.end(), c) != coords.end()) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("repeated coordinate '") + CoordLetter(c) + "'");
    }
    coords.push_back(c);
  }
  return coords;
}

TupleRelation::TupleRelation(std::vector<Coord> coords,
                             std::vector<std::vector<Value>> tuples)
    : coords_(std::move(coords)), tuples_(std::move(tuples)) {
  if (coords_.empty() || coords_.size() > 5) {
    throw Error(ErrorCode::kInvalidArgument, "relation arity must be 1..5");
  }
  for (const auto& t : tuples_) {
    if (t.size() != coords_.size()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "tuple length does not match relation arity");
    }
  }
  std::sort(tuples_.begin(), tuples_.end());
  tuples_.erase(std::unique(tuples_.begin(), tuples_.end()), tuples_.end());
}

bool TupleRelation::IsFunctionFromFirst(std::size_t prefix_len) const {
  if (prefix_len == 0 || prefix_len >= coords_.size()) {
    throw Error(ErrorCode::kInvalidArgument,
                "function prefix must leave at least one coordinate");
  }
  // Tuples are sorted, so equal prefixes are adjacent.
  for (std::size_t i = 1; i < tuples_.size(); ++i) {
    if (std::equal(tuples_[i - 1].begin(), tuples_[i - 1].begin() + prefix_len,
                   tuples_[i].begin())) {
      return false;
    }
  }
  return true;
}

TupleRelation Project(const QuintupleSet& q,
                      const std::vector<Coord>& coords) {
  if (coords.empty()) {
    throw Error(ErrorCode::kInvalidArgument,
                "coordinate sequence must be nonempty");
  }
  for (std::size_t i = 0; i < coords.size(); ++i) {
    for (std::size_t k = i + 1; k < coords.size(); ++k) {
      if (coords[i] == coords[k]) {
        throw Error(ErrorCode::kInvalidArgument,
                    std::string("repeated coordinate '") +
                        CoordLetter(coords[i]) + "'");
      }
    }
  }
  std::vector<std::vector<Value>> tuples;
  tuples.reserve(q.size());
  for (const Quintuple& row : q.rows()) {
    std::vector<Value> t;
    t.reserve(coords.size());
    for (Coord c : coords) t.push_back(Component(row, c));
    tuples.push_back(std::move(t));
  }
  return TupleRelation(coords, std::move(tuples));
}

QuintupleSet SliceOf(const QuintupleSet& q, const Value& situation) {
  std::vector<Quintuple> rows;
  for (const Quintuple& row : q.rows()) {
    if (row.situation == situation) rows.push_back(row);
  }
  return QuintupleSet(std::move(rows));
}

std::map<Value, QuintupleSet> SlicePartition(const QuintupleSet& q) {
  std::map<Value, std::vector<Quintuple>> buckets;
  for (const Quintuple& row : q.rows()) {
    buckets[row.situation].push_back(row);
  }
  std::map<Value, QuintupleSet> out;
  for (auto& [j, rows] : buckets) {
    out.emplace(j, QuintupleSet(std::move(rows)));
  }
  return out;
}

ComponentSets Components(const QuintupleSet& q) {
  ComponentSets out;
  for (const Quintuple& row : q.rows()) {
    out.players.insert(row.player);
    out.situations.insert(row.situation);
    out.decision_nodes.insert(row.decision_node);
    out.actions.insert(row.action);
    out.successors.insert(row.successor);
  }
  return out;
}

ValueSet InformationSet(const QuintupleSet& q, const Value& situation) {
  QuintupleSet slice = SliceOf(q, situation);
  if (slice.empty()) {
    throw Error(ErrorCode::kUnknownSituation,
                "unknown situation " + situation.ToString());
  }
  ValueSet nodes;
  for (const Quintuple& row : slice.rows()) nodes.insert(row.decision_node);
  return nodes;
}

ValueSet ActionSetOf(const QuintupleSet& q, const Value& situation) {
  QuintupleSet slice = SliceOf(q, situation);
  if (slice.empty()) {
    throw Error(ErrorCode::kUnknownSituation,
                "unknown situation " + situation.ToString());
  }
  ValueSet actions;
  for (const Quintuple& row : slice.rows()) actions.insert(row.action);
  return actions;
}

TupleRelation PredecessorRelation(const QuintupleSet& q) {
  return Project(q, {Coord::kSuccessor, Coord::kDecisionNode});
}

TupleRelation Feasibility(const QuintupleSet& q) {
  return Project(q, {Coord::kDecisionNode, Coord::kAction});
}

ValueSet FeasibleActions(const QuintupleSet& q, const Value& decision_node) {
  ValueSet actions;
  for (const Quintuple& row : q.rows()) {
    if (row.decision_node == decision_node) actions.insert(row.action);
  }
  return actions;
}

ValueSet NodesOf(const QuintupleSet& q) {
  ValueSet nodes;
  for (const Quintuple& row : q.rows()) {
    nodes.insert(row.decision_node);
    nodes.insert(row.successor);
  }
  return nodes;
}

Value RootOf(const QuintupleSet& q) {
  ComponentSets c = Components(q);
  ValueSet candidates;
  for (const Value& w : c.decision_nodes) {
    if (!c.successors.count(w)) candidates.insert(w);
  }
  if (candidates.size() != 1) {
    std::string names;
    for (const Value& v : candidates) {
      if (!names.empty()) names += ", ";
      names += v.ToString();
    }
    throw Error(ErrorCode::kNoUniqueRoot,
                "no unique root: non-successor decision nodes are {" + names +
                    "}");
  }
  return *candidates.begin();
}

}  // namespace pentaform
