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

#ifndef PENTAFORM_CORE_RELATION_H_
#define PENTAFORM_CORE_RELATION_H_

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "core/value.h"

namespace pentaform {

// One row of the 5-ary relation: player, situation, decision node, action,
// successor node. Nodes and actions are atoms; player and situation may be
// node sets. Rows order lexicographically on (i, j, w, a, y).
struct Quintuple {
  Quintuple(Value i, Value j, Value w, Value a, Value y);

  Value player;
  Value situation;
  Value decision_node;
  Value action;
  Value successor;

  friend bool operator==(const Quintuple&, const Quintuple&) = default;
  friend auto operator<=>(const Quintuple&, const Quintuple&) = default;
};

// A finite, duplicate-free set of quintuples with deterministic (sorted)
// iteration order. No validity is assumed; the axioms live elsewhere.
// Immutable after construction: set operations return new sets.
class QuintupleSet {
 public:
  QuintupleSet() = default;
  explicit QuintupleSet(std::vector<Quintuple> rows);

  const std::vector<Quintuple>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  bool empty() const { return rows_.empty(); }
  bool Contains(const Quintuple& row) const;
  bool IsSubsetOf(const QuintupleSet& other) const;

  QuintupleSet Union(const QuintupleSet& other) const;
  QuintupleSet Difference(const QuintupleSet& other) const;

  friend bool operator==(const QuintupleSet&, const QuintupleSet&) = default;

 private:
  std::vector<Quintuple> rows_;  // sorted, unique
};

// The five coordinates of a quintuple, with their single-letter spellings
// I, J, W, A, Y used by the CLI and the file formats.
enum class Coord { kPlayer, kSituation, kDecisionNode, kAction, kSuccessor };

char CoordLetter(Coord c);
// Parses a coordinate string such as "JI" or "way" (case-insensitive).
// Rejects empty strings, repeats, and unknown letters.
std::vector<Coord> ParseCoords(std::string_view letters);

// The result of projecting a quintuple set onto a coordinate sequence:
// a duplicate-free set of Value tuples, sorted.
class TupleRelation {
 public:
  TupleRelation(std::vector<Coord> coords,
                std::vector<std::vector<Value>> tuples);

  const std::vector<Coord>& coords() const { return coords_; }
  const std::vector<std::vector<Value>>& tuples() const { return tuples_; }
  std::size_t size() const { return tuples_.size(); }
  bool empty() const { return tuples_.empty(); }

  // True iff the first `prefix_len` coordinates determine the rest, i.e.
  // the relation is a function from its leading coordinates.
  bool IsFunctionFromFirst(std::size_t prefix_len) const;

  friend bool operator==(const TupleRelation&, const TupleRelation&) = default;

 private:
  std::vector<Coord> coords_;
  std::vector<std::vector<Value>> tuples_;  // sorted, unique
};

// Projection onto an arbitrary coordinate sequence; coordinates may be
// reordered but not repeated.
TupleRelation Project(const QuintupleSet& q, const std::vector<Coord>& coords);

// All rows whose situation equals j; empty if j does not occur.
QuintupleSet SliceOf(const QuintupleSet& q, const Value& situation);

// The slice family indexed by the situations of q. Slices are pairwise
// disjoint, nonempty, and union back to q.
std::map<Value, QuintupleSet> SlicePartition(const QuintupleSet& q);

struct ComponentSets {
  ValueSet players;         // I
  ValueSet situations;      // J
  ValueSet decision_nodes;  // W
  ValueSet actions;         // A
  ValueSet successors;      // Y
};
ComponentSets Components(const QuintupleSet& q);

// Decision nodes of situation j's slice. Throws kUnknownSituation if j is
// not a situation of q; contrast with SliceOf, which returns empty.
ValueSet InformationSet(const QuintupleSet& q, const Value& situation);
// Actions of situation j's slice; same precondition as InformationSet.
ValueSet ActionSetOf(const QuintupleSet& q, const Value& situation);

// The (successor, decision-node) pair relation. It is a function exactly
// when each successor has one predecessor; query via IsFunctionFromFirst(1).
TupleRelation PredecessorRelation(const QuintupleSet& q);

// The (decision-node, action) pair relation.
TupleRelation Feasibility(const QuintupleSet& q);
// Section of the feasibility relation at w; empty when w is absent.
ValueSet FeasibleActions(const QuintupleSet& q, const Value& decision_node);

// W union Y.
ValueSet NodesOf(const QuintupleSet& q);

// The sole decision node that is not a successor. Throws kNoUniqueRoot —
// with the full candidate set in the message — when W \ Y is not a
// singleton.
Value RootOf(const QuintupleSet& q);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_RELATION_H_
