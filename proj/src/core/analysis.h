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

#ifndef PENTAFORM_CORE_ANALYSIS_H_
#define PENTAFORM_CORE_ANALYSIS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "core/relation.h"
#include "core/value.h"

namespace pentaform {

// The rows of q whose decision node weakly succeeds w, under the precedence
// order of q's tree. Requires a pentaform; throws kUnknownNode when w is
// not a decision node.
QuintupleSet WeaklyAfter(const QuintupleSet& q, const Value& decision_node);

// Decision nodes t whose weakly-after rows share no situation with the rest
// of the relation. The root always qualifies.
ValueSet Subroots(const QuintupleSet& q);

// WeaklyAfter(q, t) for a subroot t - itself a pentaform rooted at t.
// Throws kNotASubroot for decision nodes outside Subroots(q); use
// WeaklyAfter for raw extraction.
QuintupleSet Subgame(const QuintupleSet& q, const Value& subroot);

// How far apart the members of a family sit: strongly separated members
// share no situations and no nodes at all; weakly separated members share
// no situations, no decision nodes, and no successor nodes (an end node of
// one may still be a start node of another).
enum class SeparationLevel { kStrong, kWeak, kNone };

struct SeparationClash {
  std::size_t first_index;
  std::size_t second_index;
  std::string kind;  // "situation", "decision-node", "successor-node", "node"
  std::vector<Value> shared;
};

struct SeparationVerdict {
  SeparationLevel level = SeparationLevel::kStrong;
  // For kWeak: the node overlaps that block strong separation. For kNone:
  // the situation/decision-node/successor-node overlaps.
  std::vector<SeparationClash> witnesses;
};

SeparationVerdict Separation(const std::vector<QuintupleSet>& family);

struct BlockUnion {
  QuintupleSet relation;
  ValueSet start_nodes;
  ValueSet end_nodes;
};

// Union of two weakly separated blocks where no start node of the first is
// an end node of the second (the first may feed the second, not vice
// versa). The result is a block; its start and end node sets are computed
// by the set formulas and cross-checked against direct recomputation.
// Throws kPreconditionViolation / kNotSeparated naming the failed check.
BlockUnion UnionPair(const QuintupleSet& first, const QuintupleSet& second);

// Union of a strongly separated family of blocks; start and end node sets
// are the unions of the members'. Throws kNotSeparated with witnesses.
BlockUnion UnionFamily(const std::vector<QuintupleSet>& family);

// Union of a nested ascending sequence of pentaforms sharing one root: the
// last element. Validates nesting, root agreement, and that the result is a
// pentaform; throws kChainOrder with the first offending index.
QuintupleSet UnionChain(const std::vector<QuintupleSet>& chain);

// The unique row ending at successor y (well-defined on pentaforms), which
// carries y's player, situation, and action. Throws kUnknownSuccessor.
Quintuple QuintupleOfSuccessor(const QuintupleSet& q, const Value& successor);

// A counterexample to one of the recall conditions. For perfect recall:
// first strictly precedes second with the same player, second shares its
// situation with third, and no earlier edge on third's history matches
// first's situation and action. For absentmindedness: first strictly
// precedes second within one situation (third is absent).
struct RecallWitness {
  Value first;
  Value second;
  std::optional<Value> third;
};

// Exhaustive check over successor-node triples; returns the first witness
// ordered by (second, first, third) under the canonical value order.
std::optional<RecallWitness> CheckPerfectRecall(const QuintupleSet& q);

// Exhaustive check over successor-node pairs; first witness in (first,
// second) order.
std::optional<RecallWitness> CheckNoAbsentmindedness(const QuintupleSet& q);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_ANALYSIS_H_
