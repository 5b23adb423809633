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

#ifndef PENTAFORM_CORE_AXIOMS_H_
#define PENTAFORM_CORE_AXIOMS_H_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "core/relation.h"
#include "core/value.h"

namespace pentaform {

// The eight structural axioms on a quintuple set Q. A quintuple set
// satisfying all eight is a pentaform; one satisfying the first seven is a
// block (a pentaform minus the unique-root requirement).
//
//   kPlayerOfSituation      each situation has exactly one player
//   kSituationOfNode        each decision node has exactly one situation
//   kActionRectangle        per situation, (node, action) pairs form a
//                           Cartesian product
//   kSuccessorOfNodeAction  each (node, action) pair has one successor
//   kPredecessorOfSuccessor each successor has one decision node
//   kActionOfSuccessor      each successor has one action
//   kGroundedAncestry       every predecessor chain leaves the successor set
//   kUniqueRoot             exactly one decision node is not a successor
enum class AxiomId {
  kPlayerOfSituation,
  kSituationOfNode,
  kActionRectangle,
  kSuccessorOfNodeAction,
  kPredecessorOfSuccessor,
  kActionOfSuccessor,
  kGroundedAncestry,
  kUniqueRoot,
};

inline constexpr std::array<AxiomId, 8> kAllAxioms = {
    AxiomId::kPlayerOfSituation,      AxiomId::kSituationOfNode,
    AxiomId::kActionRectangle,        AxiomId::kSuccessorOfNodeAction,
    AxiomId::kPredecessorOfSuccessor, AxiomId::kActionOfSuccessor,
    AxiomId::kGroundedAncestry,       AxiomId::kUniqueRoot,
};

// Kebab-case name used in reports, JSON output, and the CLI.
std::string_view AxiomName(AxiomId a);
std::optional<AxiomId> AxiomFromName(std::string_view name);

// A concrete refutation of one axiom. witness_rows are drawn verbatim from
// the checked relation and reproduce the failure when re-checked alone.
// witness_values carries the key offenders (e.g. the doubly-assigned
// situation, the cycle nodes, the non-successor decision nodes).
struct Violation {
  AxiomId axiom;
  std::vector<Quintuple> witness_rows;
  std::vector<Value> witness_values;
  std::string message;
};

// Checks one axiom; failure is a value, never an exception. Reports the
// first witness under canonical row order.
std::optional<Violation> CheckAxiom(const QuintupleSet& q, AxiomId axiom);

enum class AxiomState { kPass, kFail, kNotEvaluable };

struct AxiomStatus {
  AxiomState state = AxiomState::kPass;
  std::optional<Violation> violation;
  std::string reason;  // set only for kNotEvaluable
};

struct AxiomReport {
  std::vector<std::pair<AxiomId, AxiomStatus>> axioms;  // all eight, in order
  bool is_pentaform = false;  // all eight pass
  bool is_block = false;      // first seven pass

  const AxiomStatus& StatusOf(AxiomId a) const;
};

AxiomReport Validate(const QuintupleSet& q);
bool IsPentaform(const QuintupleSet& q);
bool IsBlock(const QuintupleSet& q);

// W \ Y and Y \ W.
ValueSet StartNodes(const QuintupleSet& q);
ValueSet EndNodes(const QuintupleSet& q);

// Number of predecessor-map steps needed to leave the successor set from y,
// or nullopt if the chain never leaves (a cycle). Requires the predecessor
// relation to be a function and y to be a successor node.
std::optional<std::size_t> PredecessorEscapeSteps(const QuintupleSet& q,
                                                  const Value& successor);

// Three equivalent readings of the situation-of-node axiom, evaluated
// independently: (a) the node-to-situation projection is a function,
// (b) information sets of distinct situations are disjoint, (c) the
// information-set family is an injectively indexed partition of W.
struct SituationPartitionCheck {
  bool projection_functional = false;
  bool info_sets_disjoint = false;
  bool injective_partition = false;
};
SituationPartitionCheck CheckSituationPartition(const QuintupleSet& q);

// Four equivalent readings of the action-rectangle axiom, evaluated
// independently: (a) each situation's (node, action) projection is a
// Cartesian product, (b) it equals W_j x A_j, (c) feasible actions equal
// the situation's action set on each of its nodes, (d) feasible actions are
// constant across each information set. Throws kPreconditionViolation when
// the situation-of-node axiom fails (the readings only align under it).
struct FeasibilityConstancyCheck {
  bool rectangular = false;
  bool product_form = false;
  bool slice_actions_match = false;
  bool constant_on_info_sets = false;
};
FeasibilityConstancyCheck CheckFeasibilityConstancy(const QuintupleSet& q);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_AXIOMS_H_
