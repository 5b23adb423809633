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

#ifndef PENTAFORM_CORE_GAME_H_
#define PENTAFORM_CORE_GAME_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "core/axioms.h"
#include "core/relation.h"
#include "core/tree.h"
#include "core/value.h"

namespace pentaform {

// A real number extended with +infinity and -infinity. Totally ordered;
// only storage and comparison are provided (no arithmetic).
class ExtendedReal {
 public:
  ExtendedReal() : value_(0.0) {}
  explicit ExtendedReal(double value);  // rejects NaN
  static ExtendedReal Infinity();
  static ExtendedReal NegativeInfinity();

  bool is_finite() const;
  bool is_positive_infinity() const;
  bool is_negative_infinity() const;
  // Requires is_finite().
  double finite_value() const;
  double raw() const { return value_; }

  std::string ToString() const;

  friend bool operator==(const ExtendedReal&, const ExtendedReal&) = default;
  friend auto operator<=>(const ExtendedReal&, const ExtendedReal&) = default;

 private:
  double value_;
};

// Per-player utility assignment over runs, keyed by the run's canonical
// (sorted) node set.
struct UtilityProfile {
  std::map<Value, std::map<Run, ExtendedReal>> per_player;

  friend bool operator==(const UtilityProfile&,
                         const UtilityProfile&) = default;
};

// A validated pentaform together with a total utility profile over its
// runs. Build through MakePentaformGame.
struct PentaformGame {
  QuintupleSet relation;
  UtilityProfile utilities;

  friend bool operator==(const PentaformGame&,
                         const PentaformGame&) = default;
};

// Throws kAxiomViolation when the relation is not a pentaform, and
// kPreconditionViolation when the utility profile is not total over exactly
// the relation's players and runs.
PentaformGame MakePentaformGame(QuintupleSet relation,
                                UtilityProfile utilities);

// The standard tree-adorned form: an out-tree, an information-set partition
// of the decision nodes, an action label per edge, a controlling player per
// decision node, and utilities over runs.
struct GmGame {
  std::set<NodeId> nodes;                      // X
  EdgeSet edges;                               // E
  std::set<std::set<NodeId>> information_sets; // H
  std::map<DirectedEdge, std::string> labels;  // lambda: edge -> action atom
  std::map<NodeId, Value> controls;            // tau: node -> player
  UtilityProfile utilities;

  friend bool operator==(const GmGame&, const GmGame&) = default;
};

// The six defining conditions, named for reporting.
enum class GmCondition {
  kOutTree,               // (X, E) is a nontrivial out-tree
  kInformationPartition,  // H partitions the decision nodes
  kLabeling,              // labels total on E and locally injective
  kFeasibilityConstancy,  // feasible actions constant on information sets
  kControlConstancy,      // controls total on W, constant on info sets
  kUtilityTotality,       // utilities total over runs, per player
};

std::string_view GmConditionName(GmCondition c);

struct GmViolation {
  GmCondition condition;
  std::string message;
};

// All failed conditions with witnesses in the message; empty means valid.
std::vector<GmViolation> CheckGmGame(const GmGame& g);
// Throws kPreconditionViolation listing the failures.
void ValidateGmGame(const GmGame& g);

// Derived pieces of a valid GmGame.
std::set<NodeId> GmDecisionNodes(const GmGame& g);           // W
ValueSet GmPlayers(const GmGame& g);                         // I
std::set<std::string> GmActions(const GmGame& g);            // A
std::map<NodeId, std::set<std::string>> GmFeasibility(const GmGame& g);
const std::set<NodeId>& GmInformationSetOf(const GmGame& g, const NodeId& w);

// Expands every edge of a standard game into a quintuple carrying the
// controlling player, the decision node's information set as the situation,
// and the edge's action label. Utilities pass through unchanged. The result
// is a pentaform game whose situations are information sets.
PentaformGame PentaformOf(const GmGame& g);

// The reverse construction: reads the out-tree, information sets, labels,
// and controls straight off the relation's projections. Utilities pass
// through unchanged. Total on all pentaform games.
GmGame Standardize(const PentaformGame& game);

// True iff every situation equals its own information set, as a node-set
// value. Atom situations never qualify.
bool HasInformationSetSituations(const QuintupleSet& q);

// Round-trip outcomes. Standard games always come back identical.
// Pentaform games come back identical exactly when their situations are
// information sets; otherwise the round trip rewrites situations to
// information sets and that is reported, not an error.
struct RoundtripReport {
  enum class Status { kIdentity, kRewritten, kMismatch };
  Status status;
  std::string detail;  // first mismatching component, or the rewrite note
};

RoundtripReport CheckGmRoundtrip(const GmGame& g);
RoundtripReport CheckPentaformRoundtrip(const PentaformGame& game);

// The sixteen derived-entity equalities between a standard game and its
// pentaform image: nodes, edges, root, decision nodes, successor nodes,
// predecessor map, both precedence orders, runs, information sets,
// labeling, actions, feasibility, controls, players, utilities.
struct EqualityResult {
  std::string name;
  bool holds;
};

std::vector<EqualityResult> ConversionEqualities(const GmGame& g);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_GAME_H_
