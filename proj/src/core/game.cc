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

#include "core/game.h"

#include <cmath>
#include <limits>
#include <sstream>
#include <utility>

#include "core/error.h"

namespace pentaform {

namespace {

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

std::set<std::pair<NodeId, NodeId>> WeakPrecedencePairs(const OutTree& t) {
  std::map<NodeId, NodeId> pred;
  for (const auto& [w, y] : t.edges) pred.emplace(y, w);
  std::set<std::pair<NodeId, NodeId>> out;
  for (const NodeId& x : t.nodes) {
    out.emplace(x, x);
    std::size_t steps = 0;
    for (auto it = pred.find(x);
         it != pred.end() && steps < t.nodes.size();
         it = pred.find(it->second), ++steps) {
      out.emplace(it->second, x);
    }
  }
  return out;
}

std::set<std::pair<NodeId, NodeId>> StrictPrecedencePairs(const OutTree& t) {
  auto pairs = WeakPrecedencePairs(t);
  for (const NodeId& x : t.nodes) pairs.erase({x, x});
  return pairs;
}

OutTree GmTree(const GmGame& g) {
  OutTree t;
  t.nodes = g.nodes;
  t.edges = g.edges;
  return t;
}

}  // namespace

ExtendedReal::ExtendedReal(double value) : value_(value) {
  if (std::isnan(value)) {
    throw Error(ErrorCode::kInvalidArgument,
                "utility values must not be NaN");
  }
}

ExtendedReal ExtendedReal::Infinity() {
  return ExtendedReal(std::numeric_limits<double>::infinity());
}

ExtendedReal ExtendedReal::NegativeInfinity() {
  return ExtendedReal(-std::numeric_limits<double>::infinity());
}

bool ExtendedReal::is_finite() const { return std::isfinite(value_); }

bool ExtendedReal::is_positive_infinity() const {
  return std::isinf(value_) && value_ > 0;
}

bool ExtendedReal::is_negative_infinity() const {
  return std::isinf(value_) && value_ < 0;
}

double ExtendedReal::finite_value() const {
  if (!is_finite()) {
    throw Error(ErrorCode::kInvalidArgument, "value is not finite");
  }
  return value_;
}

std::string ExtendedReal::ToString() const {
  if (is_positive_infinity()) return "inf";
  if (is_negative_infinity()) return "-inf";
  std::ostringstream out;
  out << value_;
  return out.str();
}

PentaformGame MakePentaformGame(QuintupleSet relation,
                                UtilityProfile utilities) {
  AxiomReport report = Validate(relation);
  if (!report.is_pentaform) {
    std::string failing;
    for (const auto& [axiom, status] : report.axioms) {
      if (status.state == AxiomState::kFail) {
        if (!failing.empty()) failing += ", ";
        failing += AxiomName(axiom);
      }
    }
    throw Error(ErrorCode::kAxiomViolation,
                "relation is not a pentaform; failing axioms: " + failing);
  }

  ValueSet players = Components(relation).players;
  std::vector<Run> runs = RunsOf(OutTreeOf(relation));

  ValueSet given_players;
  for (const auto& [player, values] : utilities.per_player) {
    given_players.insert(player);
  }
  if (given_players != players) {
    throw Error(ErrorCode::kPreconditionViolation,
                "utility profile players differ from the relation's players");
  }
  for (const auto& [player, values] : utilities.per_player) {
    if (values.size() != runs.size()) {
      throw Error(ErrorCode::kPreconditionViolation,
                  "utility profile for " + player.ToString() +
                      " is not total over the runs");
    }
    for (const Run& run : runs) {
      if (!values.count(run)) {
        throw Error(ErrorCode::kPreconditionViolation,
                    "utility profile for " + player.ToString() +
                        " misses a run");
      }
    }
  }
  return PentaformGame{std::move(relation), std::move(utilities)};
}

std::string_view GmConditionName(GmCondition c) {
  switch (c) {
    case GmCondition::kOutTree:
      return "out-tree";
    case GmCondition::kInformationPartition:
      return "information-partition";
    case GmCondition::kLabeling:
      return "labeling";
    case GmCondition::kFeasibilityConstancy:
      return "feasibility-constancy";
    case GmCondition::kControlConstancy:
      return "control-constancy";
    case GmCondition::kUtilityTotality:
      return "utility-totality";
  }
  return "?";
}

std::vector<GmViolation> CheckGmGame(const GmGame& g) {
  std::vector<GmViolation> violations;
  auto fail = [&violations](GmCondition c, std::string message) {
    violations.push_back({c, std::move(message)});
  };

  bool tree_ok = true;
  if (g.edges.empty()) {
    tree_ok = false;
    fail(GmCondition::kOutTree, "the tree must have at least one edge");
  } else if (auto v = ValidateEdgeTree(g.edges)) {
    tree_ok = false;
    fail(GmCondition::kOutTree, v->message);
  } else {
    std::set<NodeId> covered = FirstProjection(g.edges);
    for (const NodeId& y : SecondProjection(g.edges)) covered.insert(y);
    if (covered != g.nodes) {
      tree_ok = false;
      fail(GmCondition::kOutTree,
           "node set differs from the nodes the edges cover");
    }
  }

  std::set<NodeId> decision_nodes = FirstProjection(g.edges);

  std::map<NodeId, const std::set<NodeId>*> member_of;
  bool partition_ok = true;
  for (const auto& h : g.information_sets) {
    if (h.empty()) {
      partition_ok = false;
      fail(GmCondition::kInformationPartition,
           "information sets must be nonempty");
      continue;
    }
    for (const NodeId& w : h) {
      if (!decision_nodes.count(w)) {
        partition_ok = false;
        fail(GmCondition::kInformationPartition,
             "information set member " + w + " is not a decision node");
      } else if (!member_of.emplace(w, &h).second) {
        partition_ok = false;
        fail(GmCondition::kInformationPartition,
             "decision node " + w + " lies in two information sets");
      }
    }
  }
  if (partition_ok && member_of.size() != decision_nodes.size()) {
    partition_ok = false;
    for (const NodeId& w : decision_nodes) {
      if (!member_of.count(w)) {
        fail(GmCondition::kInformationPartition,
             "decision node " + w + " lies in no information set");
        break;
      }
    }
  }

  for (const auto& edge : g.edges) {
    if (!g.labels.count(edge)) {
      fail(GmCondition::kLabeling, "edge (" + edge.first + ", " +
                                       edge.second + ") has no action label");
      break;
    }
  }
  for (const auto& [edge, action] : g.labels) {
    if (!g.edges.count(edge)) {
      fail(GmCondition::kLabeling, "label on (" + edge.first + ", " +
                                       edge.second + ") which is not an edge");
      break;
    }
  }
  {
    std::map<std::pair<NodeId, std::string>, NodeId> seen;
    for (const auto& [edge, action] : g.labels) {
      auto [it, inserted] = seen.emplace(std::make_pair(edge.first, action),
                                         edge.second);
      if (!inserted && it->second != edge.second) {
        fail(GmCondition::kLabeling,
             "node " + edge.first + " labels two edges with action " +
                 action);
        break;
      }
    }
  }

  std::map<NodeId, std::set<std::string>> feasible;
  for (const auto& [edge, action] : g.labels) {
    feasible[edge.first].insert(action);
  }
  if (partition_ok) {
    for (const auto& h : g.information_sets) {
      const std::set<std::string>* shared = nullptr;
      for (const NodeId& w : h) {
        const std::set<std::string>& fw = feasible[w];
        if (shared != nullptr && fw != *shared) {
          fail(GmCondition::kFeasibilityConstancy,
               "nodes of one information set have different feasible "
               "actions (at " +
                   w + ")");
          break;
        }
        shared = &fw;
      }
    }
  }

  bool controls_total = true;
  for (const NodeId& w : decision_nodes) {
    if (!g.controls.count(w)) {
      controls_total = false;
      fail(GmCondition::kControlConstancy,
           "decision node " + w + " has no controlling player");
      break;
    }
  }
  for (const auto& [w, player] : g.controls) {
    if (!decision_nodes.count(w)) {
      controls_total = false;
      fail(GmCondition::kControlConstancy,
           "control entry for " + w + " which is not a decision node");
      break;
    }
  }
  if (controls_total && partition_ok) {
    for (const auto& h : g.information_sets) {
      const Value* shared = nullptr;
      for (const NodeId& w : h) {
        const Value& player = g.controls.at(w);
        if (shared != nullptr && player != *shared) {
          fail(GmCondition::kControlConstancy,
               "nodes of one information set belong to different players "
               "(at " +
                   w + ")");
          break;
        }
        shared = &player;
      }
    }
  }

  if (tree_ok && controls_total) {
    ValueSet players;
    for (const auto& [w, player] : g.controls) players.insert(player);
    ValueSet given;
    for (const auto& [player, values] : g.utilities.per_player) {
      given.insert(player);
    }
    if (given != players) {
      fail(GmCondition::kUtilityTotality,
           "utility profile players differ from the controlling players");
    } else {
      std::vector<Run> runs = RunsOf(GmTree(g));
      for (const auto& [player, values] : g.utilities.per_player) {
        bool total = values.size() == runs.size();
        for (const Run& run : runs) {
          if (!values.count(run)) total = false;
        }
        if (!total) {
          fail(GmCondition::kUtilityTotality,
               "utility profile for " + player.ToString() +
                   " is not total over the runs");
          break;
        }
      }
    }
  }
  return violations;
}

void ValidateGmGame(const GmGame& g) {
  std::vector<GmViolation> violations = CheckGmGame(g);
  if (violations.empty()) return;
  std::string message = "not a valid game:";
  for (const GmViolation& v : violations) {
    message += " [";
    message += GmConditionName(v.condition);
    message += "] " + v.message + ";";
  }
  throw Error(ErrorCode::kPreconditionViolation, message);
}

std::set<NodeId> GmDecisionNodes(const GmGame& g) {
  return FirstProjection(g.edges);
}

ValueSet GmPlayers(const GmGame& g) {
  ValueSet players;
  for (const auto& [w, player] : g.controls) players.insert(player);
  return players;
}

std::set<std::string> GmActions(const GmGame& g) {
  std::set<std::string> actions;
  for (const auto& [edge, action] : g.labels) actions.insert(action);
  return actions;
}

std::map<NodeId, std::set<std::string>> GmFeasibility(const GmGame& g) {
  std::map<NodeId, std::set<std::string>> feasible;
  for (const auto& [edge, action] : g.labels) {
    feasible[edge.first].insert(action);
  }
  return feasible;
}

const std::set<NodeId>& GmInformationSetOf(const GmGame& g, const NodeId& w) {
  for (const auto& h : g.information_sets) {
    if (h.count(w)) return h;
  }
  throw Error(ErrorCode::kUnknownNode,
              "node " + w + " lies in no information set");
}

PentaformGame PentaformOf(const GmGame& g) {
  ValidateGmGame(g);
  std::vector<Quintuple> rows;
  rows.reserve(g.edges.size());
  for (const auto& edge : g.edges) {
    const auto& [w, y] = edge;
    const std::set<NodeId>& h = GmInformationSetOf(g, w);
    rows.emplace_back(
        g.controls.at(w),
        Value::NodeSet(std::vector<NodeId>(h.begin(), h.end())),
        Value::Atom(w), Value::Atom(g.labels.at(edge)), Value::Atom(y));
  }
  return MakePentaformGame(QuintupleSet(std::move(rows)), g.utilities);
}

GmGame Standardize(const PentaformGame& game) {
  const QuintupleSet& q = game.relation;
  GmGame g;
  for (const Value& x : NodesOf(q)) g.nodes.insert(x.atom());
  for (const Quintuple& row : q.rows()) {
    DirectedEdge edge{row.decision_node.atom(), row.successor.atom()};
    g.edges.insert(edge);
    g.labels.emplace(edge, row.action.atom());
    g.controls.emplace(row.decision_node.atom(), row.player);
  }
  for (const auto& [j, slice] : SlicePartition(q)) {
    std::set<NodeId> info_set;
    for (const Quintuple& row : slice.rows()) {
      info_set.insert(row.decision_node.atom());
    }
    g.information_sets.insert(std::move(info_set));
  }
  g.utilities = game.utilities;
  return g;
}

bool HasInformationSetSituations(const QuintupleSet& q) {
  for (const auto& [j, slice] : SlicePartition(q)) {
    if (!j.is_node_set()) return false;
    std::set<std::string> info_set;
    for (const Quintuple& row : slice.rows()) {
      info_set.insert(row.decision_node.atom());
    }
    const std::vector<std::string>& elements = j.elements();
    if (info_set != std::set<std::string>(elements.begin(), elements.end())) {
      return false;
    }
  }
  return true;
}

namespace {

std::optional<std::string> FirstGmMismatch(const GmGame& a, const GmGame& b) {
  if (a.nodes != b.nodes) return "nodes";
  if (a.edges != b.edges) return "edges";
  if (a.information_sets != b.information_sets) return "information-sets";
  if (a.labels != b.labels) return "labeling";
  if (a.controls != b.controls) return "controls";
  if (a.utilities != b.utilities) return "utilities";
  return std::nullopt;
}

}  // namespace

RoundtripReport CheckGmRoundtrip(const GmGame& g) {
  GmGame back = Standardize(PentaformOf(g));
  if (auto mismatch = FirstGmMismatch(g, back)) {
    return {RoundtripReport::Status::kMismatch,
            "round trip changed component " + *mismatch};
  }
  return {RoundtripReport::Status::kIdentity, ""};
}

RoundtripReport CheckPentaformRoundtrip(const PentaformGame& game) {
  PentaformGame back = PentaformOf(Standardize(game));
  if (!HasInformationSetSituations(game.relation)) {
    std::string detail =
        "situations are not information sets; round trip rewrites them to";
    for (const auto& [j, slice] : SlicePartition(back.relation)) {
      detail += " " + j.ToString();
    }
    return {RoundtripReport::Status::kRewritten, detail};
  }
  if (back.relation != game.relation) {
    return {RoundtripReport::Status::kMismatch,
            "round trip changed component relation"};
  }
  if (back.utilities != game.utilities) {
    return {RoundtripReport::Status::kMismatch,
            "round trip changed component utilities"};
  }
  return {RoundtripReport::Status::kIdentity, ""};
}

std::vector<EqualityResult> ConversionEqualities(const GmGame& g) {
  PentaformGame image = PentaformOf(g);
  const QuintupleSet& q = image.relation;
  OutTree gm_tree = GmTree(g);
  OutTree image_tree = OutTreeOf(q);

  std::vector<EqualityResult> results;
  auto record = [&results](std::string name, bool holds) {
    results.push_back({std::move(name), holds});
  };

  std::set<NodeId> image_nodes;
  for (const Value& x : NodesOf(q)) image_nodes.insert(x.atom());
  record("nodes", image_nodes == g.nodes);

  EdgeSet image_edges;
  std::map<DirectedEdge, std::string> image_labels;
  std::map<NodeId, Value> image_controls;
  std::set<NodeId> image_decision_nodes;
  std::set<NodeId> image_successors;
  std::set<std::string> image_actions;
  ValueSet image_players;
  std::set<std::set<NodeId>> image_situations;
  std::set<std::pair<NodeId, NodeId>> image_feasibility;
  for (const Quintuple& row : q.rows()) {
    DirectedEdge edge{row.decision_node.atom(), row.successor.atom()};
    image_edges.insert(edge);
    image_labels.emplace(edge, row.action.atom());
    image_controls.emplace(row.decision_node.atom(), row.player);
    image_decision_nodes.insert(row.decision_node.atom());
    image_successors.insert(row.successor.atom());
    image_actions.insert(row.action.atom());
    image_players.insert(row.player);
    const std::vector<std::string>& elements = row.situation.elements();
    image_situations.insert(
        std::set<NodeId>(elements.begin(), elements.end()));
    image_feasibility.emplace(row.decision_node.atom(), row.action.atom());
  }
  record("edges", image_edges == g.edges);
  record("root", RootOf(q).atom() == RootOfTree(gm_tree));
  record("decision-nodes", image_decision_nodes == FirstProjection(g.edges));
  record("successor-nodes", image_successors == SecondProjection(g.edges));

  std::set<std::pair<NodeId, NodeId>> image_pred;
  for (const auto& [w, y] : image_edges) image_pred.emplace(y, w);
  std::set<std::pair<NodeId, NodeId>> gm_pred;
  for (const auto& [w, y] : g.edges) gm_pred.emplace(y, w);
  record("predecessor-map", image_pred == gm_pred);

  record("weak-precedence",
         WeakPrecedencePairs(image_tree) == WeakPrecedencePairs(gm_tree));
  record("strict-precedence",
         StrictPrecedencePairs(image_tree) == StrictPrecedencePairs(gm_tree));
  record("runs", RunsOf(image_tree) == RunsOf(gm_tree));
  record("information-sets", image_situations == g.information_sets);
  record("labeling", image_labels == g.labels);
  record("actions", image_actions == GmActions(g));

  std::set<std::pair<NodeId, NodeId>> gm_feasibility;
  for (const auto& [edge, action] : g.labels) {
    gm_feasibility.emplace(edge.first, action);
  }
  record("feasibility", image_feasibility == gm_feasibility);
  record("controls", image_controls == g.controls);
  record("players", image_players == GmPlayers(g));
  record("utilities", image.utilities == g.utilities);
  return results;
}

}  // namespace pentaform
