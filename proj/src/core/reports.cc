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

#include "core/reports.h"

#include "core/error.h"

namespace pentaform {

using nlohmann::ordered_json;

namespace {

ordered_json ValueSetJson(const ValueSet& values) {
  ordered_json out = ordered_json::array();
  for (const Value& v : values) out.push_back(ValueJson(v));
  return out;
}

}  // namespace

ordered_json ValueJson(const Value& v) {
  ordered_json out;
  if (v.is_atom()) {
    out["atom"] = v.atom();
  } else {
    out["set"] = v.elements();
  }
  return out;
}

ordered_json QuintupleJson(const Quintuple& row) {
  ordered_json out;
  out["i"] = ValueJson(row.player);
  out["j"] = ValueJson(row.situation);
  out["w"] = ValueJson(row.decision_node);
  out["a"] = ValueJson(row.action);
  out["y"] = ValueJson(row.successor);
  return out;
}

ordered_json AxiomReportJson(const AxiomReport& report) {
  ordered_json out;
  out["kind"] = "axiom-report";
  ordered_json axioms = ordered_json::array();
  for (const auto& [axiom, status] : report.axioms) {
    ordered_json entry;
    entry["axiom"] = std::string(AxiomName(axiom));
    switch (status.state) {
      case AxiomState::kPass:
        entry["status"] = "pass";
        break;
      case AxiomState::kNotEvaluable:
        entry["status"] = "not-evaluable";
        entry["reason"] = status.reason;
        break;
      case AxiomState::kFail: {
        entry["status"] = "fail";
        entry["message"] = status.violation->message;
        ordered_json rows = ordered_json::array();
        for (const Quintuple& row : status.violation->witness_rows) {
          rows.push_back(QuintupleJson(row));
        }
        entry["witness_rows"] = std::move(rows);
        ordered_json values = ordered_json::array();
        for (const Value& v : status.violation->witness_values) {
          values.push_back(ValueJson(v));
        }
        entry["witness_values"] = std::move(values);
        break;
      }
    }
    axioms.push_back(std::move(entry));
  }
  out["axioms"] = std::move(axioms);
  out["is_pentaform"] = report.is_pentaform;
  out["is_block"] = report.is_block;
  return out;
}

ordered_json GmConditionReportJson(
    const std::vector<GmViolation>& violations) {
  ordered_json out;
  out["kind"] = "condition-report";
  ordered_json list = ordered_json::array();
  for (const GmViolation& v : violations) {
    ordered_json entry;
    entry["condition"] = std::string(GmConditionName(v.condition));
    entry["message"] = v.message;
    list.push_back(std::move(entry));
  }
  out["violations"] = std::move(list);
  out["valid"] = violations.empty();
  return out;
}

ordered_json InfoJson(const QuintupleSet& q) {
  ComponentSets c = Components(q);
  ordered_json out;
  out["kind"] = "info";
  out["row_count"] = q.size();
  out["players"] = ValueSetJson(c.players);
  out["situations"] = ValueSetJson(c.situations);
  out["decision_nodes"] = ValueSetJson(c.decision_nodes);
  out["actions"] = ValueSetJson(c.actions);
  out["successor_nodes"] = ValueSetJson(c.successors);
  out["nodes"] = ValueSetJson(NodesOf(q));
  ValueSet starts = StartNodes(q);
  if (starts.size() == 1) {
    out["root"] = ValueJson(*starts.begin());
  } else {
    out["root"] = nullptr;
  }
  out["start_nodes"] = ValueSetJson(starts);
  out["end_nodes"] = ValueSetJson(EndNodes(q));
  ordered_json info_sets = ordered_json::array();
  for (const auto& [j, slice] : SlicePartition(q)) {
    ordered_json entry;
    entry["situation"] = ValueJson(j);
    entry["nodes"] = ValueSetJson(InformationSet(q, j));
    entry["actions"] = ValueSetJson(ActionSetOf(q, j));
    info_sets.push_back(std::move(entry));
  }
  out["information_sets"] = std::move(info_sets);
  ordered_json feasibility = ordered_json::array();
  for (const Value& w : c.decision_nodes) {
    ordered_json entry;
    entry["node"] = ValueJson(w);
    entry["actions"] = ValueSetJson(FeasibleActions(q, w));
    feasibility.push_back(std::move(entry));
  }
  out["feasibility"] = std::move(feasibility);
  return out;
}

ordered_json ProjectionJson(const TupleRelation& relation) {
  ordered_json out;
  out["kind"] = "projection";
  std::string coords;
  for (Coord c : relation.coords()) coords += CoordLetter(c);
  out["coords"] = coords;
  ordered_json tuples = ordered_json::array();
  for (const auto& tuple : relation.tuples()) {
    ordered_json row = ordered_json::array();
    for (const Value& v : tuple) row.push_back(ValueJson(v));
    tuples.push_back(std::move(row));
  }
  out["tuples"] = std::move(tuples);
  return out;
}

ordered_json GmRoundtripJson(const GmGame& g) {
  RoundtripReport report = CheckGmRoundtrip(g);
  std::vector<EqualityResult> equalities = ConversionEqualities(g);
  ordered_json out;
  out["kind"] = "roundtrip-report";
  out["direction"] = "gm";
  out["identity"] = report.status == RoundtripReport::Status::kIdentity;
  if (!report.detail.empty()) out["detail"] = report.detail;
  bool all_hold = true;
  ordered_json list = ordered_json::array();
  for (const EqualityResult& e : equalities) {
    ordered_json entry;
    entry["name"] = e.name;
    entry["holds"] = e.holds;
    all_hold = all_hold && e.holds;
    list.push_back(std::move(entry));
  }
  out["equalities"] = std::move(list);
  out["all_equalities_hold"] = all_hold;
  return out;
}

ordered_json PentaformRoundtripJson(const PentaformGame& game) {
  RoundtripReport report = CheckPentaformRoundtrip(game);
  ordered_json out;
  out["kind"] = "roundtrip-report";
  out["direction"] = "pentaform";
  out["identity"] = report.status == RoundtripReport::Status::kIdentity;
  out["rewritten"] = report.status == RoundtripReport::Status::kRewritten;
  if (!report.detail.empty()) out["detail"] = report.detail;
  return out;
}

ordered_json SubrootsJson(const QuintupleSet& q) {
  ordered_json out;
  out["kind"] = "subroots";
  out["subroots"] = ValueSetJson(Subroots(q));
  return out;
}

ordered_json RecallJson(const QuintupleSet& q) {
  ordered_json out;
  out["kind"] = "recall-report";

  auto witness_json = [](const RecallWitness& w) {
    ordered_json entry;
    entry["first"] = ValueJson(w.first);
    entry["second"] = ValueJson(w.second);
    if (w.third) entry["third"] = ValueJson(*w.third);
    return entry;
  };

  ordered_json recall;
  if (auto witness = CheckPerfectRecall(q)) {
    recall["ok"] = false;
    recall["witness"] = witness_json(*witness);
  } else {
    recall["ok"] = true;
    recall["witness"] = nullptr;
  }
  out["perfect_recall"] = std::move(recall);

  ordered_json attentive;
  if (auto witness = CheckNoAbsentmindedness(q)) {
    attentive["ok"] = false;
    attentive["witness"] = witness_json(*witness);
  } else {
    attentive["ok"] = true;
    attentive["witness"] = nullptr;
  }
  out["no_absentmindedness"] = std::move(attentive);
  return out;
}

ordered_json BlockUnionJson(const BlockUnion& result) {
  ordered_json out;
  out["kind"] = "union-summary";
  out["start_nodes"] = ValueSetJson(result.start_nodes);
  out["end_nodes"] = ValueSetJson(result.end_nodes);
  out["is_pentaform"] = result.start_nodes.size() == 1;
  return out;
}

}  // namespace pentaform
