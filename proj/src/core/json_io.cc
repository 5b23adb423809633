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

#include "core/json_io.h"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <utility>

#include "core/error.h"
#include "json.hpp"

namespace pentaform {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

[[noreturn]] void SchemaError(const std::string& path,
                              const std::string& what) {
  throw Error(ErrorCode::kSchemaViolation,
              "schema violation at " + (path.empty() ? "/" : path) + ": " +
                  what);
}

void RequireKeys(const json& node, const std::string& path,
                 std::initializer_list<const char*> keys) {
  if (!node.is_object()) SchemaError(path, "expected an object");
  for (const char* key : keys) {
    if (!node.contains(key)) {
      SchemaError(path, std::string("missing key \"") + key + "\"");
    }
  }
  for (const auto& [key, unused] : node.items()) {
    bool known = false;
    for (const char* k : keys) {
      if (key == k) known = true;
    }
    if (!known) SchemaError(path, "unknown key \"" + key + "\"");
  }
}

std::string RequireString(const json& node, const std::string& path) {
  if (!node.is_string()) SchemaError(path, "expected a string");
  return node.get<std::string>();
}

Value ValueFromJson(const json& node, const std::string& path) {
  if (!node.is_object()) {
    SchemaError(path, "expected {\"atom\": ...} or {\"set\": [...]}");
  }
  if (node.size() != 1) {
    SchemaError(path, "expected exactly one of \"atom\" or \"set\"");
  }
  try {
    if (node.contains("atom")) {
      return Value::Atom(RequireString(node["atom"], path + "/atom"));
    }
    if (node.contains("set")) {
      const json& arr = node["set"];
      if (!arr.is_array()) SchemaError(path + "/set", "expected an array");
      std::vector<std::string> elements;
      for (std::size_t i = 0; i < arr.size(); ++i) {
        elements.push_back(
            RequireString(arr[i], path + "/set/" + std::to_string(i)));
      }
      return Value::NodeSet(std::move(elements));
    }
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidArgument) {
      SchemaError(path, e.what());
    }
    throw;
  }
  SchemaError(path, "expected exactly one of \"atom\" or \"set\"");
}

Value AtomValueFromJson(const json& node, const std::string& path) {
  Value v = ValueFromJson(node, path);
  if (!v.is_atom()) SchemaError(path, "nodes and actions must be atoms");
  return v;
}

ordered_json ValueToJson(const Value& v) {
  ordered_json out;
  if (v.is_atom()) {
    out["atom"] = v.atom();
  } else {
    out["set"] = v.elements();
  }
  return out;
}

ExtendedReal UtilityFromJson(const json& node, const std::string& path) {
  if (node.is_string()) {
    std::string s = node.get<std::string>();
    if (s == "inf") return ExtendedReal::Infinity();
    if (s == "-inf") return ExtendedReal::NegativeInfinity();
    SchemaError(path, "utility strings must be \"inf\" or \"-inf\"");
  }
  if (!node.is_number()) SchemaError(path, "expected a number or inf string");
  return ExtendedReal(node.get<double>());
}

ordered_json UtilityToJson(const ExtendedReal& v) {
  if (v.is_positive_infinity()) return "inf";
  if (v.is_negative_infinity()) return "-inf";
  return v.finite_value();
}

Run RunFromJson(const json& node, const std::string& path) {
  if (!node.is_array() || node.empty()) {
    SchemaError(path, "expected a nonempty array of node names");
  }
  Run run;
  for (std::size_t i = 0; i < node.size(); ++i) {
    run.nodes.push_back(RequireString(node[i], path + "/" + std::to_string(i)));
  }
  std::sort(run.nodes.begin(), run.nodes.end());
  run.nodes.erase(std::unique(run.nodes.begin(), run.nodes.end()),
                  run.nodes.end());
  return run;
}

UtilityProfile UtilitiesFromJson(const json& node, const std::string& path) {
  if (!node.is_array()) SchemaError(path, "expected an array");
  UtilityProfile profile;
  for (std::size_t i = 0; i < node.size(); ++i) {
    std::string entry_path = path + "/" + std::to_string(i);
    RequireKeys(node[i], entry_path, {"player", "values"});
    Value player = ValueFromJson(node[i]["player"], entry_path + "/player");
    if (profile.per_player.count(player)) {
      SchemaError(entry_path + "/player", "duplicate player");
    }
    const json& values = node[i]["values"];
    if (!values.is_array()) {
      SchemaError(entry_path + "/values", "expected an array");
    }
    std::map<Run, ExtendedReal> per_run;
    for (std::size_t k = 0; k < values.size(); ++k) {
      std::string value_path = entry_path + "/values/" + std::to_string(k);
      RequireKeys(values[k], value_path, {"run", "utility"});
      Run run = RunFromJson(values[k]["run"], value_path + "/run");
      if (per_run.count(run)) SchemaError(value_path + "/run", "duplicate run");
      per_run.emplace(std::move(run),
                      UtilityFromJson(values[k]["utility"],
                                      value_path + "/utility"));
    }
    profile.per_player.emplace(std::move(player), std::move(per_run));
  }
  return profile;
}

ordered_json UtilitiesToJson(const UtilityProfile& profile) {
  ordered_json out = ordered_json::array();
  for (const auto& [player, values] : profile.per_player) {
    ordered_json entry;
    entry["player"] = ValueToJson(player);
    ordered_json list = ordered_json::array();
    for (const auto& [run, utility] : values) {
      ordered_json item;
      item["run"] = run.nodes;
      item["utility"] = UtilityToJson(utility);
      list.push_back(std::move(item));
    }
    entry["values"] = std::move(list);
    out.push_back(std::move(entry));
  }
  return out;
}

QuintupleSet RowsFromJson(const json& node, const std::string& path,
                          std::vector<std::string>* warnings) {
  if (!node.is_array()) SchemaError(path, "expected an array of rows");
  std::vector<Quintuple> rows;
  for (std::size_t i = 0; i < node.size(); ++i) {
    std::string row_path = path + "/" + std::to_string(i);
    RequireKeys(node[i], row_path, {"i", "j", "w", "a", "y"});
    rows.emplace_back(ValueFromJson(node[i]["i"], row_path + "/i"),
                      ValueFromJson(node[i]["j"], row_path + "/j"),
                      AtomValueFromJson(node[i]["w"], row_path + "/w"),
                      AtomValueFromJson(node[i]["a"], row_path + "/a"),
                      AtomValueFromJson(node[i]["y"], row_path + "/y"));
  }
  QuintupleSet q(rows);
  if (warnings != nullptr && q.size() != node.size()) {
    warnings->push_back(std::to_string(node.size() - q.size()) +
                        " duplicate row(s) dropped");
  }
  return q;
}

ordered_json RowsToJson(const QuintupleSet& q) {
  ordered_json out = ordered_json::array();
  for (const Quintuple& row : q.rows()) {
    ordered_json item;
    item["i"] = ValueToJson(row.player);
    item["j"] = ValueToJson(row.situation);
    item["w"] = ValueToJson(row.decision_node);
    item["a"] = ValueToJson(row.action);
    item["y"] = ValueToJson(row.successor);
    out.push_back(std::move(item));
  }
  return out;
}

GmGame GmGameFromJson(const json& root) {
  GmGame g;
  const json& nodes = root["nodes"];
  if (!nodes.is_array()) SchemaError("/nodes", "expected an array");
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    g.nodes.insert(RequireString(nodes[i], "/nodes/" + std::to_string(i)));
  }
  const json& edges = root["edges"];
  if (!edges.is_array()) SchemaError("/edges", "expected an array");
  for (std::size_t i = 0; i < edges.size(); ++i) {
    std::string path = "/edges/" + std::to_string(i);
    RequireKeys(edges[i], path, {"from", "to"});
    g.edges.emplace(RequireString(edges[i]["from"], path + "/from"),
                    RequireString(edges[i]["to"], path + "/to"));
  }
  const json& sets = root["information_sets"];
  if (!sets.is_array()) SchemaError("/information_sets", "expected an array");
  for (std::size_t i = 0; i < sets.size(); ++i) {
    std::string path = "/information_sets/" + std::to_string(i);
    if (!sets[i].is_array()) SchemaError(path, "expected an array");
    std::set<NodeId> h;
    for (std::size_t k = 0; k < sets[i].size(); ++k) {
      h.insert(RequireString(sets[i][k], path + "/" + std::to_string(k)));
    }
    g.information_sets.insert(std::move(h));
  }
  const json& labels = root["labels"];
  if (!labels.is_array()) SchemaError("/labels", "expected an array");
  for (std::size_t i = 0; i < labels.size(); ++i) {
    std::string path = "/labels/" + std::to_string(i);
    RequireKeys(labels[i], path, {"from", "to", "action"});
    DirectedEdge edge{RequireString(labels[i]["from"], path + "/from"),
                      RequireString(labels[i]["to"], path + "/to")};
    if (!g.labels.emplace(edge, RequireString(labels[i]["action"],
                                              path + "/action"))
             .second) {
      SchemaError(path, "duplicate label for one edge");
    }
  }
  const json& controls = root["controls"];
  if (!controls.is_array()) SchemaError("/controls", "expected an array");
  for (std::size_t i = 0; i < controls.size(); ++i) {
    std::string path = "/controls/" + std::to_string(i);
    RequireKeys(controls[i], path, {"node", "player"});
    NodeId node = RequireString(controls[i]["node"], path + "/node");
    if (!g.controls
             .emplace(node,
                      ValueFromJson(controls[i]["player"], path + "/player"))
             .second) {
      SchemaError(path, "duplicate control entry for one node");
    }
  }
  g.utilities = UtilitiesFromJson(root["utilities"], "/utilities");
  ValidateGmGame(g);
  return g;
}

ordered_json GmGameToJson(const GmGame& g) {
  ordered_json out;
  out["nodes"] = g.nodes;
  ordered_json edges = ordered_json::array();
  for (const auto& [from, to] : g.edges) {
    ordered_json e;
    e["from"] = from;
    e["to"] = to;
    edges.push_back(std::move(e));
  }
  out["edges"] = std::move(edges);
  ordered_json sets = ordered_json::array();
  for (const auto& h : g.information_sets) sets.push_back(h);
  out["information_sets"] = std::move(sets);
  ordered_json labels = ordered_json::array();
  for (const auto& [edge, action] : g.labels) {
    ordered_json l;
    l["from"] = edge.first;
    l["to"] = edge.second;
    l["action"] = action;
    labels.push_back(std::move(l));
  }
  out["labels"] = std::move(labels);
  ordered_json controls = ordered_json::array();
  for (const auto& [node, player] : g.controls) {
    ordered_json c;
    c["node"] = node;
    c["player"] = ValueToJson(player);
    controls.push_back(std::move(c));
  }
  out["controls"] = std::move(controls);
  out["utilities"] = UtilitiesToJson(g.utilities);
  return out;
}

}  // namespace

std::string_view DocumentKindName(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::kQuintupleSet:
      return "quintuple-set";
    case DocumentKind::kPentaformGame:
      return "pentaform-game";
    case DocumentKind::kGmGame:
      return "gm-game";
  }
  return "?";
}

const QuintupleSet& Document::relation() const {
  if (const auto* q = std::get_if<QuintupleSet>(&payload)) return *q;
  if (const auto* game = std::get_if<PentaformGame>(&payload)) {
    return game->relation;
  }
  throw Error(ErrorCode::kInvalidArgument,
              "operation needs a quintuple set, got a gm-game document");
}

Document MakeDocument(QuintupleSet q) {
  return Document{DocumentKind::kQuintupleSet, std::move(q), {}};
}

Document MakeDocument(PentaformGame game) {
  return Document{DocumentKind::kPentaformGame, std::move(game), {}};
}

Document MakeDocument(GmGame game) {
  return Document{DocumentKind::kGmGame, std::move(game), {}};
}

Document ParseDocument(const std::string& bytes) {
  json root = json::parse(bytes, nullptr, false);
  if (root.is_discarded()) {
    throw Error(ErrorCode::kSchemaViolation, "input is not well-formed JSON");
  }
  if (!root.is_object() || !root.contains("kind")) {
    SchemaError("", "expected an object with a \"kind\" key");
  }
  std::string kind = RequireString(root["kind"], "/kind");
  if (!root.contains("version") ||
      RequireString(root["version"], "/version") != "1") {
    SchemaError("/version", "expected format version \"1\"");
  }

  Document doc;
  if (kind == "quintuple-set") {
    RequireKeys(root, "", {"kind", "version", "rows"});
    doc.kind = DocumentKind::kQuintupleSet;
    doc.payload = RowsFromJson(root["rows"], "/rows", &doc.warnings);
  } else if (kind == "pentaform-game") {
    RequireKeys(root, "", {"kind", "version", "rows", "utilities"});
    doc.kind = DocumentKind::kPentaformGame;
    QuintupleSet q = RowsFromJson(root["rows"], "/rows", &doc.warnings);
    UtilityProfile u = UtilitiesFromJson(root["utilities"], "/utilities");
    doc.payload = MakePentaformGame(std::move(q), std::move(u));
  } else if (kind == "gm-game") {
    RequireKeys(root, "",
                {"kind", "version", "nodes", "edges", "information_sets",
                 "labels", "controls", "utilities"});
    doc.kind = DocumentKind::kGmGame;
    doc.payload = GmGameFromJson(root);
  } else {
    SchemaError("/kind", "unknown kind \"" + kind + "\"");
  }
  return doc;
}

std::string SerializeDocument(const Document& doc) {
  ordered_json out;
  out["kind"] = std::string(DocumentKindName(doc.kind));
  out["version"] = "1";
  if (const auto* q = std::get_if<QuintupleSet>(&doc.payload)) {
    out["rows"] = RowsToJson(*q);
  } else if (const auto* game = std::get_if<PentaformGame>(&doc.payload)) {
    out["rows"] = RowsToJson(game->relation);
    out["utilities"] = UtilitiesToJson(game->utilities);
  } else {
    ordered_json gm = GmGameToJson(std::get<GmGame>(doc.payload));
    for (auto& [key, value] : gm.items()) out[key] = std::move(value);
  }
  return out.dump(2) + "\n";
}

Document ReadDocumentFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::kIoError, "cannot open " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return ParseDocument(buffer.str());
}

void WriteDocumentFile(const Document& doc, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw Error(ErrorCode::kIoError, "cannot open " + path + " for writing");
  }
  out << SerializeDocument(doc);
  if (!out) {
    throw Error(ErrorCode::kIoError, "failed writing " + path);
  }
}

Value ParseValueArgument(const std::string& text) {
  json parsed = json::parse(text, nullptr, false);
  if (!parsed.is_discarded()) {
    if (parsed.is_object()) return ValueFromJson(parsed, "");
    if (parsed.is_array()) {
      std::vector<std::string> elements;
      for (std::size_t i = 0; i < parsed.size(); ++i) {
        elements.push_back(RequireString(parsed[i], "/" + std::to_string(i)));
      }
      return Value::NodeSet(std::move(elements));
    }
  }
  return Value::Atom(text);
}

}  // namespace pentaform
