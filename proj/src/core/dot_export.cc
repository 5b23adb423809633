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

#include "core/dot_export.h"

#include <map>
#include <set>
#include <sstream>

#include "core/tree.h"
#include "core/value.h"

namespace pentaform {

namespace {

std::string Escape(const std::string& raw) {
  std::string out;
  for (char c : raw) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string Quote(const std::string& raw) {
  return "\"" + Escape(raw) + "\"";
}

std::string NodeStatement(const Value& node, const QuintupleSet& q) {
  // Decision nodes show who moves there and in which situation. The label
  // pieces are escaped individually so the line-break stays a DOT escape.
  for (const Quintuple& row : q.rows()) {
    if (row.decision_node == node) {
      return Quote(node.atom()) + " [label=\"" + Escape(node.atom()) +
             "\\n" + Escape(row.player.ToString() + " | " +
                            row.situation.ToString()) +
             "\"];";
    }
  }
  return Quote(node.atom()) + " [label=" + Quote(node.atom()) + "];";
}

}  // namespace

std::string ExportDot(const QuintupleSet& q) {
  OutTreeOf(q);  // enforces the tree axioms

  // Multi-node information sets become dashed clusters.
  std::map<Value, ValueSet> info_sets;
  for (const Quintuple& row : q.rows()) {
    info_sets[row.situation].insert(row.decision_node);
  }

  std::ostringstream out;
  out << "digraph pentaform {\n";
  out << "  rankdir=TB;\n";

  std::set<Value> clustered;
  int cluster_index = 0;
  for (const auto& [situation, members] : info_sets) {
    if (members.size() < 2) continue;
    out << "  subgraph cluster_" << cluster_index++ << " {\n";
    out << "    style=dashed;\n";
    out << "    label=" << Quote(situation.ToString()) << ";\n";
    for (const Value& node : members) {
      out << "    " << NodeStatement(node, q) << "\n";
      clustered.insert(node);
    }
    out << "  }\n";
  }
  for (const Value& node : NodesOf(q)) {
    if (clustered.count(node)) continue;
    out << "  " << NodeStatement(node, q) << "\n";
  }
  for (const Quintuple& row : q.rows()) {
    out << "  " << Quote(row.decision_node.atom()) << " -> "
        << Quote(row.successor.atom())
        << " [label=" << Quote(row.action.atom()) << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace pentaform
