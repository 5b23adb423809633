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

// Command-line front end. Talks to the library exclusively through the C
// API; all structured results arrive as JSON and are re-rendered here.
//
// Exit codes: 0 success, 1 semantic failure (a validation or check did not
// hold), 2 usage or I/O error.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pentaform/pentaform.h"

namespace {

using nlohmann::json;

constexpr int kOk = 0;
constexpr int kSemanticFailure = 1;
constexpr int kUsageError = 2;

struct DocHandle {
  pf_document* ptr = nullptr;
  ~DocHandle() { pf_document_free(ptr); }
};

struct StrHandle {
  char* ptr = nullptr;
  ~StrHandle() { pf_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? "" : ptr; }
};

int ExitFor(pf_status status) {
  switch (status) {
    case PF_OK:
      return kOk;
    case PF_ERR_UNKNOWN_KEY:
    case PF_ERR_AXIOM:
    case PF_ERR_PRECONDITION:
      return kSemanticFailure;
    default:
      return kUsageError;
  }
}

int Fail(pf_status status) {
  std::cerr << "error: " << pf_last_error() << "\n";
  return ExitFor(status);
}

int LoadDocument(const std::string& path, DocHandle* doc) {
  pf_status status = pf_document_read_file(path.c_str(), &doc->ptr);
  if (status != PF_OK) return Fail(status);
  StrHandle warnings;
  pf_document_warnings(doc->ptr, &warnings.ptr);
  if (!warnings.str().empty()) {
    std::cerr << "warning: " << warnings.str() << "\n";
  }
  return kOk;
}

std::string ShowValue(const json& v) {
  if (v.is_null()) return "none";
  if (v.contains("atom")) return v["atom"].get<std::string>();
  std::string out = "{";
  bool first = true;
  for (const auto& e : v["set"]) {
    if (!first) out += ",";
    out += e.get<std::string>();
    first = false;
  }
  return out + "}";
}

std::string ShowValues(const json& arr) {
  std::string out = "{";
  bool first = true;
  for (const auto& v : arr) {
    if (!first) out += ", ";
    out += ShowValue(v);
    first = false;
  }
  return out + "}";
}

int WriteOutput(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    return kOk;
  }
  std::ofstream out(out_path, std::ios::binary);
  out << text;
  if (!out) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kUsageError;
  }
  return kOk;
}

int EmitDocument(pf_document* doc, const std::string& out_path) {
  StrHandle text;
  pf_status status = pf_document_serialize(doc, &text.ptr);
  if (status != PF_OK) return Fail(status);
  return WriteOutput(text.str(), out_path);
}

int CmdValidate(const std::string& file, bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle report_text;
  pf_status status = pf_validate(doc.ptr, &report_text.ptr);
  if (status != PF_OK) return Fail(status);
  json report = json::parse(report_text.str());
  if (as_json) {
    std::cout << report_text.str() << "\n";
  } else if (report["kind"] == "condition-report") {
    for (const auto& v : report["violations"]) {
      std::cout << v["condition"].get<std::string>() << ": "
                << v["message"].get<std::string>() << "\n";
    }
    std::cout << "valid: " << (report["valid"].get<bool>() ? "yes" : "no")
              << "\n";
  } else {
    for (const auto& entry : report["axioms"]) {
      std::string name = entry["axiom"].get<std::string>();
      std::string line = name + std::string(26 - std::min<size_t>(26, name.size()), ' ');
      if (entry["status"] == "pass") {
        line += "pass";
      } else {
        line += "FAIL  " + entry["message"].get<std::string>();
      }
      std::cout << line << "\n";
    }
    std::cout << "pentaform: "
              << (report["is_pentaform"].get<bool>() ? "yes" : "no") << "\n";
    std::cout << "block: " << (report["is_block"].get<bool>() ? "yes" : "no")
              << "\n";
  }
  bool ok = report["kind"] == "condition-report"
                ? report["valid"].get<bool>()
                : report["is_pentaform"].get<bool>();
  return ok ? kOk : kSemanticFailure;
}

int CmdInfo(const std::string& file, bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle info_text;
  pf_status status = pf_info(doc.ptr, &info_text.ptr);
  if (status != PF_OK) return Fail(status);
  if (as_json) {
    std::cout << info_text.str() << "\n";
    return kOk;
  }
  json info = json::parse(info_text.str());
  std::cout << "rows: " << info["row_count"].get<size_t>() << "\n";
  std::cout << "players (I): " << ShowValues(info["players"]) << "\n";
  std::cout << "situations (J): " << ShowValues(info["situations"]) << "\n";
  std::cout << "decision nodes (W): " << ShowValues(info["decision_nodes"])
            << "\n";
  std::cout << "actions (A): " << ShowValues(info["actions"]) << "\n";
  std::cout << "successor nodes (Y): " << ShowValues(info["successor_nodes"])
            << "\n";
  std::cout << "root: " << ShowValue(info["root"]) << "\n";
  std::cout << "start nodes: " << ShowValues(info["start_nodes"]) << "\n";
  std::cout << "end nodes: " << ShowValues(info["end_nodes"]) << "\n";
  std::cout << "information sets:\n";
  for (const auto& entry : info["information_sets"]) {
    std::cout << "  " << ShowValue(entry["situation"]) << ": nodes "
              << ShowValues(entry["nodes"]) << ", actions "
              << ShowValues(entry["actions"]) << "\n";
  }
  std::cout << "feasibility:\n";
  for (const auto& entry : info["feasibility"]) {
    std::cout << "  " << ShowValue(entry["node"]) << ": "
              << ShowValues(entry["actions"]) << "\n";
  }
  return kOk;
}

int CmdSlice(const std::string& file, const std::string& situation,
             const std::string& out_path) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  DocHandle result;
  pf_status status = pf_slice(doc.ptr, situation.c_str(), &result.ptr);
  if (status != PF_OK) return Fail(status);
  return EmitDocument(result.ptr, out_path);
}

int CmdProject(const std::string& file, const std::string& coords,
               bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle text;
  pf_status status = pf_project(doc.ptr, coords.c_str(), &text.ptr);
  if (status != PF_OK) return Fail(status);
  if (as_json) {
    std::cout << text.str() << "\n";
    return kOk;
  }
  json projection = json::parse(text.str());
  std::cout << "coords: " << projection["coords"].get<std::string>() << "\n";
  for (const auto& tuple : projection["tuples"]) {
    std::string line;
    for (const auto& v : tuple) {
      if (!line.empty()) line += ", ";
      line += ShowValue(v);
    }
    std::cout << "(" << line << ")\n";
  }
  return kOk;
}

int CmdTree(const std::string& file, const std::string& dot_path,
            bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle text;
  pf_status status = pf_export_dot(doc.ptr, &text.ptr);
  if (status != PF_OK) return Fail(status);
  if (as_json) {
    json out;
    out["dot"] = text.str();
    return WriteOutput(out.dump(2) + "\n", dot_path);
  }
  return WriteOutput(text.str(), dot_path);
}

int CmdConvert(const std::string& file, const std::string& target,
               const std::string& out_path) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  DocHandle result;
  pf_status status = pf_convert(doc.ptr, target.c_str(), &result.ptr);
  if (status != PF_OK) return Fail(status);
  return EmitDocument(result.ptr, out_path);
}

int CmdRoundtrip(const std::string& file, bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle text;
  pf_status status = pf_roundtrip(doc.ptr, &text.ptr);
  if (status != PF_OK) return Fail(status);
  json report = json::parse(text.str());
  bool ok = report["identity"].get<bool>();
  if (report.contains("all_equalities_hold")) {
    ok = ok && report["all_equalities_hold"].get<bool>();
  }
  if (as_json) {
    std::cout << text.str() << "\n";
    return ok ? kOk : kSemanticFailure;
  }
  std::cout << "direction: " << report["direction"].get<std::string>()
            << "\n";
  if (report.contains("equalities")) {
    for (const auto& entry : report["equalities"]) {
      std::cout << "  " << entry["name"].get<std::string>() << ": "
                << (entry["holds"].get<bool>() ? "ok" : "MISMATCH") << "\n";
    }
  }
  if (report.contains("rewritten") && report["rewritten"].get<bool>()) {
    std::cout << "rewritten: " << report["detail"].get<std::string>() << "\n";
  }
  std::cout << "identity: " << (report["identity"].get<bool>() ? "yes" : "no")
            << "\n";
  return ok ? kOk : kSemanticFailure;
}

int CmdSubroots(const std::string& file, bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle text;
  pf_status status = pf_subroots(doc.ptr, &text.ptr);
  if (status != PF_OK) return Fail(status);
  if (as_json) {
    std::cout << text.str() << "\n";
    return kOk;
  }
  json report = json::parse(text.str());
  std::cout << "subroots: " << ShowValues(report["subroots"]) << "\n";
  return kOk;
}

int CmdSubgame(const std::string& file, const std::string& node,
               const std::string& out_path) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  DocHandle result;
  pf_status status = pf_subgame(doc.ptr, node.c_str(), &result.ptr);
  if (status != PF_OK) return Fail(status);
  return EmitDocument(result.ptr, out_path);
}

int CmdUnion(const std::vector<std::string>& files, const std::string& mode,
             const std::string& out_path, bool as_json) {
  std::vector<DocHandle> docs(files.size());
  std::vector<const pf_document*> raw;
  for (size_t i = 0; i < files.size(); ++i) {
    if (int rc = LoadDocument(files[i], &docs[i]); rc != kOk) return rc;
    raw.push_back(docs[i].ptr);
  }
  DocHandle result;
  StrHandle summary;
  pf_status status = pf_union(raw.data(), raw.size(), mode.c_str(),
                              &result.ptr, &summary.ptr);
  if (status != PF_OK) return Fail(status);
  if (as_json) {
    StrHandle text;
    if (pf_status s = pf_document_serialize(result.ptr, &text.ptr);
        s != PF_OK) {
      return Fail(s);
    }
    json out;
    out["summary"] = json::parse(summary.str());
    out["document"] = json::parse(text.str());
    return WriteOutput(out.dump(2) + "\n", out_path);
  }
  json report = json::parse(summary.str());
  if (report.contains("root")) {
    std::cerr << "root: " << ShowValue(report["root"]) << "\n";
  } else {
    std::cerr << "start nodes: " << ShowValues(report["start_nodes"]) << "\n";
    std::cerr << "end nodes: " << ShowValues(report["end_nodes"]) << "\n";
  }
  return EmitDocument(result.ptr, out_path);
}

int CmdRecall(const std::string& file, bool as_json) {
  DocHandle doc;
  if (int rc = LoadDocument(file, &doc); rc != kOk) return rc;
  StrHandle text;
  pf_status status = pf_recall(doc.ptr, &text.ptr);
  if (status != PF_OK) return Fail(status);
  json report = json::parse(text.str());
  bool recall_ok = report["perfect_recall"]["ok"].get<bool>();
  bool attentive_ok = report["no_absentmindedness"]["ok"].get<bool>();
  if (as_json) {
    std::cout << text.str() << "\n";
    return recall_ok && attentive_ok ? kOk : kSemanticFailure;
  }
  auto show = [](const json& check) {
    if (check["ok"].get<bool>()) return std::string("ok");
    const json& w = check["witness"];
    std::string out = "FAIL  witness (" + ShowValue(w["first"]) + ", " +
                      ShowValue(w["second"]);
    if (w.contains("third")) out += ", " + ShowValue(w["third"]);
    return out + ")";
  };
  std::cout << "perfect recall: " << show(report["perfect_recall"]) << "\n";
  std::cout << "no absentmindedness: "
            << show(report["no_absentmindedness"]) << "\n";
  return recall_ok && attentive_ok ? kOk : kSemanticFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"pentaform: validate, analyze, and convert extensive-form "
               "games encoded as 5-ary relations"};
  app.require_subcommand(1);

  std::string file;
  std::string situation;
  std::string coords;
  std::string dot_path;
  std::string target;
  std::string node;
  std::string mode = "pair";
  std::string out_path;
  std::vector<std::string> files;
  bool as_json = false;

  auto add_json = [&as_json](CLI::App* cmd) {
    cmd->add_flag("--json", as_json, "machine-readable JSON output");
  };

  CLI::App* validate = app.add_subcommand(
      "validate", "check the eight axioms; exit 0 iff a pentaform");
  validate->add_option("file", file)->required();
  add_json(validate);

  CLI::App* info = app.add_subcommand(
      "info", "components, root, information sets, feasibility");
  info->add_option("file", file)->required();
  add_json(info);

  CLI::App* slice = app.add_subcommand("slice", "rows of one situation");
  slice->add_option("file", file)->required();
  slice->add_option("--situation", situation, "atom, or JSON set for "
                                              "node-set situations")
      ->required();
  slice->add_option("--out", out_path, "output file (default stdout)");
  add_json(slice);

  CLI::App* project =
      app.add_subcommand("project", "projection onto coordinates");
  project->add_option("file", file)->required();
  project->add_option("--coords", coords, "letters from I, J, W, A, Y")
      ->required();
  add_json(project);

  CLI::App* tree = app.add_subcommand("tree", "Graphviz export of the tree");
  tree->add_option("file", file)->required();
  tree->add_option("--dot", dot_path, "output file (default stdout)");
  add_json(tree);

  CLI::App* convert = app.add_subcommand(
      "convert", "convert between the game forms");
  convert->add_option("file", file)->required();
  convert->add_option("--to", target, "gm or pentaform")->required();
  convert->add_option("--out", out_path, "output file (default stdout)");
  add_json(convert);

  CLI::App* roundtrip = app.add_subcommand(
      "roundtrip", "convert there and back; exit 0 iff identity");
  roundtrip->add_option("file", file)->required();
  add_json(roundtrip);

  CLI::App* subroots = app.add_subcommand("subroots", "subgame roots");
  subroots->add_option("file", file)->required();
  add_json(subroots);

  CLI::App* subgame =
      app.add_subcommand("subgame", "extract the subgame at a subroot");
  subgame->add_option("file", file)->required();
  subgame->add_option("--at", node, "decision node")->required();
  subgame->add_option("--out", out_path, "output file (default stdout)");
  add_json(subgame);

  CLI::App* union_cmd = app.add_subcommand("union", "compose relations");
  union_cmd->add_option("files", files)->required()->expected(-1);
  union_cmd->add_option("--mode", mode, "pair, family, or chain")
      ->check(CLI::IsMember({"pair", "family", "chain"}));
  union_cmd->add_option("--out", out_path, "output file (default stdout)");
  add_json(union_cmd);

  CLI::App* recall = app.add_subcommand(
      "recall", "perfect recall and absentmindedness checks");
  recall->add_option("file", file)->required();
  add_json(recall);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsageError;
  }

  if (validate->parsed()) return CmdValidate(file, as_json);
  if (info->parsed()) return CmdInfo(file, as_json);
  if (slice->parsed()) return CmdSlice(file, situation, out_path);
  if (project->parsed()) return CmdProject(file, coords, as_json);
  if (tree->parsed()) return CmdTree(file, dot_path, as_json);
  if (convert->parsed()) return CmdConvert(file, target, out_path);
  if (roundtrip->parsed()) return CmdRoundtrip(file, as_json);
  if (subroots->parsed()) return CmdSubroots(file, as_json);
  if (subgame->parsed()) return CmdSubgame(file, node, out_path);
  if (union_cmd->parsed()) return CmdUnion(files, mode, out_path, as_json);
  if (recall->parsed()) return CmdRecall(file, as_json);
  return kUsageError;
}
