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

// Exercises the exported C surface end to end: parsing, serialization,
// reports, conversions, and the error-code contract. Links only the shared
// library.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <string>

#include "json.hpp"
#include "pentaform/pentaform.h"

namespace {

using nlohmann::json;

std::string Fixture(const std::string& name) {
  return std::string(PENTAFORM_FIXTURE_DIR) + "/" + name;
}

struct Doc {
  pf_document* ptr = nullptr;
  ~Doc() { pf_document_free(ptr); }
};

struct Str {
  char* ptr = nullptr;
  ~Str() { pf_string_free(ptr); }
  std::string str() const { return ptr == nullptr ? "" : ptr; }
};

Doc Load(const std::string& name) {
  Doc doc;
  REQUIRE(pf_document_read_file(Fixture(name).c_str(), &doc.ptr) == PF_OK);
  return doc;
}

TEST_CASE("documents read, serialize, and report their kind") {
  Doc doc = Load("homework_named.json");
  pf_document_kind kind;
  REQUIRE(pf_document_kind_of(doc.ptr, &kind) == PF_OK);
  CHECK(kind == PF_DOC_QUINTUPLE_SET);

  Str text;
  REQUIRE(pf_document_serialize(doc.ptr, &text.ptr) == PF_OK);
  Doc reparsed;
  REQUIRE(pf_document_parse(text.ptr, &reparsed.ptr) == PF_OK);
  Str again;
  REQUIRE(pf_document_serialize(reparsed.ptr, &again.ptr) == PF_OK);
  CHECK(text.str() == again.str());

  Doc game = Load("homework_game.json");
  REQUIRE(pf_document_kind_of(game.ptr, &kind) == PF_OK);
  CHECK(kind == PF_DOC_PENTAFORM_GAME);
  Doc gm = Load("alex_gm.json");
  REQUIRE(pf_document_kind_of(gm.ptr, &kind) == PF_OK);
  CHECK(kind == PF_DOC_GM_GAME);
}

TEST_CASE("missing files and malformed bytes map to their status codes") {
  Doc doc;
  CHECK(pf_document_read_file(Fixture("nope.json").c_str(), &doc.ptr) ==
        PF_ERR_IO);
  CHECK(std::string(pf_last_error()).find("nope") != std::string::npos);
  CHECK(pf_document_parse("{]", &doc.ptr) == PF_ERR_SCHEMA);
  CHECK(pf_document_parse(nullptr, &doc.ptr) == PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("validation reports") {
  Doc good = Load("homework.json");
  Str report;
  REQUIRE(pf_validate(good.ptr, &report.ptr) == PF_OK);
  json parsed = json::parse(report.str());
  CHECK(parsed["is_pentaform"] == true);
  CHECK(parsed["axioms"].size() == 8);

  Doc bad = Load("two_start.json");
  Str bad_report;
  REQUIRE(pf_validate(bad.ptr, &bad_report.ptr) == PF_OK);
  json bad_parsed = json::parse(bad_report.str());
  CHECK(bad_parsed["is_pentaform"] == false);
  CHECK(bad_parsed["is_block"] == true);
  int failed = 0;
  for (const auto& entry : bad_parsed["axioms"]) {
    if (entry["status"] == "fail") {
      ++failed;
      CHECK(entry["axiom"] == "unique-root");
    }
  }
  CHECK(failed == 1);

  Doc gm = Load("homework_gm.json");
  Str gm_report;
  REQUIRE(pf_validate(gm.ptr, &gm_report.ptr) == PF_OK);
  CHECK(json::parse(gm_report.str())["valid"] == true);
}

TEST_CASE("info, slice, and project") {
  Doc doc = Load("homework_named.json");
  Str info;
  REQUIRE(pf_info(doc.ptr, &info.ptr) == PF_OK);
  json parsed = json::parse(info.str());
  CHECK(parsed["root"]["atom"] == "0");
  CHECK(parsed["players"].size() == 3);

  Doc slice;
  REQUIRE(pf_slice(doc.ptr, "tomorrow", &slice.ptr) == PF_OK);
  Str slice_text;
  REQUIRE(pf_document_serialize(slice.ptr, &slice_text.ptr) == PF_OK);
  CHECK(json::parse(slice_text.str())["rows"].size() == 4);

  Str projection;
  REQUIRE(pf_project(doc.ptr, "JI", &projection.ptr) == PF_OK);
  json tuples = json::parse(projection.str())["tuples"];
  CHECK(tuples.size() == 3);

  Str bad;
  CHECK(pf_project(doc.ptr, "JJ", &bad.ptr) == PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("set-valued situations pass through the C string argument") {
  Doc doc = Load("homework.json");
  Doc slice;
  REQUIRE(pf_slice(doc.ptr, R"({"set": ["2", "3"]})", &slice.ptr) == PF_OK);
  Str text;
  REQUIRE(pf_document_serialize(slice.ptr, &text.ptr) == PF_OK);
  CHECK(json::parse(text.str())["rows"].size() == 4);
}

TEST_CASE("graph export") {
  Doc doc = Load("alex.json");
  Str dot;
  REQUIRE(pf_export_dot(doc.ptr, &dot.ptr) == PF_OK);
  CHECK(dot.str().find("digraph") == 0);

  Doc bad = Load("two_start.json");
  Str none;
  CHECK(pf_export_dot(bad.ptr, &none.ptr) == PF_ERR_AXIOM);
}

TEST_CASE("conversion and round trips") {
  Doc gm = Load("alex_gm.json");
  Doc game;
  REQUIRE(pf_convert(gm.ptr, "pentaform", &game.ptr) == PF_OK);
  Str game_text;
  REQUIRE(pf_document_serialize(game.ptr, &game_text.ptr) == PF_OK);
  CHECK(json::parse(game_text.str())["kind"] == "pentaform-game");

  Doc back;
  REQUIRE(pf_convert(game.ptr, "gm", &back.ptr) == PF_OK);
  Str back_text;
  Str gm_text;
  REQUIRE(pf_document_serialize(back.ptr, &back_text.ptr) == PF_OK);
  REQUIRE(pf_document_serialize(gm.ptr, &gm_text.ptr) == PF_OK);
  CHECK(back_text.str() == gm_text.str());

  Doc wrong;
  CHECK(pf_convert(gm.ptr, "gm", &wrong.ptr) == PF_ERR_INVALID_ARGUMENT);
  Doc relation = Load("alex.json");
  CHECK(pf_convert(relation.ptr, "gm", &wrong.ptr) ==
        PF_ERR_INVALID_ARGUMENT);

  Str report;
  REQUIRE(pf_roundtrip(gm.ptr, &report.ptr) == PF_OK);
  json parsed = json::parse(report.str());
  CHECK(parsed["identity"] == true);
  CHECK(parsed["equalities"].size() == 16);
  CHECK(parsed["all_equalities_hold"] == true);

  Doc named_game = Load("homework_named_game.json");
  Str named_report;
  REQUIRE(pf_roundtrip(named_game.ptr, &named_report.ptr) == PF_OK);
  json named_parsed = json::parse(named_report.str());
  CHECK(named_parsed["identity"] == false);
  CHECK(named_parsed["rewritten"] == true);
}

TEST_CASE("subroots and subgames") {
  Doc doc = Load("homework_named.json");
  Str subroots;
  REQUIRE(pf_subroots(doc.ptr, &subroots.ptr) == PF_OK);
  json parsed = json::parse(subroots.str());
  CHECK(parsed["subroots"].size() == 1);
  CHECK(parsed["subroots"][0]["atom"] == "0");

  Doc whole;
  REQUIRE(pf_subgame(doc.ptr, "0", &whole.ptr) == PF_OK);
  Doc rejected;
  CHECK(pf_subgame(doc.ptr, "2", &rejected.ptr) == PF_ERR_PRECONDITION);
  CHECK(pf_subgame(doc.ptr, "99", &rejected.ptr) == PF_ERR_UNKNOWN_KEY);
}

TEST_CASE("unions in all three modes") {
  Doc base = Load("homework_named.json");
  Doc guilty = Load("verdict_guilty.json");
  Doc innocent = Load("verdict_innocent.json");

  const pf_document* layer_docs[] = {guilty.ptr, innocent.ptr};
  Doc layer;
  Str layer_summary;
  REQUIRE(pf_union(layer_docs, 2, "family", &layer.ptr,
                   &layer_summary.ptr) == PF_OK);
  json layer_parsed = json::parse(layer_summary.str());
  CHECK(layer_parsed["start_nodes"].size() == 4);
  CHECK(layer_parsed["end_nodes"].size() == 8);
  CHECK(layer_parsed["is_pentaform"] == false);

  const pf_document* pair_docs[] = {base.ptr, layer.ptr};
  Doc full;
  Str full_summary;
  REQUIRE(pf_union(pair_docs, 2, "pair", &full.ptr, &full_summary.ptr) ==
          PF_OK);
  json full_parsed = json::parse(full_summary.str());
  CHECK(full_parsed["start_nodes"].size() == 1);
  CHECK(full_parsed["is_pentaform"] == true);

  const pf_document* chain_docs[] = {base.ptr, full.ptr};
  Doc chained;
  Str chain_summary;
  REQUIRE(pf_union(chain_docs, 2, "chain", &chained.ptr,
                   &chain_summary.ptr) == PF_OK);
  CHECK(json::parse(chain_summary.str())["root"]["atom"] == "0");

  const pf_document* clash_docs[] = {base.ptr, guilty.ptr};
  Doc none;
  Str none_summary;
  CHECK(pf_union(clash_docs, 2, "family", &none.ptr, &none_summary.ptr) ==
        PF_ERR_PRECONDITION);
  CHECK(pf_union(clash_docs, 2, "sideways", &none.ptr, &none_summary.ptr) ==
        PF_ERR_INVALID_ARGUMENT);
}

TEST_CASE("recall reports") {
  Doc merged = Load("kid_teacher.json");
  Str report;
  REQUIRE(pf_recall(merged.ptr, &report.ptr) == PF_OK);
  json parsed = json::parse(report.str());
  CHECK(parsed["perfect_recall"]["ok"] == false);
  CHECK(parsed["perfect_recall"]["witness"]["first"]["atom"] == "2");
  CHECK(parsed["perfect_recall"]["witness"]["second"]["atom"] == "4");
  CHECK(parsed["perfect_recall"]["witness"]["third"]["atom"] == "6");
  CHECK(parsed["no_absentmindedness"]["ok"] == true);

  Doc named = Load("homework_named.json");
  Str ok_report;
  REQUIRE(pf_recall(named.ptr, &ok_report.ptr) == PF_OK);
  json ok_parsed = json::parse(ok_report.str());
  CHECK(ok_parsed["perfect_recall"]["ok"] == true);
  CHECK(ok_parsed["no_absentmindedness"]["ok"] == true);
}

TEST_CASE("warnings surface through the C API") {
  const char* doubled = R"({
    "kind": "quintuple-set", "version": "1",
    "rows": [
      {"i": {"atom": "x"}, "j": {"atom": "j"}, "w": {"atom": "0"},
       "a": {"atom": "a"}, "y": {"atom": "1"}},
      {"i": {"atom": "x"}, "j": {"atom": "j"}, "w": {"atom": "0"},
       "a": {"atom": "a"}, "y": {"atom": "1"}}
    ]
  })";
  Doc doc;
  REQUIRE(pf_document_parse(doubled, &doc.ptr) == PF_OK);
  Str warnings;
  REQUIRE(pf_document_warnings(doc.ptr, &warnings.ptr) == PF_OK);
  CHECK(warnings.str().find("duplicate") != std::string::npos);
}

}  // namespace
