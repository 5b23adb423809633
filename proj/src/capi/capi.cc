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

#include "pentaform/pentaform.h"

#include <cstdlib>
#include <cstring>
#include <string>
#include <utility>

#include "core/analysis.h"
#include "core/axioms.h"
#include "core/dot_export.h"
#include "core/error.h"
#include "core/game.h"
#include "core/json_io.h"
#include "core/reports.h"

struct pf_document {
  pentaform::Document doc;
};

namespace {

using pentaform::Document;
using pentaform::DocumentKind;
using pentaform::Error;
using pentaform::ErrorCode;

thread_local std::string g_last_error;

pf_status StatusOf(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidArgument:
      return PF_ERR_INVALID_ARGUMENT;
    case ErrorCode::kUnknownSituation:
    case ErrorCode::kUnknownNode:
    case ErrorCode::kUnknownSuccessor:
      return PF_ERR_UNKNOWN_KEY;
    case ErrorCode::kNoUniqueRoot:
    case ErrorCode::kInvalidTree:
    case ErrorCode::kAxiomViolation:
      return PF_ERR_AXIOM;
    case ErrorCode::kPreconditionViolation:
    case ErrorCode::kNotASubroot:
    case ErrorCode::kNotSeparated:
    case ErrorCode::kChainOrder:
      return PF_ERR_PRECONDITION;
    case ErrorCode::kSchemaViolation:
      return PF_ERR_SCHEMA;
    case ErrorCode::kIoError:
      return PF_ERR_IO;
  }
  return PF_ERR_INTERNAL;
}

template <typename Fn>
pf_status Guard(Fn&& fn) {
  try {
    fn();
    g_last_error.clear();
    return PF_OK;
  } catch (const Error& e) {
    g_last_error = e.what();
    return StatusOf(e.code());
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PF_ERR_INTERNAL;
  }
}

char* CopyString(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

pf_status RequireArgs(bool ok) {
  if (ok) return PF_OK;
  g_last_error = "null argument";
  return PF_ERR_INVALID_ARGUMENT;
}

}  // namespace

extern "C" {

const char* pf_last_error(void) { return g_last_error.c_str(); }

void pf_string_free(char* s) { std::free(s); }

void pf_document_free(pf_document* doc) { delete doc; }

pf_status pf_document_parse(const char* bytes, pf_document** out) {
  if (RequireArgs(bytes && out) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *out = new pf_document{pentaform::ParseDocument(bytes)};
  });
}

pf_status pf_document_read_file(const char* path, pf_document** out) {
  if (RequireArgs(path && out) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *out = new pf_document{pentaform::ReadDocumentFile(path)};
  });
}

pf_status pf_document_serialize(const pf_document* doc, char** out_json) {
  if (RequireArgs(doc && out_json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *out_json = CopyString(pentaform::SerializeDocument(doc->doc));
  });
}

pf_status pf_document_write_file(const pf_document* doc, const char* path) {
  if (RequireArgs(doc && path) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] { pentaform::WriteDocumentFile(doc->doc, path); });
}

pf_status pf_document_kind_of(const pf_document* doc, pf_document_kind* out) {
  if (RequireArgs(doc && out) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  switch (doc->doc.kind) {
    case DocumentKind::kQuintupleSet:
      *out = PF_DOC_QUINTUPLE_SET;
      break;
    case DocumentKind::kPentaformGame:
      *out = PF_DOC_PENTAFORM_GAME;
      break;
    case DocumentKind::kGmGame:
      *out = PF_DOC_GM_GAME;
      break;
  }
  g_last_error.clear();
  return PF_OK;
}

pf_status pf_document_warnings(const pf_document* doc, char** out_text) {
  if (RequireArgs(doc && out_text) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  std::string text;
  for (const std::string& warning : doc->doc.warnings) {
    if (!text.empty()) text += "\n";
    text += warning;
  }
  *out_text = CopyString(text);
  g_last_error.clear();
  return PF_OK;
}

pf_status pf_validate(const pf_document* doc, char** report_json) {
  if (RequireArgs(doc && report_json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    if (doc->doc.kind == DocumentKind::kGmGame) {
      const auto& game = std::get<pentaform::GmGame>(doc->doc.payload);
      *report_json = CopyString(
          pentaform::GmConditionReportJson(pentaform::CheckGmGame(game))
              .dump(2));
      return;
    }
    *report_json = CopyString(
        pentaform::AxiomReportJson(pentaform::Validate(doc->doc.relation()))
            .dump(2));
  });
}

pf_status pf_info(const pf_document* doc, char** info_json) {
  if (RequireArgs(doc && info_json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *info_json =
        CopyString(pentaform::InfoJson(doc->doc.relation()).dump(2));
  });
}

pf_status pf_slice(const pf_document* doc, const char* situation,
                   pf_document** out) {
  if (RequireArgs(doc && situation && out) != PF_OK) {
    return PF_ERR_INVALID_ARGUMENT;
  }
  return Guard([&] {
    pentaform::Value j = pentaform::ParseValueArgument(situation);
    *out = new pf_document{
        pentaform::MakeDocument(pentaform::SliceOf(doc->doc.relation(), j))};
  });
}

pf_status pf_project(const pf_document* doc, const char* coords,
                     char** relation_json) {
  if (RequireArgs(doc && coords && relation_json) != PF_OK) {
    return PF_ERR_INVALID_ARGUMENT;
  }
  return Guard([&] {
    pentaform::TupleRelation projected = pentaform::Project(
        doc->doc.relation(), pentaform::ParseCoords(coords));
    *relation_json = CopyString(pentaform::ProjectionJson(projected).dump(2));
  });
}

pf_status pf_export_dot(const pf_document* doc, char** dot_text) {
  if (RequireArgs(doc && dot_text) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *dot_text = CopyString(pentaform::ExportDot(doc->doc.relation()));
  });
}

pf_status pf_convert(const pf_document* doc, const char* target,
                     pf_document** out) {
  if (RequireArgs(doc && target && out) != PF_OK) {
    return PF_ERR_INVALID_ARGUMENT;
  }
  return Guard([&] {
    std::string to = target;
    if (to != "gm" && to != "pentaform") {
      throw Error(ErrorCode::kInvalidArgument,
                  "conversion target must be \"gm\" or \"pentaform\"");
    }
    if (doc->doc.kind == DocumentKind::kQuintupleSet) {
      throw Error(ErrorCode::kInvalidArgument,
                  "conversion needs a game document (utilities required)");
    }
    if (to == "gm") {
      if (doc->doc.kind == DocumentKind::kGmGame) {
        throw Error(ErrorCode::kInvalidArgument,
                    "document is already a gm-game");
      }
      const auto& game = std::get<pentaform::PentaformGame>(doc->doc.payload);
      *out = new pf_document{
          pentaform::MakeDocument(pentaform::Standardize(game))};
    } else {
      if (doc->doc.kind == DocumentKind::kPentaformGame) {
        throw Error(ErrorCode::kInvalidArgument,
                    "document is already a pentaform-game");
      }
      const auto& game = std::get<pentaform::GmGame>(doc->doc.payload);
      *out = new pf_document{
          pentaform::MakeDocument(pentaform::PentaformOf(game))};
    }
  });
}

pf_status pf_roundtrip(const pf_document* doc, char** report_json) {
  if (RequireArgs(doc && report_json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    if (doc->doc.kind == DocumentKind::kGmGame) {
      const auto& game = std::get<pentaform::GmGame>(doc->doc.payload);
      *report_json = CopyString(pentaform::GmRoundtripJson(game).dump(2));
    } else if (doc->doc.kind == DocumentKind::kPentaformGame) {
      const auto& game = std::get<pentaform::PentaformGame>(doc->doc.payload);
      *report_json =
          CopyString(pentaform::PentaformRoundtripJson(game).dump(2));
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "round trips need a game document");
    }
  });
}

pf_status pf_subroots(const pf_document* doc, char** json) {
  if (RequireArgs(doc && json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *json = CopyString(pentaform::SubrootsJson(doc->doc.relation()).dump(2));
  });
}

pf_status pf_subgame(const pf_document* doc, const char* node,
                     pf_document** out) {
  if (RequireArgs(doc && node && out) != PF_OK) {
    return PF_ERR_INVALID_ARGUMENT;
  }
  return Guard([&] {
    *out = new pf_document{pentaform::MakeDocument(pentaform::Subgame(
        doc->doc.relation(), pentaform::Value::Atom(node)))};
  });
}

pf_status pf_union(const pf_document* const* docs, size_t count,
                   const char* mode, pf_document** out, char** summary_json) {
  if (RequireArgs(docs && mode && out && summary_json && count > 0) !=
      PF_OK) {
    return PF_ERR_INVALID_ARGUMENT;
  }
  return Guard([&] {
    std::vector<pentaform::QuintupleSet> relations;
    relations.reserve(count);
    for (size_t i = 0; i < count; ++i) {
      if (docs[i] == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "null document in union");
      }
      relations.push_back(docs[i]->doc.relation());
    }
    std::string m = mode;
    if (m == "pair") {
      if (count != 2) {
        throw Error(ErrorCode::kInvalidArgument,
                    "pair mode needs exactly two documents");
      }
      pentaform::BlockUnion result =
          pentaform::UnionPair(relations[0], relations[1]);
      *summary_json = CopyString(pentaform::BlockUnionJson(result).dump(2));
      *out = new pf_document{pentaform::MakeDocument(result.relation)};
    } else if (m == "family") {
      pentaform::BlockUnion result = pentaform::UnionFamily(relations);
      *summary_json = CopyString(pentaform::BlockUnionJson(result).dump(2));
      *out = new pf_document{pentaform::MakeDocument(result.relation)};
    } else if (m == "chain") {
      pentaform::QuintupleSet result = pentaform::UnionChain(relations);
      nlohmann::ordered_json summary;
      summary["kind"] = "union-summary";
      summary["root"] = pentaform::ValueJson(pentaform::RootOf(result));
      *summary_json = CopyString(summary.dump(2));
      *out = new pf_document{pentaform::MakeDocument(result)};
    } else {
      throw Error(ErrorCode::kInvalidArgument,
                  "union mode must be pair, family, or chain");
    }
  });
}

pf_status pf_recall(const pf_document* doc, char** report_json) {
  if (RequireArgs(doc && report_json) != PF_OK) return PF_ERR_INVALID_ARGUMENT;
  return Guard([&] {
    *report_json =
        CopyString(pentaform::RecallJson(doc->doc.relation()).dump(2));
  });
}

}  // extern "C"
