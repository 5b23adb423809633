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

#ifndef PENTAFORM_CORE_JSON_IO_H_
#define PENTAFORM_CORE_JSON_IO_H_

#include <string>
#include <variant>
#include <vector>

#include "core/game.h"
#include "core/relation.h"

namespace pentaform {

enum class DocumentKind { kQuintupleSet, kPentaformGame, kGmGame };

std::string_view DocumentKindName(DocumentKind kind);

// A parsed file: a bare relation or one of the two game forms, all
// versioned "1". Serialization is canonical - rows, sets, and profiles are
// emitted sorted, so equal structures produce identical bytes and
// parse(serialize(d)) == d.
struct Document {
  DocumentKind kind = DocumentKind::kQuintupleSet;
  std::variant<QuintupleSet, PentaformGame, GmGame> payload;
  std::vector<std::string> warnings;  // e.g. duplicate rows dropped

  // The relation for relation-level operations; gm-game documents have
  // none and throw kInvalidArgument.
  const QuintupleSet& relation() const;
};

Document MakeDocument(QuintupleSet q);
Document MakeDocument(PentaformGame game);
Document MakeDocument(GmGame game);

// Throws kSchemaViolation with a JSON path on malformed input, and the
// relevant semantic error when a game document's structure fails its
// validity requirements (games are validated on construction).
Document ParseDocument(const std::string& bytes);
std::string SerializeDocument(const Document& doc);

Document ReadDocumentFile(const std::string& path);    // kIoError on failure
void WriteDocumentFile(const Document& doc, const std::string& path);

// Single values, for CLI arguments: {"atom": ...}, {"set": [...]}, a bare
// JSON array of atoms, or any other text taken verbatim as an atom.
Value ParseValueArgument(const std::string& text);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_JSON_IO_H_
