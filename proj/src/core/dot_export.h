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

#ifndef PENTAFORM_CORE_DOT_EXPORT_H_
#define PENTAFORM_CORE_DOT_EXPORT_H_

#include <string>

#include "core/relation.h"

namespace pentaform {

// Graphviz rendering of the relation's tree: one graph node per node, one
// edge per row labeled with its action, decision nodes annotated with their
// player and situation, and a dashed cluster around each multi-node
// information set. Requires the three tree axioms (same as OutTreeOf);
// throws kAxiomViolation otherwise.
std::string ExportDot(const QuintupleSet& q);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_DOT_EXPORT_H_
