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

#ifndef PENTAFORM_CORE_REPORTS_H_
#define PENTAFORM_CORE_REPORTS_H_

#include "core/analysis.h"
#include "core/axioms.h"
#include "core/game.h"
#include "core/json_io.h"
#include "json.hpp"

namespace pentaform {

// JSON report builders shared by the C API and the CLI's --json output.

nlohmann::ordered_json ValueJson(const Value& v);
nlohmann::ordered_json QuintupleJson(const Quintuple& row);

nlohmann::ordered_json AxiomReportJson(const AxiomReport& report);
nlohmann::ordered_json GmConditionReportJson(
    const std::vector<GmViolation>& violations);
nlohmann::ordered_json InfoJson(const QuintupleSet& q);
nlohmann::ordered_json ProjectionJson(const TupleRelation& relation);
nlohmann::ordered_json GmRoundtripJson(const GmGame& g);
nlohmann::ordered_json PentaformRoundtripJson(const PentaformGame& game);
nlohmann::ordered_json SubrootsJson(const QuintupleSet& q);
nlohmann::ordered_json RecallJson(const QuintupleSet& q);
nlohmann::ordered_json BlockUnionJson(const BlockUnion& result);

}  // namespace pentaform

#endif  // PENTAFORM_CORE_REPORTS_H_
