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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <tuple>

#include "core/analysis.h"
#include "core/axioms.h"
#include "core/error.h"
#include "fixtures.h"
#include "oracles.h"

namespace pentaform {
namespace {

using testing::A;
using testing::AlexRelation;
using testing::GuiltyBlock;
using testing::HomeworkNamedRelation;
using testing::InnocentBlock;
using testing::KidTeacherRelation;
using testing::OracleAbsentmindedPairs;
using testing::OracleIsSubroot;
using testing::OracleRecallViolations;
using testing::OracleSliceUnionEquals;
using testing::OracleSubroots;
using testing::OracleWeaklyAfter;
using testing::Row;

QuintupleSet ChainRelation() {
  return QuintupleSet({Row("i", "j1", "0", "a", "1"),
                       Row("i", "j2", "1", "a", "2")});
}

QuintupleSet ThreeLayerRelation() {
  return HomeworkNamedRelation().Union(GuiltyBlock()).Union(InnocentBlock());
}

TEST_CASE("weakly-after rows of the root are the whole relation") {
  QuintupleSet named = HomeworkNamedRelation();
  CHECK(WeaklyAfter(named, A("0")) == named);
}

TEST_CASE("weakly-after rows agree with the reachability oracle") {
  QuintupleSet named = HomeworkNamedRelation();
  ValueSet decision_nodes = Components(named).decision_nodes;
  for (const Value& w : decision_nodes) {
    CHECK(WeaklyAfter(named, w) == OracleWeaklyAfter(named, w));
  }
  QuintupleSet after_one = WeaklyAfter(named, A("1"));
  QuintupleSet expected({Row("Dog", "tonight", "1", "g", "8"),
                         Row("Dog", "tonight", "1", "d", "3"),
                         Row("Teacher", "tomorrow", "3", "e", "6"),
                         Row("Teacher", "tomorrow", "3", "f", "7")});
  CHECK(after_one == expected);
  QuintupleSet after_two = WeaklyAfter(named, A("2"));
  QuintupleSet expected_two({Row("Teacher", "tomorrow", "2", "e", "4"),
                             Row("Teacher", "tomorrow", "2", "f", "5")});
  CHECK(after_two == expected_two);
}

TEST_CASE("weakly-after rejects unknown nodes and non-pentaforms") {
  CHECK_THROWS_AS(WeaklyAfter(HomeworkNamedRelation(), A("8")), Error);
  CHECK_THROWS_AS(WeaklyAfter(testing::TwoStartRelation(), A("43")), Error);
}

TEST_CASE("subroots match the definition evaluated directly") {
  QuintupleSet named = HomeworkNamedRelation();
  CHECK(Subroots(named) == ValueSet{A("0")});
  CHECK(Subroots(named) == OracleSubroots(named));

  QuintupleSet chain = ChainRelation();
  CHECK(Subroots(chain) == ValueSet{A("0"), A("1")});
  CHECK(Subroots(chain) == OracleSubroots(chain));

  QuintupleSet layered = ThreeLayerRelation();
  CHECK(Subroots(layered) == OracleSubroots(layered));
  CHECK(Subroots(layered) == ValueSet{A("0")});
}

TEST_CASE("a node is a subroot exactly when its rows are whole slices") {
  for (const QuintupleSet& q :
       {HomeworkNamedRelation(), ChainRelation(), ThreeLayerRelation(),
        testing::HomeworkRelation(), AlexRelation()}) {
    ValueSet subroots = Subroots(q);
    ValueSet decision_nodes = Components(q).decision_nodes;
    for (const Value& w : decision_nodes) {
      CHECK(subroots.count(w) == (OracleSliceUnionEquals(q, w) ? 1u : 0u));
      CHECK(subroots.count(w) == (OracleIsSubroot(q, w) ? 1u : 0u));
    }
  }
}

TEST_CASE("subgames are pentaforms rooted at their subroot") {
  for (const QuintupleSet& q :
       {AlexRelation(), HomeworkNamedRelation(), ChainRelation()}) {
    CHECK(Subgame(q, RootOf(q)) == q);
  }
  QuintupleSet sub = Subgame(ChainRelation(), A("1"));
  CHECK(sub == QuintupleSet({Row("i", "j2", "1", "a", "2")}));
  CHECK(IsPentaform(sub));
  CHECK(RootOf(sub) == A("1"));
}

TEST_CASE("non-subroots are rejected") {
  try {
    Subgame(HomeworkNamedRelation(), A("2"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotASubroot);
  }
}

TEST_CASE("separation levels") {
  SeparationVerdict weak = Separation(
      {HomeworkNamedRelation(), GuiltyBlock(), InnocentBlock()});
  CHECK(weak.level == SeparationLevel::kWeak);
  REQUIRE_FALSE(weak.witnesses.empty());
  CHECK(weak.witnesses.front().kind == "node");

  SeparationVerdict strong = Separation({GuiltyBlock(), InnocentBlock()});
  CHECK(strong.level == SeparationLevel::kStrong);
  CHECK(strong.witnesses.empty());

  SeparationVerdict none = Separation({AlexRelation(), AlexRelation()});
  CHECK(none.level == SeparationLevel::kNone);
  CHECK_FALSE(none.witnesses.empty());

  CHECK(Separation({}).level == SeparationLevel::kStrong);
  CHECK(Separation({AlexRelation()}).level == SeparationLevel::kStrong);
}

TEST_CASE("pair unions append a lower layer") {
  QuintupleSet named = HomeworkNamedRelation();
  BlockUnion one = UnionPair(named, GuiltyBlock());
  CHECK(one.start_nodes == ValueSet{A("0")});
  CHECK(IsPentaform(one.relation));
  CHECK(RootOf(one.relation) == A("0"));

  BlockUnion layer = UnionFamily({GuiltyBlock(), InnocentBlock()});
  BlockUnion full = UnionPair(named, layer.relation);
  CHECK(full.start_nodes == ValueSet{A("0")});
  CHECK(IsPentaform(full.relation));
  CHECK(RootOf(full.relation) == A("0"));
  CHECK(full.relation == ThreeLayerRelation());
}

TEST_CASE("the empty block is neutral for pair unions") {
  BlockUnion result = UnionPair(QuintupleSet(), AlexRelation());
  CHECK(result.relation == AlexRelation());
  CHECK(result.start_nodes == ValueSet{A("0")});
  CHECK(result.end_nodes == ValueSet{A("1"), A("2")});
}

TEST_CASE("pair unions enforce their preconditions") {
  // Not a block.
  CHECK_THROWS_AS(
      UnionPair(testing::IndependenceFixture(AxiomId::kActionRectangle),
                AlexRelation()),
      Error);
  // Sharing a decision node breaks weak separation.
  CHECK_THROWS_AS(UnionPair(AlexRelation(), AlexRelation()), Error);
  // A start node of the first must not be an end node of the second.
  QuintupleSet upper({Row("i", "ja", "5", "a", "6")});
  QuintupleSet lower({Row("i", "jb", "4", "b", "5")});
  try {
    UnionPair(upper, lower);
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kPreconditionViolation);
  }
  // The other way around the same two blocks compose.
  BlockUnion ok = UnionPair(lower, upper);
  CHECK(ok.start_nodes == ValueSet{A("4")});
  CHECK(ok.end_nodes == ValueSet{A("6")});
}

TEST_CASE("family unions need strong separation") {
  BlockUnion layer = UnionFamily({GuiltyBlock(), InnocentBlock()});
  CHECK(layer.start_nodes ==
        ValueSet{A("4"), A("5"), A("6"), A("7")});
  CHECK(layer.end_nodes == ValueSet{A("11"), A("12"), A("13"), A("14"),
                                    A("15"), A("16"), A("17"), A("18")});
  CHECK(StartNodes(layer.relation) == layer.start_nodes);
  CHECK(EndNodes(layer.relation) == layer.end_nodes);

  BlockUnion single = UnionFamily({AlexRelation()});
  CHECK(single.relation == AlexRelation());

  try {
    UnionFamily({HomeworkNamedRelation(), GuiltyBlock()});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotSeparated);
  }
}

TEST_CASE("chains must be nested pentaforms sharing one root") {
  CHECK(UnionChain({AlexRelation(), AlexRelation()}) == AlexRelation());

  QuintupleSet named = HomeworkNamedRelation();
  QuintupleSet two = UnionPair(named, GuiltyBlock()).relation;
  QuintupleSet three =
      UnionPair(named, UnionFamily({GuiltyBlock(), InnocentBlock()}).relation)
          .relation;
  QuintupleSet result = UnionChain({two, three});
  CHECK(result == ThreeLayerRelation());
  CHECK(RootOf(result) == A("0"));

  try {
    UnionChain({AlexRelation(), HomeworkNamedRelation()});
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kChainOrder);
    CHECK(std::string(e.what()).find("1") != std::string::npos);
  }
  CHECK_THROWS_AS(UnionChain({}), Error);
  CHECK_THROWS_AS(UnionChain({GuiltyBlock()}), Error);
}

TEST_CASE("each successor determines its quintuple") {
  CHECK(QuintupleOfSuccessor(HomeworkNamedRelation(), A("7")) ==
        Row("Teacher", "tomorrow", "3", "f", "7"));
  CHECK(QuintupleOfSuccessor(AlexRelation(), A("2")) ==
        Quintuple(A("Alex"), testing::S({"0"}), A("0"), A("right"), A("2")));
  try {
    QuintupleOfSuccessor(AlexRelation(), A("0"));
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownSuccessor);
  }
}

TEST_CASE("the forgetful merged player fails perfect recall at (2,4,6)") {
  QuintupleSet merged = KidTeacherRelation();
  auto witness = CheckPerfectRecall(merged);
  REQUIRE(witness.has_value());
  CHECK(witness->first == A("2"));
  CHECK(witness->second == A("4"));
  REQUIRE(witness->third.has_value());
  CHECK(*witness->third == A("6"));

  // The exhaustive oracle confirms the reported triple violates the
  // condition, and also finds the (1,6,4) triple that precedes it in plain
  // lexicographic order.
  auto violations = OracleRecallViolations(merged);
  CHECK(std::find(violations.begin(), violations.end(),
                  std::make_tuple(A("2"), A("4"), A("6"))) !=
        violations.end());
  CHECK(std::find(violations.begin(), violations.end(),
                  std::make_tuple(A("1"), A("6"), A("4"))) !=
        violations.end());
}

TEST_CASE("distinct players keep perfect recall") {
  QuintupleSet named = HomeworkNamedRelation();
  CHECK_FALSE(CheckPerfectRecall(named).has_value());
  CHECK(OracleRecallViolations(named).empty());
  CHECK_FALSE(
      CheckPerfectRecall(QuintupleSet({Row("i", "j", "w", "a", "y")}))
          .has_value());
}

TEST_CASE("absentmindedness is a repeat of a situation along a path") {
  QuintupleSet repeat({Row("Ann", "j", "0", "b", "1"),
                       Row("Ann", "j", "1", "b", "2")});
  auto witness = CheckNoAbsentmindedness(repeat);
  REQUIRE(witness.has_value());
  CHECK(witness->first == A("1"));
  CHECK(witness->second == A("2"));
  CHECK_FALSE(witness->third.has_value());
  CHECK(OracleAbsentmindedPairs(repeat) ==
        std::vector<std::pair<Value, Value>>{{A("1"), A("2")}});

  CHECK_FALSE(CheckNoAbsentmindedness(HomeworkNamedRelation()).has_value());
  CHECK(OracleAbsentmindedPairs(HomeworkNamedRelation()).empty());
  CHECK_FALSE(
      CheckNoAbsentmindedness(QuintupleSet({Row("i", "j", "w", "a", "y")}))
          .has_value());
}

TEST_CASE("perfect recall implies no absentmindedness on the fixtures") {
  for (const QuintupleSet& q :
       {AlexRelation(), testing::HomeworkRelation(), HomeworkNamedRelation(),
        ChainRelation(), ThreeLayerRelation()}) {
    if (!CheckPerfectRecall(q).has_value()) {
      CHECK_FALSE(CheckNoAbsentmindedness(q).has_value());
    }
  }
}

}  // namespace
}  // namespace pentaform
