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

#include <algorithm>

#include "core/error.h"
#include "core/game.h"
#include "fixtures.h"

namespace pentaform {
namespace {

using testing::A;
using testing::AlexGame;
using testing::AlexGmGame;
using testing::AlexRelation;
using testing::AlexUtilities;
using testing::HomeworkGame;
using testing::HomeworkGmGame;
using testing::HomeworkNamedGame;
using testing::HomeworkRelation;
using testing::HomeworkUtilities;
using testing::MakeRun;
using testing::Row;
using testing::S;

bool HasCondition(const std::vector<GmViolation>& violations,
                  GmCondition condition) {
  return std::any_of(violations.begin(), violations.end(),
                     [condition](const GmViolation& v) {
                       return v.condition == condition;
                     });
}

TEST_CASE("extended reals order with infinities at the extremes") {
  CHECK(ExtendedReal::NegativeInfinity() < ExtendedReal(-1000));
  CHECK(ExtendedReal(3) < ExtendedReal::Infinity());
  CHECK(ExtendedReal::Infinity() == ExtendedReal::Infinity());
  CHECK(ExtendedReal(2) == ExtendedReal(2.0));
  CHECK_FALSE(ExtendedReal(2).is_positive_infinity());
  CHECK(ExtendedReal::Infinity().is_positive_infinity());
  CHECK(ExtendedReal::NegativeInfinity().is_negative_infinity());
  CHECK_THROWS_AS(ExtendedReal(std::nan("")), Error);
  CHECK_THROWS_AS(ExtendedReal::Infinity().finite_value(), Error);
}

TEST_CASE("the small standard game validates") {
  GmGame g = AlexGmGame();
  CHECK(CheckGmGame(g).empty());
  CHECK(GmPlayers(g) == ValueSet{A("Alex")});
  CHECK(GmActions(g) == std::set<std::string>{"left", "right"});
  CHECK(GmDecisionNodes(g) == std::set<NodeId>{"0"});
  CHECK(GmFeasibility(g).at("0") == std::set<std::string>{"left", "right"});
}

TEST_CASE("duplicate action labels at one node are rejected") {
  GmGame g = AlexGmGame();
  g.labels[{"0", "2"}] = "left";
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kLabeling));
}

TEST_CASE("controls must cover every decision node") {
  GmGame g = AlexGmGame();
  g.controls.clear();
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kControlConstancy));
}

TEST_CASE("information sets must partition the decision nodes") {
  GmGame g = HomeworkGmGame();
  g.information_sets = {{"0"}, {"1"}, {"2"}};  // node 3 missing
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kInformationPartition));

  GmGame overlapping = HomeworkGmGame();
  overlapping.information_sets = {{"0", "1"}, {"1"}, {"2", "3"}};
  CHECK(HasCondition(CheckGmGame(overlapping),
                     GmCondition::kInformationPartition));
}

TEST_CASE("feasibility must be constant on an information set") {
  GmGame g = HomeworkGmGame();
  g.labels[{"3", "6"}] = "x";  // node 3 now offers {x, f}, node 2 {e, f}
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kFeasibilityConstancy));
}

TEST_CASE("players must be constant on an information set") {
  GmGame g = HomeworkGmGame();
  g.controls.insert_or_assign("3", A("Dog"));
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kControlConstancy));
}

TEST_CASE("utilities must be total over players and runs") {
  GmGame missing_player = AlexGmGame();
  missing_player.utilities.per_player.erase(A("Alex"));
  CHECK(HasCondition(CheckGmGame(missing_player),
                     GmCondition::kUtilityTotality));

  GmGame missing_run = AlexGmGame();
  missing_run.utilities.per_player[A("Alex")].erase(MakeRun({"0", "1"}));
  CHECK(HasCondition(CheckGmGame(missing_run),
                     GmCondition::kUtilityTotality));

  GmGame stray_run = AlexGmGame();
  stray_run.utilities.per_player[A("Alex")][MakeRun({"0", "9"})] =
      ExtendedReal(0);
  CHECK(HasCondition(CheckGmGame(stray_run), GmCondition::kUtilityTotality));
}

TEST_CASE("the tree condition catches malformed edge sets") {
  GmGame g = AlexGmGame();
  g.edges.insert({"9", "1"});
  CHECK(HasCondition(CheckGmGame(g), GmCondition::kOutTree));

  GmGame empty;
  CHECK(HasCondition(CheckGmGame(empty), GmCondition::kOutTree));
}

TEST_CASE("pentaform games validate their relation and utilities") {
  CHECK_NOTHROW(AlexGame());
  CHECK_THROWS_AS(
      MakePentaformGame(testing::TwoStartRelation(), UtilityProfile()),
      Error);

  UtilityProfile wrong_player = AlexUtilities();
  wrong_player.per_player[A("Ghost")] = wrong_player.per_player[A("Alex")];
  CHECK_THROWS_AS(MakePentaformGame(AlexRelation(), wrong_player), Error);

  UtilityProfile missing_run = AlexUtilities();
  missing_run.per_player[A("Alex")].erase(MakeRun({"0", "1"}));
  CHECK_THROWS_AS(MakePentaformGame(AlexRelation(), missing_run), Error);

  UtilityProfile extra_run = AlexUtilities();
  extra_run.per_player[A("Alex")][MakeRun({"0", "9"})] = ExtendedReal(1);
  CHECK_THROWS_AS(MakePentaformGame(AlexRelation(), extra_run), Error);
}

TEST_CASE("expanding a standard game yields the expected quintuples") {
  PentaformGame game = PentaformOf(AlexGmGame());
  CHECK(game.relation == AlexRelation());
  CHECK(game.utilities == AlexUtilities());
  CHECK(game.relation.Contains(
      Quintuple(A("Alex"), S({"0"}), A("0"), A("right"), A("2"))));

  PentaformGame horse = PentaformOf(HomeworkGmGame());
  CHECK(horse.relation == HomeworkRelation());
  CHECK(horse.utilities == HomeworkUtilities());
}

TEST_CASE("the expansion image has information-set situations") {
  CHECK(HasInformationSetSituations(PentaformOf(AlexGmGame()).relation));
  CHECK(HasInformationSetSituations(PentaformOf(HomeworkGmGame()).relation));
  CHECK(HasInformationSetSituations(HomeworkRelation()));
  CHECK_FALSE(HasInformationSetSituations(
      testing::HomeworkNamedRelation()));
  CHECK(HasInformationSetSituations(QuintupleSet()));
}

TEST_CASE("standardizing reads the components off the relation") {
  GmGame g = Standardize(HomeworkNamedGame());
  CHECK(CheckGmGame(g).empty());
  CHECK(g.information_sets ==
        std::set<std::set<NodeId>>{{"0"}, {"1"}, {"2", "3"}});
  CHECK(g.nodes.size() == 9);
  CHECK(g.labels.at({"3", "7"}) == "f");
  CHECK(g.controls.at("2") == A("Teacher"));
  CHECK(g.utilities == HomeworkUtilities());

  GmGame tiny = Standardize(MakePentaformGame(
      QuintupleSet({Row("i", "j", "w", "a", "y")}),
      [] {
        UtilityProfile u;
        u.per_player[A("i")][MakeRun({"w", "y"})] = ExtendedReal(0);
        return u;
      }()));
  CHECK(tiny.nodes == std::set<NodeId>{"w", "y"});
  CHECK(tiny.edges == EdgeSet{{"w", "y"}});
  CHECK(CheckGmGame(tiny).empty());
}

TEST_CASE("round trips through both directions") {
  GmGame alex = AlexGmGame();
  CHECK(Standardize(PentaformOf(alex)) == alex);
  CHECK(CheckGmRoundtrip(alex).status == RoundtripReport::Status::kIdentity);

  GmGame horse = HomeworkGmGame();
  CHECK(Standardize(PentaformOf(horse)) == horse);
  CHECK(CheckGmRoundtrip(horse).status == RoundtripReport::Status::kIdentity);

  PentaformGame homework = HomeworkGame();
  CHECK(PentaformOf(Standardize(homework)) == homework);
  CHECK(CheckPentaformRoundtrip(homework).status ==
        RoundtripReport::Status::kIdentity);
}

TEST_CASE("round trip rewrites situations that are not information sets") {
  PentaformGame named = HomeworkNamedGame();
  RoundtripReport report = CheckPentaformRoundtrip(named);
  CHECK(report.status == RoundtripReport::Status::kRewritten);

  PentaformGame rewritten = PentaformOf(Standardize(named));
  CHECK(rewritten.relation == HomeworkRelation());
  CHECK(rewritten.utilities == named.utilities);
  ValueSet situations = Components(rewritten.relation).situations;
  CHECK(situations ==
        ValueSet{S({"0"}), S({"1"}), S({"2", "3"})});
}

TEST_CASE("the sixteen derived equalities hold on both standard fixtures") {
  for (const GmGame& g : {AlexGmGame(), HomeworkGmGame()}) {
    std::vector<EqualityResult> results = ConversionEqualities(g);
    REQUIRE(results.size() == 16);
    for (const EqualityResult& r : results) {
      CHECK_MESSAGE(r.holds, "equality failed: " << r.name);
    }
  }
}

TEST_CASE("the equalities also hold on standardized info-set-situation games") {
  for (const PentaformGame& game : {AlexGame(), HomeworkGame()}) {
    REQUIRE(HasInformationSetSituations(game.relation));
    std::vector<EqualityResult> results =
        ConversionEqualities(Standardize(game));
    REQUIRE(results.size() == 16);
    for (const EqualityResult& r : results) {
      CHECK_MESSAGE(r.holds, "equality failed: " << r.name);
    }
  }
}

TEST_CASE("the situations of the expansion equal the information sets") {
  PentaformGame horse = PentaformOf(HomeworkGmGame());
  ValueSet situations = Components(horse.relation).situations;
  CHECK(situations == ValueSet{S({"0"}), S({"1"}), S({"2", "3"})});
}

}  // namespace
}  // namespace pentaform
