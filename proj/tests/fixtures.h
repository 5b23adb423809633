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

// The worked examples used across the test suites. The two homework
// variants share one tree: the first names situations by information set,
// the second by time of day. The verdict blocks extend the story with a
// second Kid decision under each teacher outcome; the KidTeacher variant
// merges the Kid and Teacher into one forgetful player.

#ifndef PENTAFORM_TESTS_FIXTURES_H_
#define PENTAFORM_TESTS_FIXTURES_H_

#include <initializer_list>
#include <string>
#include <vector>

#include "core/axioms.h"
#include "core/game.h"
#include "core/relation.h"
#include "core/value.h"

namespace pentaform::testing {

inline Value A(const std::string& atom) { return Value::Atom(atom); }

inline Value S(std::initializer_list<std::string> elements) {
  return Value::NodeSet(std::vector<std::string>(elements));
}

inline Quintuple Row(const Value& i, const Value& j, const std::string& w,
                     const std::string& a, const std::string& y) {
  return Quintuple(i, j, A(w), A(a), A(y));
}

inline Quintuple Row(const std::string& i, const std::string& j,
                     const std::string& w, const std::string& a,
                     const std::string& y) {
  return Row(A(i), A(j), w, a, y);
}

inline QuintupleSet AlexRelation() {
  return QuintupleSet({
      Row(A("Alex"), S({"0"}), "0", "left", "1"),
      Row(A("Alex"), S({"0"}), "0", "right", "2"),
  });
}

inline QuintupleSet HomeworkRelation() {
  return QuintupleSet({
      Row(A("Kid"), S({"0"}), "0", "c", "1"),
      Row(A("Kid"), S({"0"}), "0", "b", "2"),
      Row(A("Dog"), S({"1"}), "1", "g", "8"),
      Row(A("Dog"), S({"1"}), "1", "d", "3"),
      Row(A("Teacher"), S({"2", "3"}), "2", "e", "4"),
      Row(A("Teacher"), S({"2", "3"}), "2", "f", "5"),
      Row(A("Teacher"), S({"2", "3"}), "3", "e", "6"),
      Row(A("Teacher"), S({"2", "3"}), "3", "f", "7"),
  });
}

inline QuintupleSet HomeworkNamedRelation() {
  return QuintupleSet({
      Row("Kid", "today", "0", "c", "1"),
      Row("Kid", "today", "0", "b", "2"),
      Row("Dog", "tonight", "1", "g", "8"),
      Row("Dog", "tonight", "1", "d", "3"),
      Row("Teacher", "tomorrow", "2", "e", "4"),
      Row("Teacher", "tomorrow", "2", "f", "5"),
      Row("Teacher", "tomorrow", "3", "e", "6"),
      Row("Teacher", "tomorrow", "3", "f", "7"),
  });
}

inline QuintupleSet KidTeacherRelation() {
  return QuintupleSet({
      Row("KidTeacher", "today", "0", "c", "1"),
      Row("KidTeacher", "today", "0", "b", "2"),
      Row("Dog", "tonight", "1", "g", "8"),
      Row("Dog", "tonight", "1", "d", "3"),
      Row("KidTeacher", "tomorrow", "2", "e", "4"),
      Row("KidTeacher", "tomorrow", "2", "f", "5"),
      Row("KidTeacher", "tomorrow", "3", "e", "6"),
      Row("KidTeacher", "tomorrow", "3", "f", "7"),
  });
}

inline QuintupleSet TwoStartRelation() {
  return QuintupleSet({
      Row("41", "42", "43", "44", "45"),
      Row("46", "47", "48", "49", "50"),
  });
}

inline QuintupleSet GuiltyBlock() {
  return QuintupleSet({
      Row("Kid", "guilty", "4", "s", "11"),
      Row("Kid", "guilty", "4", "q", "12"),
      Row("Kid", "guilty", "5", "s", "13"),
      Row("Kid", "guilty", "5", "q", "14"),
  });
}

inline QuintupleSet InnocentBlock() {
  return QuintupleSet({
      Row("Kid", "innocent", "6", "s", "15"),
      Row("Kid", "innocent", "6", "q", "16"),
      Row("Kid", "innocent", "7", "s", "17"),
      Row("Kid", "innocent", "7", "q", "18"),
  });
}

inline Run MakeRun(std::initializer_list<std::string> nodes) {
  Run run;
  run.nodes.assign(nodes);
  std::sort(run.nodes.begin(), run.nodes.end());
  return run;
}

inline UtilityProfile AlexUtilities() {
  UtilityProfile u;
  u.per_player[A("Alex")] = {
      {MakeRun({"0", "1"}), ExtendedReal(2)},
      {MakeRun({"0", "2"}), ExtendedReal(4)},
  };
  return u;
}

inline PentaformGame AlexGame() {
  return MakePentaformGame(AlexRelation(), AlexUtilities());
}

inline GmGame AlexGmGame() {
  GmGame g;
  g.nodes = {"0", "1", "2"};
  g.edges = {{"0", "1"}, {"0", "2"}};
  g.information_sets = {{"0"}};
  g.labels = {{{"0", "1"}, "left"}, {{"0", "2"}, "right"}};
  g.controls = {{"0", A("Alex")}};
  g.utilities = AlexUtilities();
  return g;
}

inline UtilityProfile HomeworkUtilities() {
  UtilityProfile u;
  u.per_player[A("Kid")] = {
      {MakeRun({"0", "1", "8"}), ExtendedReal(2)},
      {MakeRun({"0", "1", "3", "6"}), ExtendedReal(1)},
      {MakeRun({"0", "1", "3", "7"}), ExtendedReal::NegativeInfinity()},
      {MakeRun({"0", "2", "4"}), ExtendedReal(3)},
      {MakeRun({"0", "2", "5"}), ExtendedReal(-1)},
  };
  u.per_player[A("Dog")] = {
      {MakeRun({"0", "1", "8"}), ExtendedReal(2)},
      {MakeRun({"0", "1", "3", "6"}), ExtendedReal(3)},
      {MakeRun({"0", "1", "3", "7"}), ExtendedReal(3)},
      {MakeRun({"0", "2", "4"}), ExtendedReal(0)},
      {MakeRun({"0", "2", "5"}), ExtendedReal(0)},
  };
  u.per_player[A("Teacher")] = {
      {MakeRun({"0", "1", "8"}), ExtendedReal(0)},
      {MakeRun({"0", "1", "3", "6"}), ExtendedReal(-1)},
      {MakeRun({"0", "1", "3", "7"}), ExtendedReal(1)},
      {MakeRun({"0", "2", "4"}), ExtendedReal(-2)},
      {MakeRun({"0", "2", "5"}), ExtendedReal(2)},
  };
  return u;
}

inline PentaformGame HomeworkGame() {
  return MakePentaformGame(HomeworkRelation(), HomeworkUtilities());
}

inline PentaformGame HomeworkNamedGame() {
  return MakePentaformGame(HomeworkNamedRelation(), HomeworkUtilities());
}

inline GmGame HomeworkGmGame() {
  GmGame g;
  g.nodes = {"0", "1", "2", "3", "4", "5", "6", "7", "8"};
  g.edges = {{"0", "1"}, {"0", "2"}, {"1", "8"}, {"1", "3"},
             {"2", "4"}, {"2", "5"}, {"3", "6"}, {"3", "7"}};
  g.information_sets = {{"0"}, {"1"}, {"2", "3"}};
  g.labels = {{{"0", "1"}, "c"}, {{"0", "2"}, "b"}, {{"1", "8"}, "g"},
              {{"1", "3"}, "d"}, {{"2", "4"}, "e"}, {{"2", "5"}, "f"},
              {{"3", "6"}, "e"}, {{"3", "7"}, "f"}};
  g.controls = {{"0", A("Kid")},
                {"1", A("Dog")},
                {"2", A("Teacher")},
                {"3", A("Teacher")}};
  g.utilities = HomeworkUtilities();
  return g;
}

// The eight independence fixtures: each relation violates exactly the
// axiom it is named for and satisfies the other seven.
inline QuintupleSet IndependenceFixture(AxiomId axiom) {
  switch (axiom) {
    case AxiomId::kPlayerOfSituation:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Bob", "now", "0", "b", "1")});
    case AxiomId::kSituationOfNode:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "later", "0", "b", "1")});
    case AxiomId::kActionRectangle:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "0", "c", "2"),
                           Row("Ann", "now", "1", "b", "3")});
    case AxiomId::kSuccessorOfNodeAction:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "0", "b", "2")});
    case AxiomId::kPredecessorOfSuccessor:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "1", "b", "1")});
    case AxiomId::kActionOfSuccessor:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "0", "c", "1")});
    case AxiomId::kGroundedAncestry:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "2", "b", "3"),
                           Row("Ann", "now", "3", "b", "2")});
    case AxiomId::kUniqueRoot:
      return QuintupleSet({Row("Ann", "now", "0", "b", "1"),
                           Row("Ann", "now", "2", "b", "3")});
  }
  return QuintupleSet();
}

}  // namespace pentaform::testing

#endif  // PENTAFORM_TESTS_FIXTURES_H_
