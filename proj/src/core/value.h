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

#ifndef PENTAFORM_CORE_VALUE_H_
#define PENTAFORM_CORE_VALUE_H_

#include <compare>
#include <set>
#include <string>
#include <vector>

namespace pentaform {

// The universal element type: either an atom (an opaque, nonempty UTF-8
// string) or a finite set of atoms. Players and situations may be either;
// nodes and actions are always atoms. Equality is structural and node sets
// are order-insensitive (stored sorted and deduplicated).
//
// The canonical total order — used everywhere iteration order matters —
// places all atoms before all node sets; atoms compare bytewise and node
// sets compare lexicographically on their sorted element lists.
class Value {
 public:
  static Value Atom(std::string atom);
  static Value NodeSet(std::vector<std::string> elements);

  bool is_atom() const { return !is_set_; }
  bool is_node_set() const { return is_set_; }

  // Requires is_atom().
  const std::string& atom() const;
  // Requires is_node_set(); sorted and duplicate-free.
  const std::vector<std::string>& elements() const;

  // "Alex" for atoms, "{2,3}" for node sets.
  std::string ToString() const;

  friend bool operator==(const Value& a, const Value& b) = default;
  friend auto operator<=>(const Value& a, const Value& b) = default;

 private:
  Value(bool is_set, std::vector<std::string> data);

  bool is_set_ = false;
  std::vector<std::string> data_;
};

using ValueSet = std::set<Value>;

}  // namespace pentaform

#endif  // PENTAFORM_CORE_VALUE_H_
