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

#include "core/value.h"

#include <algorithm>
#include <utility>

#include "core/error.h"

namespace pentaform {

Value::Value(bool is_set, std::vector<std::string> data)
    : is_set_(is_set), data_(std::move(data)) {}

Value Value::Atom(std::string atom) {
  if (atom.empty()) {
    throw Error(ErrorCode::kInvalidArgument, "atoms must be nonempty strings");
  }
  return Value(false, {std::move(atom)});
}

Value Value::NodeSet(std::vector<std::string> elements) {
  for (const std::string& e : elements) {
    if (e.empty()) {
      throw Error(ErrorCode::kInvalidArgument,
                  "node-set elements must be nonempty strings");
    }
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()),
                 elements.end());
  return Value(true, std::move(elements));
}

const std::string& Value::atom() const {
  if (is_set_) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected an atom, got node set " + ToString());
  }
  return data_.front();
}

const std::vector<std::string>& Value::elements() const {
  if (!is_set_) {
    throw Error(ErrorCode::kInvalidArgument,
                "expected a node set, got atom " + ToString());
  }
  return data_;
}

std::string Value::ToString() const {
  if (!is_set_) return data_.front();
  std::string out = "{";
  for (size_t i = 0; i < data_.size(); ++i) {
    if (i > 0) out += ",";
    out += data_[i];
  }
  out += "}";
  return out;
}

}  // namespace pentaform
