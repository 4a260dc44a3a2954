// Copyright 2026 The crosseval Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "crosseval/subset_store.hpp"

#include <unordered_set>

#include "crosseval/errors.hpp"

namespace crosseval {

namespace {

void check_class(const std::vector<Subset>& subsets, ClassLabel expected) {
  for (const Subset& subset : subsets) {
    if (subset.scores.label() != expected) {
      throw ValidationError("subset '" + subset.id + "' is labeled '" +
                            to_string(subset.scores.label()) +
                            "' but was registered as '" +
                            to_string(expected) + "'");
    }
  }
}

}  // namespace

SubsetStore::SubsetStore(std::vector<Subset> bonafide,
                         std::vector<Subset> spoof)
    : bonafide_(std::move(bonafide)), spoof_(std::move(spoof)) {
  if (bonafide_.empty())
    throw EmptySubsetError("<no bonafide subsets present>");
  if (spoof_.empty()) throw EmptySubsetError("<no spoof subsets present>");
  check_class(bonafide_, ClassLabel::bonafide);
  check_class(spoof_, ClassLabel::spoof);

  std::unordered_set<std::string> seen;
  for (const auto* subsets : {&bonafide_, &spoof_}) {
    for (const Subset& subset : *subsets) {
      if (!seen.insert(subset.id).second) {
        throw ValidationError("duplicate subset id '" + subset.id + "'");
      }
    }
  }
}

const Subset* SubsetStore::find(std::string_view id) const {
  for (const auto* subsets : {&bonafide_, &spoof_}) {
    for (const Subset& subset : *subsets) {
      if (subset.id == id) return &subset;
    }
  }
  return nullptr;
}

}  // namespace crosseval
