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

#ifndef CROSSEVAL_SUBSET_STORE_HPP_
#define CROSSEVAL_SUBSET_STORE_HPP_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "crosseval/score_set.hpp"

namespace crosseval {

/// One named score subset: all trials of one bona fide speech type or
/// one synthesizer.
struct Subset {
  std::string id;
  ScoreSet scores;

  friend bool operator==(const Subset&, const Subset&) = default;
};

/// Partitioned, pre-sorted score arrays: K bona fide subsets and M spoof
/// subsets, in insertion order. Ids are unique across both classes and
/// every subset is non-empty (enforced at construction). Immutable.
class SubsetStore {
 public:
  /// Throws EmptySubsetError when either class has no subsets and
  /// ValidationError on duplicate ids or label mismatches.
  SubsetStore(std::vector<Subset> bonafide, std::vector<Subset> spoof);

  const std::vector<Subset>& bonafide_subsets() const { return bonafide_; }
  const std::vector<Subset>& spoof_subsets() const { return spoof_; }

  std::size_t num_bonafide() const { return bonafide_.size(); }  // K
  std::size_t num_spoof() const { return spoof_.size(); }        // M

  /// Looks up a subset of either class; nullptr when absent.
  const Subset* find(std::string_view id) const;

  friend bool operator==(const SubsetStore&, const SubsetStore&) = default;

 private:
  std::vector<Subset> bonafide_;
  std::vector<Subset> spoof_;
};

}  // namespace crosseval

#endif  // CROSSEVAL_SUBSET_STORE_HPP_
