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

#include "crosseval/score_set.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace crosseval {

std::string to_string(ClassLabel label) {
  return label == ClassLabel::bonafide ? "bonafide" : "spoof";
}

ScoreSet::ScoreSet(ClassLabel label, std::vector<double> scores,
                   const std::string& subset_id)
    : label_(label), scores_(std::move(scores)) {
  validate(subset_id);
  std::sort(scores_.begin(), scores_.end());
}

ScoreSet::ScoreSet(ClassLabel label, std::vector<double> scores,
                   already_sorted_t, const std::string& subset_id)
    : label_(label), scores_(std::move(scores)) {
  validate(subset_id);
  assert(std::is_sorted(scores_.begin(), scores_.end()));
}

void ScoreSet::validate(const std::string& subset_id) const {
  if (scores_.empty()) throw EmptySubsetError(subset_id);
  for (double s : scores_) {
    if (!std::isfinite(s)) {
      throw NonFiniteScoreError(
          subset_id.empty()
              ? "non-finite score"
              : "non-finite score in subset '" + subset_id + "'");
    }
  }
}

}  // namespace crosseval
