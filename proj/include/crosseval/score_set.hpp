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

#ifndef CROSSEVAL_SCORE_SET_HPP_
#define CROSSEVAL_SCORE_SET_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "crosseval/errors.hpp"

namespace crosseval {

/// Detector output convention: bona fide (genuine) audio is the negative
/// class and receives HIGHER scores; spoof is the positive class.
enum class ClassLabel { bonafide, spoof };

std::string to_string(ClassLabel label);

/// Tag selecting the trusted constructor of ScoreSet.
struct already_sorted_t {
  explicit already_sorted_t() = default;
};
inline constexpr already_sorted_t already_sorted{};

/// A non-empty, ascending-sorted set of finite detector scores for one
/// class. Immutable after construction, so values can be shared freely
/// across threads. Sorting at construction makes every downstream result
/// independent of input order.
class ScoreSet {
 public:
  /// Sorts `scores` ascending. Throws EmptySubsetError if `scores` is
  /// empty and NonFiniteScoreError if any value is NaN or infinite.
  /// `subset_id` is only used to name the subset in error messages.
  ScoreSet(ClassLabel label, std::vector<double> scores,
           const std::string& subset_id = "");

  /// Trusts that `scores` is already ascending (checked in debug builds).
  ScoreSet(ClassLabel label, std::vector<double> scores, already_sorted_t,
           const std::string& subset_id = "");

  ClassLabel label() const { return label_; }
  const std::vector<double>& scores() const { return scores_; }
  std::size_t size() const { return scores_.size(); }

  friend bool operator==(const ScoreSet&, const ScoreSet&) = default;

 private:
  void validate(const std::string& subset_id) const;

  ClassLabel label_;
  std::vector<double> scores_;  // ascending
};

/// One point of the discrete error-rate curve: the false positive and
/// false negative rates at threshold `threshold`. Both rates are exact
/// count ratios (integer multiples of 1 / subset size).
struct ErrorRatePoint {
  double threshold = 0.0;
  double fpr = 0.0;
  double fnr = 0.0;

  friend bool operator==(const ErrorRatePoint&, const ErrorRatePoint&) =
      default;
};

/// Result of one equal-error-rate evaluation. `eer` is stored as a
/// fraction in [0,1] (reports format percentages where needed) and equals
/// (fpr + fnr) / 2 exactly; `threshold` is the selected operating point.
struct EerOutcome {
  double eer = 0.0;
  double threshold = 0.0;
  double fpr = 0.0;  // false positive rate at `threshold`
  double fnr = 0.0;  // false negative rate at `threshold`

  friend bool operator==(const EerOutcome&, const EerOutcome&) = default;
};

}  // namespace crosseval

#endif  // CROSSEVAL_SCORE_SET_HPP_
