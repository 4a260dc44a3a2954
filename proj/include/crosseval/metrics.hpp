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
//
// Exact discrete FPR / FNR / EER computation for one bona fide score set
// against one spoof score set.
//
// Definitions (bona fide scores high, spoof scores low):
//
//   FPR(tau) = #{ bona fide score <  tau } / |bona fide|
//   FNR(tau) = #{ spoof score     >= tau } / |spoof|
//   EER      = (FPR(tau_hat) + FNR(tau_hat)) / 2,
//              tau_hat = argmin_tau |FPR(tau) - FNR(tau)|
//
// Both rates are step functions that change only at observed scores, so
// the candidate threshold set
//
//   C = { all distinct pooled scores } + { max(pooled) + 1 }
//
// attains every reachable (FPR, FNR) pair and the discrete argmin over C
// equals the argmin over all reals. The argmin is generally not unique;
// among candidates minimizing |FPR - FNR| we pick the one minimizing
// (FPR + FNR) / 2, and among those the smallest threshold. All
// comparisons are done on cross-multiplied integer counts, so the
// selected threshold never depends on floating-point rounding.

#ifndef CROSSEVAL_METRICS_HPP_
#define CROSSEVAL_METRICS_HPP_

#include <vector>

#include "crosseval/score_set.hpp"

namespace crosseval {

/// FPR at threshold `tau`: the fraction of bona fide scores strictly
/// below `tau`. Non-decreasing in `tau`. O(log n) on the sorted set.
/// Throws ValidationError if `bonafide` is not labeled bona fide.
double fpr_at(const ScoreSet& bonafide, double tau);

/// FNR at threshold `tau`: the fraction of spoof scores at or above
/// `tau`. Non-increasing in `tau`. O(log n) on the sorted set.
/// Throws ValidationError if `spoof` is not labeled spoof.
double fnr_at(const ScoreSet& spoof, double tau);

/// Equal error rate of one bona fide set against one spoof set, by exact
/// sweep over the candidate thresholds described above. O(n + m) on the
/// pre-sorted sets.
EerOutcome eer(const ScoreSet& bonafide, const ScoreSet& spoof);

/// The full discrete error-rate curve: one point per candidate threshold
/// in ascending order. FPR is non-decreasing and FNR non-increasing
/// across the result; the first point has FPR 0 and the last has FNR 0.
std::vector<ErrorRatePoint> error_rate_curve(const ScoreSet& bonafide,
                                             const ScoreSet& spoof);

}  // namespace crosseval

#endif  // CROSSEVAL_METRICS_HPP_
