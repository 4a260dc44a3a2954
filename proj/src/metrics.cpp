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

#include "crosseval/metrics.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdlib>

#include "crosseval/errors.hpp"

namespace crosseval {

namespace {

void require_label(const ScoreSet& set, ClassLabel expected,
                   const char* argument) {
  if (set.label() != expected) {
    throw ValidationError(std::string(argument) + " argument is labeled '" +
                          to_string(set.label()) + "', expected '" +
                          to_string(expected) + "'");
  }
}

// Walks the candidate thresholds of the pooled score sets in ascending
// order and calls visit(tau, fp_count, fn_count) at each. Counts are
// maintained incrementally, so the whole sweep is O(n + m).
template <typename Visitor>
void sweep_candidates(const std::vector<double>& neg,
                      const std::vector<double>& pos, Visitor&& visit) {
  const std::int64_t m = static_cast<std::int64_t>(pos.size());
  std::size_t below_neg = 0;  // #{ bona fide < tau }
  std::size_t below_pos = 0;  // #{ spoof < tau }

  auto at = [&](double tau) {
    while (below_neg < neg.size() && neg[below_neg] < tau) ++below_neg;
    while (below_pos < pos.size() && pos[below_pos] < tau) ++below_pos;
    visit(tau, static_cast<std::int64_t>(below_neg),
          m - static_cast<std::int64_t>(below_pos));
  };

  std::size_t a = 0, b = 0;
  while (a < neg.size() || b < pos.size()) {
    double v;
    if (b == pos.size() || (a < neg.size() && neg[a] <= pos[b])) {
      v = neg[a];
    } else {
      v = pos[b];
    }
    at(v);
    while (a < neg.size() && neg[a] == v) ++a;
    while (b < pos.size() && pos[b] == v) ++b;
  }
  at(std::max(neg.back(), pos.back()) + 1.0);
}

}  // namespace

double fpr_at(const ScoreSet& bonafide, double tau) {
  require_label(bonafide, ClassLabel::bonafide, "bonafide");
  const auto& s = bonafide.scores();
  const auto below = std::lower_bound(s.begin(), s.end(), tau) - s.begin();
  return static_cast<double>(below) / static_cast<double>(s.size());
}

double fnr_at(const ScoreSet& spoof, double tau) {
  require_label(spoof, ClassLabel::spoof, "spoof");
  const auto& s = spoof.scores();
  const auto below = std::lower_bound(s.begin(), s.end(), tau) - s.begin();
  return static_cast<double>(s.size() - below) /
         static_cast<double>(s.size());
}

EerOutcome eer(const ScoreSet& bonafide, const ScoreSet& spoof) {
  require_label(bonafide, ClassLabel::bonafide, "bonafide");
  require_label(spoof, ClassLabel::spoof, "spoof");

  const std::int64_t n = static_cast<std::int64_t>(bonafide.size());
  const std::int64_t m = static_cast<std::int64_t>(spoof.size());

  // |FPR - FNR| and FPR + FNR compared as integers scaled by n * m.
  bool found = false;
  std::int64_t best_gap = 0;
  std::int64_t best_sum = 0;
  double best_tau = 0.0;
  std::int64_t best_fp = 0;
  std::int64_t best_fn = 0;

  sweep_candidates(bonafide.scores(), spoof.scores(),
                   [&](double tau, std::int64_t fp, std::int64_t fn) {
                     const std::int64_t gap = std::abs(fp * m - fn * n);
                     const std::int64_t sum = fp * m + fn * n;
                     // Candidates arrive in ascending order, so replacing
                     // only on strict improvement keeps the smallest tau.
                     if (!found || gap < best_gap ||
                         (gap == best_gap && sum < best_sum)) {
                       found = true;
                       best_gap = gap;
                       best_sum = sum;
                       best_tau = tau;
                       best_fp = fp;
                       best_fn = fn;
                     }
                   });

  const double fpr = static_cast<double>(best_fp) / static_cast<double>(n);
  const double fnr = static_cast<double>(best_fn) / static_cast<double>(m);
  return EerOutcome{(fpr + fnr) / 2.0, best_tau, fpr, fnr};
}

std::vector<ErrorRatePoint> error_rate_curve(const ScoreSet& bonafide,
                                             const ScoreSet& spoof) {
  require_label(bonafide, ClassLabel::bonafide, "bonafide");
  require_label(spoof, ClassLabel::spoof, "spoof");

  const double n = static_cast<double>(bonafide.size());
  const double m = static_cast<double>(spoof.size());

  std::vector<ErrorRatePoint> curve;
  sweep_candidates(bonafide.scores(), spoof.scores(),
                   [&](double tau, std::int64_t fp, std::int64_t fn) {
                     curve.push_back(ErrorRatePoint{
                         tau, static_cast<double>(fp) / n,
                         static_cast<double>(fn) / m});
                   });
  return curve;
}

}  // namespace crosseval
