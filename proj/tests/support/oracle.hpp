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
// Test-only brute-force reference. Deliberately shares no code with the
// library: rates are recomputed by full scans at every candidate
// threshold and the argmin is found by direct enumeration, so agreement
// with the O(n + m) sweep is meaningful. The selection rule is the same
// documented one: minimize |FPR - FNR|, break ties on the smaller
// (FPR + FNR) / 2, then on the smaller threshold, comparing
// cross-multiplied integer counts throughout.

#ifndef CROSSEVAL_TESTS_SUPPORT_ORACLE_HPP_
#define CROSSEVAL_TESTS_SUPPORT_ORACLE_HPP_

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <vector>

namespace oracle {

struct Rates {
  std::int64_t false_positives = 0;  // bona fide scores strictly below tau
  std::int64_t false_negatives = 0;  // spoof scores at or above tau
};

inline Rates rates_at(const std::vector<double>& bonafide,
                      const std::vector<double>& spoof, double tau) {
  Rates rates;
  for (double s : bonafide) {
    if (s < tau) ++rates.false_positives;
  }
  for (double s : spoof) {
    if (s >= tau) ++rates.false_negatives;
  }
  return rates;
}

inline std::vector<double> candidate_thresholds(
    const std::vector<double>& bonafide, const std::vector<double>& spoof) {
  std::vector<double> all = bonafide;
  all.insert(all.end(), spoof.begin(), spoof.end());
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  all.push_back(all.back() + 1.0);
  return all;
}

struct Result {
  double eer = 0.0;
  double threshold = 0.0;
  double fpr = 0.0;
  double fnr = 0.0;
};

inline Result brute_eer(const std::vector<double>& bonafide,
                        const std::vector<double>& spoof) {
  const std::int64_t n = static_cast<std::int64_t>(bonafide.size());
  const std::int64_t m = static_cast<std::int64_t>(spoof.size());

  bool have_best = false;
  std::int64_t best_gap = 0;
  std::int64_t best_sum = 0;
  double best_tau = 0.0;
  Rates best_rates;
  for (double tau : candidate_thresholds(bonafide, spoof)) {
    const Rates rates = rates_at(bonafide, spoof, tau);
    // |fp/n - fn/m| and fp/n + fn/m compared over the common
    // denominator n * m.
    const std::int64_t gap =
        std::llabs(rates.false_positives * m - rates.false_negatives * n);
    const std::int64_t sum =
        rates.false_positives * m + rates.false_negatives * n;
    if (!have_best || gap < best_gap ||
        (gap == best_gap && sum < best_sum)) {
      have_best = true;
      best_gap = gap;
      best_sum = sum;
      best_tau = tau;
      best_rates = rates;
    }
  }

  Result result;
  result.threshold = best_tau;
  result.fpr = static_cast<double>(best_rates.false_positives) /
               static_cast<double>(n);
  result.fnr = static_cast<double>(best_rates.false_negatives) /
               static_cast<double>(m);
  result.eer = (result.fpr + result.fnr) / 2.0;
  return result;
}

}  // namespace oracle

#endif  // CROSSEVAL_TESTS_SUPPORT_ORACLE_HPP_
