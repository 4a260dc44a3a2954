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
// Cross-testing: every bona fide subset is paired with every synthesizer
// subset and an EER is computed for each pair in isolation, yielding a
// K x M matrix instead of the single EER of a combined test set. Row
// summaries report the worst synthesizer per bona fide type (max pooling,
// the hardest-attacker view) and the mean. The combined-test-set baseline
// is also provided, with optional per-subset subsampling, to demonstrate
// how underrepresented subsets lose influence on the EER threshold.

#ifndef CROSSEVAL_CROSSTEST_HPP_
#define CROSSEVAL_CROSSTEST_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "crosseval/metrics.hpp"
#include "crosseval/subset_store.hpp"

namespace crosseval {

/// K x M grid of EER outcomes; cells[k][m] pairs bonafide_ids[k] with
/// spoof_ids[m].
struct CrossTestMatrix {
  std::vector<std::string> bonafide_ids;          // K
  std::vector<std::string> spoof_ids;             // M
  std::vector<std::vector<EerOutcome>> cells;     // K rows of M

  friend bool operator==(const CrossTestMatrix&, const CrossTestMatrix&) =
      default;
};

/// Row summary for one bona fide subset: the largest EER across all
/// synthesizers (with the synthesizer that attains it) and the row mean.
struct PooledRow {
  std::string bonafide_id;
  double max_eer = 0.0;
  std::string argmax_spoof_id;
  double mean_eer = 0.0;

  friend bool operator==(const PooledRow&, const PooledRow&) = default;
};

/// Evaluates the full K x M matrix. Cells are independent; with
/// `parallelism` > 1 they are computed on that many threads, and the
/// result is bit-identical to the serial one regardless of scheduling.
CrossTestMatrix cross_test(const SubsetStore& store, unsigned parallelism = 1);

/// One bona fide set against each spoof subset in order: the K = 1 row
/// of the matrix.
std::vector<EerOutcome> spoof_cross_test(const ScoreSet& bonafide,
                                         const std::vector<Subset>& spoof_subsets);

/// Per-row max / mean summaries, one PooledRow per bona fide subset in
/// matrix order. Ties on the max go to the first spoof id in column
/// order. Rows are deliberately not aggregated further here; reports may
/// print a display mean over rows, labeled as such.
std::vector<PooledRow> pool(const CrossTestMatrix& matrix);

/// Per-subset inclusion fractions for combined_eer / pool_spoof_scores,
/// keyed by spoof subset id. Subsets absent from the map are included
/// whole.
using WeightMap = std::map<std::string, double>;

/// Concatenates the spoof subsets into one pooled spoof set. A subset
/// with weight w < 1 is first subsampled to max(1, floor(w * n)) trials,
/// uniformly without replacement, on a stream derived from `seed` and
/// the subset id (so the draw does not depend on subset order, and a
/// smaller fraction draws a subset of a larger one). Weight 1 means the
/// whole subset, exactly; weights outside (0, 1] or naming unknown
/// subsets raise ValidationError.
ScoreSet pool_spoof_scores(const std::vector<Subset>& spoof_subsets,
                           const WeightMap& weights, std::uint64_t seed);

/// The traditional combined-test-set evaluation: a single EER of
/// `bonafide` against the pooled (optionally subsampled) spoof set.
EerOutcome combined_eer(const ScoreSet& bonafide,
                        const std::vector<Subset>& spoof_subsets,
                        const WeightMap& weights, std::uint64_t seed);

}  // namespace crosseval

#endif  // CROSSEVAL_CROSSTEST_HPP_
