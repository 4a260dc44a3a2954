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

#include "crosseval/crosstest.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "crosseval/errors.hpp"
#include "crosseval/rng.hpp"

namespace crosseval {

CrossTestMatrix cross_test(const SubsetStore& store, unsigned parallelism) {
  const auto& bonafide = store.bonafide_subsets();
  const auto& spoof = store.spoof_subsets();
  const std::size_t num_rows = bonafide.size();
  const std::size_t num_cols = spoof.size();

  CrossTestMatrix matrix;
  matrix.bonafide_ids.reserve(num_rows);
  for (const Subset& subset : bonafide) matrix.bonafide_ids.push_back(subset.id);
  matrix.spoof_ids.reserve(num_cols);
  for (const Subset& subset : spoof) matrix.spoof_ids.push_back(subset.id);
  matrix.cells.assign(num_rows, std::vector<EerOutcome>(num_cols));

  // Each cell is a pure function of two read-only score arrays and is
  // written exactly once, so any schedule gives the same matrix.
  const std::size_t total = num_rows * num_cols;
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t index = cursor.fetch_add(1);
      if (index >= total) return;
      const std::size_t k = index / num_cols;
      const std::size_t m = index % num_cols;
      matrix.cells[k][m] = eer(bonafide[k].scores, spoof[m].scores);
    }
  };

  if (parallelism <= 1 || total <= 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    const unsigned extra =
        std::min<std::size_t>(parallelism, total) - 1;
    threads.reserve(extra);
    for (unsigned i = 0; i < extra; ++i) threads.emplace_back(worker);
    worker();
    for (std::thread& t : threads) t.join();
  }
  return matrix;
}

std::vector<EerOutcome> spoof_cross_test(
    const ScoreSet& bonafide, const std::vector<Subset>& spoof_subsets) {
  if (spoof_subsets.empty())
    throw EmptySubsetError("<no spoof subsets present>");
  std::vector<EerOutcome> row;
  row.reserve(spoof_subsets.size());
  for (const Subset& subset : spoof_subsets) {
    row.push_back(eer(bonafide, subset.scores));
  }
  return row;
}

std::vector<PooledRow> pool(const CrossTestMatrix& matrix) {
  if (matrix.cells.size() != matrix.bonafide_ids.size())
    throw ValidationError("matrix row count does not match bonafide ids");

  std::vector<PooledRow> rows;
  rows.reserve(matrix.cells.size());
  for (std::size_t k = 0; k < matrix.cells.size(); ++k) {
    const auto& row = matrix.cells[k];
    if (row.size() != matrix.spoof_ids.size())
      throw ValidationError("matrix column count does not match spoof ids");
    if (row.empty()) throw ValidationError("matrix has zero columns");

    std::size_t argmax = 0;
    double sum = 0.0;
    for (std::size_t m = 0; m < row.size(); ++m) {
      sum += row[m].eer;
      if (row[m].eer > row[argmax].eer) argmax = m;  // ties keep the first
    }
    rows.push_back(PooledRow{matrix.bonafide_ids[k], row[argmax].eer,
                             matrix.spoof_ids[argmax],
                             sum / static_cast<double>(row.size())});
  }
  return rows;
}

ScoreSet pool_spoof_scores(const std::vector<Subset>& spoof_subsets,
                           const WeightMap& weights, std::uint64_t seed) {
  if (spoof_subsets.empty())
    throw EmptySubsetError("<no spoof subsets present>");

  for (const auto& [id, fraction] : weights) {
    const auto known =
        std::any_of(spoof_subsets.begin(), spoof_subsets.end(),
                    [&](const Subset& s) { return s.id == id; });
    if (!known)
      throw ValidationError("weight names unknown spoof subset '" + id + "'");
    if (!(fraction > 0.0 && fraction <= 1.0))
      throw ValidationError("weight for subset '" + id +
                            "' must lie in (0, 1]");
  }

  std::vector<double> pooled;
  for (const Subset& subset : spoof_subsets) {
    const auto it = weights.find(subset.id);
    const double fraction = it == weights.end() ? 1.0 : it->second;
    const auto& scores = subset.scores.scores();
    if (fraction == 1.0) {
      pooled.insert(pooled.end(), scores.begin(), scores.end());
      continue;
    }
    // The epsilon keeps floor() faithful to the decimal fraction the
    // user wrote (0.29 * 100 must select 29 trials, not 28).
    const auto target = static_cast<std::size_t>(std::floor(
        fraction * static_cast<double>(scores.size()) + 1e-9));
    const std::size_t take = std::max<std::size_t>(1, target);
    SplitMix64 rng(substream_seed(seed, fnv1a64(subset.id)));
    for (std::size_t i : sample_without_replacement(scores.size(), take, rng)) {
      pooled.push_back(scores[i]);
    }
  }
  return ScoreSet(ClassLabel::spoof, std::move(pooled), "<combined>");
}

EerOutcome combined_eer(const ScoreSet& bonafide,
                        const std::vector<Subset>& spoof_subsets,
                        const WeightMap& weights, std::uint64_t seed) {
  return eer(bonafide, pool_spoof_scores(spoof_subsets, weights, seed));
}

}  // namespace crosseval
