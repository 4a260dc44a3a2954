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
// Serialization of cross-test results. All emitters are pure functions
// of their inputs and produce deterministic bytes: identical matrices
// yield identical files. Tables are oriented with one row per spoof
// subset and one column per bona fide subset; CSV, JSON and SVG all
// carry the subset ids in the same order.
//
// Numbers: EER cells are printed with 6 decimals (granularity is at
// least 1/(2n), so this is lossless through subsets of several hundred
// thousand trials); thresholds and raw scores use the shortest decimal
// form that parses back to the same double. EERs are fractions, never
// percentages, in every machine format.

#ifndef CROSSEVAL_REPORT_HPP_
#define CROSSEVAL_REPORT_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "crosseval/crosstest.hpp"
#include "crosseval/metrics.hpp"
#include "crosseval/simulate.hpp"

namespace crosseval {

/// The matrix rendered as machine-readable tables. matrix_csv and
/// thresholds_csv share the same header row and row labels; matrix_json
/// carries every cell in full (eer, threshold, fpr, fnr).
struct MatrixTables {
  std::string matrix_csv;
  std::string thresholds_csv;
  std::string matrix_json;

  friend bool operator==(const MatrixTables&, const MatrixTables&) = default;
};

/// Everything `eval --mode matrix` writes.
struct ReportBundle {
  std::string matrix_csv;
  std::string thresholds_csv;
  std::string pooled_md;
  std::string matrix_json;
  std::string heatmap_svg;

  friend bool operator==(const ReportBundle&, const ReportBundle&) = default;
};

/// CSV + JSON forms of the matrix. `seed` is echoed into the JSON as
/// run metadata when present.
MatrixTables emit_matrix(const CrossTestMatrix& matrix,
                         std::optional<std::uint64_t> seed = std::nullopt);

/// Inverse of the matrix_json emitter. Unknown keys are ignored; throws
/// ParseError when the document does not describe a valid matrix.
struct ParsedMatrix {
  CrossTestMatrix matrix;
  std::optional<std::uint64_t> seed;
};
ParsedMatrix parse_matrix_json(const std::string& text);

/// Markdown summary table: one column per bona fide subset plus a
/// trailing "avg." display column, one row block for the max-pooled
/// EERs and one for the row means, and a row naming the spoof subset
/// behind each max. Values are printed to 2 decimals, half away from
/// zero, as fractions.
std::string emit_pooled(const std::vector<PooledRow>& rows);

/// Self-contained SVG heatmap: one rectangle per cell, grayscale fill
/// linear in (1 - eer) so eer 0 renders white and eer 1 black, labeled
/// axes, deterministic bytes.
std::string render_heatmap(const CrossTestMatrix& matrix);

/// All five files of the matrix report.
ReportBundle make_report_bundle(const CrossTestMatrix& matrix,
                                std::optional<std::uint64_t> seed =
                                    std::nullopt);

/// A single EER outcome (the combined-test-set result) as JSON, with
/// the seed and the effective inclusion weights echoed alongside.
std::string combined_json(const EerOutcome& outcome, std::uint64_t seed,
                          const WeightMap& weights);

/// Spoof cross-test row as CSV: one line per spoof subset with its
/// EER, threshold, FPR and FNR against the single bona fide set.
std::string spoof_cross_csv(const std::vector<std::string>& spoof_ids,
                            const std::vector<EerOutcome>& outcomes);

/// DriftReport as CSV: fraction,threshold,eer,reference_threshold,seed
/// with one row per inclusion fraction. reference_threshold is empty
/// when the experiment had no remaining spoof subset.
std::string drift_report_csv(const DriftReport& report);

/// Error-rate curve as CSV: threshold,fpr,fnr per candidate threshold.
std::string curve_csv(const std::vector<ErrorRatePoint>& curve);

}  // namespace crosseval

#endif  // CROSSEVAL_REPORT_HPP_
