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
// Canonical file formats and their ingestion.
//
// Score file: UTF-8 text, LF or CRLF line endings, one record per line:
//
//   <utt_id> TAB <score>
//
// No header, no comments, no blank lines. Scores are finite decimals
// (scientific notation accepted).
//
// Trial manifest: CSV with the exact header `utt_id,label,subset_id`;
// label is `bonafide` or `spoof`. Fields may be RFC-4180 quoted (commas
// and doubled quotes inside quotes); embedded line breaks and tabs in
// ids are not supported. A subset id must carry one label consistently.

#ifndef CROSSEVAL_INGEST_HPP_
#define CROSSEVAL_INGEST_HPP_

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "crosseval/subset_store.hpp"

namespace crosseval {

/// One manifest row: a trial's identity, class label, and subset.
struct ManifestEntry {
  std::string utt_id;
  ClassLabel label = ClassLabel::bonafide;
  std::string subset_id;

  friend bool operator==(const ManifestEntry&, const ManifestEntry&) = default;
};

/// Parses a score file. Throws ParseError (with line number) on
/// malformed lines or duplicate ids and NonFiniteScoreError on NaN or
/// infinite scores. An empty stream yields an empty map.
std::map<std::string, double> parse_scores(std::istream& in);

/// Parses a trial manifest. Throws ParseError on a bad header, bad
/// label, malformed row, duplicate utt_id, or a subset id that appears
/// with both labels.
std::vector<ManifestEntry> parse_manifest(std::istream& in);

struct BuildResult {
  SubsetStore store;
  /// Score-file records that no manifest row referenced. These are
  /// skipped (real score files often cover a superset of trials), but
  /// callers should surface the count as a warning.
  std::size_t unmatched_scores = 0;
};

/// Joins scores with the manifest, optionally negating every score
/// (for detectors that emit higher = spoof), groups trials by subset,
/// and sorts each group. A manifest trial without a score is a hard
/// error (dropping trials would bias the error-rate denominators).
BuildResult build_store(const std::map<std::string, double>& scores,
                        const std::vector<ManifestEntry>& manifest,
                        bool invert = false);

/// Serializes a store back to the canonical formats. Trial ids are
/// synthesized as `<subset_id>_<index>` over the sorted scores; scores
/// are printed with shortest round-trip precision, so parsing the two
/// files again rebuilds an identical store.
void write_scores(const SubsetStore& store, std::ostream& out);
void write_manifest(const SubsetStore& store, std::ostream& out);

}  // namespace crosseval

#endif  // CROSSEVAL_INGEST_HPP_
