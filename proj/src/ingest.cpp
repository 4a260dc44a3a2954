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

#include "crosseval/ingest.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <ostream>
#include <unordered_map>
#include <unordered_set>
#include <utility>

#include "crosseval/errors.hpp"
#include "format_util.hpp"

namespace crosseval {

namespace {

constexpr const char* kManifestHeader = "utt_id,label,subset_id";

// getline + CRLF normalization.
bool read_line(std::istream& in, std::string& line) {
  if (!std::getline(in, line)) return false;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  return true;
}

double parse_score_value(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  const auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ParseError("malformed score '" + text + "'", line_no);
  }
  if (!std::isfinite(value)) {
    throw NonFiniteScoreError("line " + std::to_string(line_no) +
                              ": non-finite score '" + text + "'");
  }
  return value;
}

// Splits one RFC-4180 record into fields. Quoted fields may contain
// commas and doubled quotes; embedded line breaks are not supported
// (both formats here are strictly line-based).
std::vector<std::string> split_csv_record(const std::string& line,
                                          std::size_t line_no) {
  std::vector<std::string> fields;
  std::string field;
  std::size_t i = 0;
  const std::size_t n = line.size();
  for (;;) {
    field.clear();
    if (i < n && line[i] == '"') {
      ++i;
      for (;;) {
        if (i >= n) throw ParseError("unterminated quoted field", line_no);
        if (line[i] == '"') {
          if (i + 1 < n && line[i + 1] == '"') {
            field += '"';
            i += 2;
          } else {
            ++i;
            break;
          }
        } else {
          field += line[i++];
        }
      }
      if (i < n && line[i] != ',')
        throw ParseError("garbage after closing quote", line_no);
    } else {
      while (i < n && line[i] != ',') field += line[i++];
    }
    fields.push_back(field);
    if (i >= n) break;
    ++i;  // consume ','
  }
  return fields;
}

void check_id(const std::string& id, const char* what, std::size_t line_no) {
  if (id.empty()) throw ParseError(std::string("empty ") + what, line_no);
  if (id.find_first_of("\t\r\n") != std::string::npos) {
    throw ParseError(std::string(what) + " '" + id +
                         "' contains a tab or line break",
                     line_no);
  }
}

std::string trial_id(const std::string& subset_id, std::size_t index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "_%06zu", index);
  return subset_id + buf;
}

}  // namespace

std::map<std::string, double> parse_scores(std::istream& in) {
  std::map<std::string, double> scores;
  std::string line;
  std::size_t line_no = 0;
  while (read_line(in, line)) {
    ++line_no;
    const std::size_t tab = line.find('\t');
    if (tab == std::string::npos || tab == 0) {
      throw ParseError("expected '<utt_id>\\t<score>', got '" + line + "'",
                       line_no);
    }
    std::string utt_id = line.substr(0, tab);
    const double value = parse_score_value(line.substr(tab + 1), line_no);
    if (!scores.emplace(std::move(utt_id), value).second) {
      throw ParseError("duplicate utt_id '" + line.substr(0, tab) + "'",
                       line_no);
    }
  }
  return scores;
}

std::vector<ManifestEntry> parse_manifest(std::istream& in) {
  std::string line;
  if (!read_line(in, line) || line != kManifestHeader) {
    throw ParseError(std::string("manifest header must be exactly '") +
                         kManifestHeader + "'",
                     1);
  }

  std::vector<ManifestEntry> entries;
  std::unordered_set<std::string> seen_utts;
  std::unordered_map<std::string, ClassLabel> subset_labels;
  std::size_t line_no = 1;
  while (read_line(in, line)) {
    ++line_no;
    const auto fields = split_csv_record(line, line_no);
    if (fields.size() != 3) {
      throw ParseError("expected 3 fields, got " +
                           std::to_string(fields.size()),
                       line_no);
    }
    check_id(fields[0], "utt_id", line_no);
    check_id(fields[2], "subset_id", line_no);

    ClassLabel label;
    if (fields[1] == "bonafide") {
      label = ClassLabel::bonafide;
    } else if (fields[1] == "spoof") {
      label = ClassLabel::spoof;
    } else {
      throw ParseError("bad label '" + fields[1] +
                           "' (expected 'bonafide' or 'spoof')",
                       line_no);
    }

    if (!seen_utts.insert(fields[0]).second) {
      throw ParseError("duplicate utt_id '" + fields[0] + "'", line_no);
    }
    const auto [it, inserted] = subset_labels.emplace(fields[2], label);
    if (!inserted && it->second != label) {
      throw ParseError("subset '" + fields[2] +
                           "' appears with both labels",
                       line_no);
    }
    entries.push_back(ManifestEntry{fields[0], label, fields[2]});
  }
  return entries;
}

BuildResult build_store(const std::map<std::string, double>& scores,
                        const std::vector<ManifestEntry>& manifest,
                        bool invert) {
  // Group by subset in first-appearance order.
  std::vector<std::pair<std::string, ClassLabel>> order;
  std::unordered_map<std::string, std::vector<double>> grouped;
  for (const ManifestEntry& entry : manifest) {
    const auto it = scores.find(entry.utt_id);
    if (it == scores.end()) {
      throw ValidationError("manifest trial '" + entry.utt_id +
                            "' has no score");
    }
    auto [group, inserted] = grouped.emplace(entry.subset_id,
                                             std::vector<double>{});
    if (inserted) order.emplace_back(entry.subset_id, entry.label);
    group->second.push_back(invert ? -it->second : it->second);
  }

  std::vector<Subset> bonafide;
  std::vector<Subset> spoof;
  for (auto& [subset_id, label] : order) {
    auto& target = label == ClassLabel::bonafide ? bonafide : spoof;
    target.push_back(
        Subset{subset_id,
               ScoreSet(label, std::move(grouped[subset_id]), subset_id)});
  }

  std::size_t matched = manifest.size();
  return BuildResult{SubsetStore(std::move(bonafide), std::move(spoof)),
                     scores.size() - matched};
}

void write_scores(const SubsetStore& store, std::ostream& out) {
  for (const auto* subsets :
       {&store.bonafide_subsets(), &store.spoof_subsets()}) {
    for (const Subset& subset : *subsets) {
      const auto& values = subset.scores.scores();
      for (std::size_t i = 0; i < values.size(); ++i) {
        out << trial_id(subset.id, i) << '\t' << detail::shortest(values[i])
            << '\n';
      }
    }
  }
}

void write_manifest(const SubsetStore& store, std::ostream& out) {
  out << kManifestHeader << '\n';
  for (const auto* subsets :
       {&store.bonafide_subsets(), &store.spoof_subsets()}) {
    for (const Subset& subset : *subsets) {
      const std::string label = to_string(subset.scores.label());
      for (std::size_t i = 0; i < subset.scores.size(); ++i) {
        out << detail::csv_quote(trial_id(subset.id, i)) << ',' << label << ','
            << detail::csv_quote(subset.id) << '\n';
      }
    }
  }
}

}  // namespace crosseval
