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

#include "crosseval/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <sstream>
#include <string>

#include <json.hpp>

#include "crosseval/errors.hpp"
#include "format_util.hpp"

namespace crosseval {

namespace {

using detail::csv_quote;
using detail::fixed;
using detail::fixed2_half_away;
using detail::shortest;

using json = nlohmann::ordered_json;

void check_matrix(const CrossTestMatrix& matrix) {
  const std::size_t k = matrix.bonafide_ids.size();
  const std::size_t m = matrix.spoof_ids.size();
  if (k == 0 || m == 0 || matrix.cells.size() != k) {
    throw ValidationError("malformed cross-test matrix");
  }
  for (const auto& row : matrix.cells) {
    if (row.size() != m) throw ValidationError("ragged cross-test matrix");
  }
}

// Shared header + row-label layout of matrix_csv and thresholds_csv.
template <typename CellFn>
std::string matrix_table(const CrossTestMatrix& matrix, CellFn&& cell) {
  std::string out;
  for (const std::string& id : matrix.bonafide_ids) {
    out += ',';
    out += csv_quote(id);
  }
  out += '\n';
  for (std::size_t m = 0; m < matrix.spoof_ids.size(); ++m) {
    out += csv_quote(matrix.spoof_ids[m]);
    for (std::size_t k = 0; k < matrix.bonafide_ids.size(); ++k) {
      out += ',';
      out += cell(matrix.cells[k][m]);
    }
    out += '\n';
  }
  return out;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string md_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

/// Grayscale fill, luminance linear in (1 - eer).
std::string heat_fill(double eer) {
  const long channel = std::lround(255.0 * (1.0 - eer));
  char buf[8];
  std::snprintf(buf, sizeof(buf), "#%02lx%02lx%02lx", channel, channel,
                channel);
  return buf;
}

double require_finite_number(const json& node, const char* what) {
  if (!node.is_number()) {
    throw ParseError(std::string("matrix json: ") + what +
                     " must be a number");
  }
  const double value = node.get<double>();
  if (!std::isfinite(value)) {
    throw ParseError(std::string("matrix json: ") + what +
                     " must be finite");
  }
  return value;
}

double require_rate(const json& node, const char* what) {
  const double value = require_finite_number(node, what);
  if (value < 0.0 || value > 1.0) {
    throw ParseError(std::string("matrix json: ") + what +
                     " must lie in [0, 1]");
  }
  return value;
}

std::vector<std::string> require_id_array(const json& node, const char* what) {
  if (!node.is_array() || node.empty()) {
    throw ParseError(std::string("matrix json: ") + what +
                     " must be a non-empty array of strings");
  }
  std::vector<std::string> ids;
  for (const auto& element : node) {
    if (!element.is_string()) {
      throw ParseError(std::string("matrix json: ") + what +
                       " must contain only strings");
    }
    ids.push_back(element.get<std::string>());
  }
  return ids;
}

}  // namespace

MatrixTables emit_matrix(const CrossTestMatrix& matrix,
                         std::optional<std::uint64_t> seed) {
  check_matrix(matrix);

  MatrixTables tables;
  tables.matrix_csv = matrix_table(
      matrix, [](const EerOutcome& cell) { return fixed(cell.eer, 6); });
  tables.thresholds_csv = matrix_table(
      matrix, [](const EerOutcome& cell) { return shortest(cell.threshold); });

  json doc;
  doc["bonafide_ids"] = matrix.bonafide_ids;
  doc["spoof_ids"] = matrix.spoof_ids;
  if (seed) doc["seed"] = *seed;
  json rows = json::array();
  for (std::size_t m = 0; m < matrix.spoof_ids.size(); ++m) {
    json row = json::array();
    for (std::size_t k = 0; k < matrix.bonafide_ids.size(); ++k) {
      const EerOutcome& cell = matrix.cells[k][m];
      row.push_back(json{{"eer", cell.eer},
                         {"threshold", cell.threshold},
                         {"fpr", cell.fpr},
                         {"fnr", cell.fnr}});
    }
    rows.push_back(std::move(row));
  }
  doc["cells"] = std::move(rows);
  tables.matrix_json = doc.dump(2) + "\n";
  return tables;
}

ParsedMatrix parse_matrix_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& error) {
    throw ParseError(std::string("matrix json: ") + error.what());
  }
  if (!doc.is_object()) throw ParseError("matrix json: not an object");
  if (!doc.contains("bonafide_ids") || !doc.contains("spoof_ids") ||
      !doc.contains("cells")) {
    throw ParseError(
        "matrix json: missing bonafide_ids, spoof_ids, or cells");
  }

  ParsedMatrix parsed;
  parsed.matrix.bonafide_ids =
      require_id_array(doc["bonafide_ids"], "bonafide_ids");
  parsed.matrix.spoof_ids = require_id_array(doc["spoof_ids"], "spoof_ids");
  const std::size_t k_count = parsed.matrix.bonafide_ids.size();
  const std::size_t m_count = parsed.matrix.spoof_ids.size();

  if (doc.contains("seed")) {
    const json& seed = doc["seed"];
    if (!seed.is_number_unsigned()) {
      throw ParseError("matrix json: seed must be an unsigned integer");
    }
    parsed.seed = seed.get<std::uint64_t>();
  }

  const json& rows = doc["cells"];
  if (!rows.is_array() || rows.size() != m_count) {
    throw ParseError("matrix json: cells must have one row per spoof id");
  }
  parsed.matrix.cells.assign(k_count, std::vector<EerOutcome>(m_count));
  for (std::size_t m = 0; m < m_count; ++m) {
    const json& row = rows[m];
    if (!row.is_array() || row.size() != k_count) {
      throw ParseError(
          "matrix json: each cells row must have one cell per bonafide id");
    }
    for (std::size_t k = 0; k < k_count; ++k) {
      const json& cell = row[k];
      if (!cell.is_object()) {
        throw ParseError("matrix json: cells must be objects");
      }
      if (!cell.contains("eer") || !cell.contains("threshold") ||
          !cell.contains("fpr") || !cell.contains("fnr")) {
        throw ParseError(
            "matrix json: cell is missing eer, threshold, fpr, or fnr");
      }
      EerOutcome& out = parsed.matrix.cells[k][m];
      out.eer = require_rate(cell["eer"], "eer");
      out.threshold = require_finite_number(cell["threshold"], "threshold");
      out.fpr = require_rate(cell["fpr"], "fpr");
      out.fnr = require_rate(cell["fnr"], "fnr");
    }
  }
  return parsed;
}

std::string emit_pooled(const std::vector<PooledRow>& rows) {
  if (rows.empty()) throw ValidationError("emit_pooled: no rows");

  double max_sum = 0.0;
  double mean_sum = 0.0;
  for (const PooledRow& row : rows) {
    max_sum += row.max_eer;
    mean_sum += row.mean_eer;
  }
  const double count = static_cast<double>(rows.size());

  std::string out = "# Pooled cross-test summary\n\n|  |";
  for (const PooledRow& row : rows) {
    out += ' ';
    out += md_escape(row.bonafide_id);
    out += " |";
  }
  out += " avg. |\n|---|";
  for (std::size_t i = 0; i < rows.size(); ++i) out += "---|";
  out += "---|\n| max. EER |";
  for (const PooledRow& row : rows) {
    out += ' ';
    out += fixed2_half_away(row.max_eer);
    out += " |";
  }
  out += ' ';
  out += fixed2_half_away(max_sum / count);
  out += " |\n| avg. EER |";
  for (const PooledRow& row : rows) {
    out += ' ';
    out += fixed2_half_away(row.mean_eer);
    out += " |";
  }
  out += ' ';
  out += fixed2_half_away(mean_sum / count);
  out += " |\n| hardest spoof subset |";
  for (const PooledRow& row : rows) {
    out += ' ';
    out += md_escape(row.argmax_spoof_id);
    out += " |";
  }
  out +=
      "  |\n\nValues are fractions in [0, 1], not percentages. Each column\n"
      "is one bona fide subset; max. EER is its worst single-synthesizer\n"
      "result and avg. EER the mean over synthesizers. The avg. column is\n"
      "the unweighted mean of the per-column values, shown for orientation\n"
      "only. The hardest row names the synthesizer behind each max.\n";
  return out;
}

std::string render_heatmap(const CrossTestMatrix& matrix) {
  check_matrix(matrix);

  const int cell_w = 28;
  const int cell_h = 16;
  const int char_w = 7;  // monospace 11px estimate
  const int k_count = static_cast<int>(matrix.bonafide_ids.size());
  const int m_count = static_cast<int>(matrix.spoof_ids.size());

  std::size_t max_spoof_len = 0;
  for (const auto& id : matrix.spoof_ids) {
    max_spoof_len = std::max(max_spoof_len, id.size());
  }
  std::size_t max_bonafide_len = 0;
  for (const auto& id : matrix.bonafide_ids) {
    max_bonafide_len = std::max(max_bonafide_len, id.size());
  }

  const int left = 12 + char_w * static_cast<int>(max_spoof_len);
  const int top = 12 + char_w * static_cast<int>(max_bonafide_len);
  const int width = left + k_count * cell_w + 12;
  const int height = top + m_count * cell_h + 12;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width
      << "\" height=\"" << height << "\" viewBox=\"0 0 " << width << ' '
      << height << "\">\n";
  for (int k = 0; k < k_count; ++k) {
    const int cx = left + k * cell_w + cell_w / 2 + 4;
    const int cy = top - 6;
    svg << "  <text x=\"" << cx << "\" y=\"" << cy << "\" transform=\"rotate(-90 "
        << cx << ' ' << cy << ")\" font-family=\"monospace\" font-size=\"11\""
        << " text-anchor=\"start\">"
        << xml_escape(matrix.bonafide_ids[static_cast<std::size_t>(k)])
        << "</text>\n";
  }
  for (int m = 0; m < m_count; ++m) {
    svg << "  <text x=\"" << left - 6 << "\" y=\""
        << top + m * cell_h + cell_h / 2 + 4
        << "\" font-family=\"monospace\" font-size=\"11\""
        << " text-anchor=\"end\">"
        << xml_escape(matrix.spoof_ids[static_cast<std::size_t>(m)])
        << "</text>\n";
  }
  for (int m = 0; m < m_count; ++m) {
    for (int k = 0; k < k_count; ++k) {
      const EerOutcome& cell =
          matrix.cells[static_cast<std::size_t>(k)][static_cast<std::size_t>(m)];
      svg << "  <rect x=\"" << left + k * cell_w << "\" y=\""
          << top + m * cell_h << "\" width=\"" << cell_w << "\" height=\""
          << cell_h << "\" fill=\"" << heat_fill(cell.eer)
          << "\" stroke=\"#888888\" stroke-width=\"0.5\"><title>"
          << xml_escape(matrix.spoof_ids[static_cast<std::size_t>(m)]) << " vs "
          << xml_escape(matrix.bonafide_ids[static_cast<std::size_t>(k)])
          << ": " << fixed(cell.eer, 6) << "</title></rect>\n";
    }
  }
  svg << "</svg>\n";
  return svg.str();
}

ReportBundle make_report_bundle(const CrossTestMatrix& matrix,
                                std::optional<std::uint64_t> seed) {
  MatrixTables tables = emit_matrix(matrix, seed);
  ReportBundle bundle;
  bundle.matrix_csv = std::move(tables.matrix_csv);
  bundle.thresholds_csv = std::move(tables.thresholds_csv);
  bundle.matrix_json = std::move(tables.matrix_json);
  bundle.pooled_md = emit_pooled(pool(matrix));
  bundle.heatmap_svg = render_heatmap(matrix);
  return bundle;
}

std::string combined_json(const EerOutcome& outcome, std::uint64_t seed,
                          const WeightMap& weights) {
  json doc;
  doc["eer"] = outcome.eer;
  doc["threshold"] = outcome.threshold;
  doc["fpr"] = outcome.fpr;
  doc["fnr"] = outcome.fnr;
  doc["seed"] = seed;
  json weights_doc = json::object();
  for (const auto& [id, fraction] : weights) weights_doc[id] = fraction;
  doc["weights"] = std::move(weights_doc);
  return doc.dump(2) + "\n";
}

std::string spoof_cross_csv(const std::vector<std::string>& spoof_ids,
                            const std::vector<EerOutcome>& outcomes) {
  if (spoof_ids.size() != outcomes.size() || spoof_ids.empty()) {
    throw ValidationError("spoof_cross_csv: id/outcome length mismatch");
  }
  std::string out = "spoof_id,eer,threshold,fpr,fnr\n";
  for (std::size_t m = 0; m < spoof_ids.size(); ++m) {
    out += csv_quote(spoof_ids[m]);
    out += ',';
    out += fixed(outcomes[m].eer, 6);
    out += ',';
    out += shortest(outcomes[m].threshold);
    out += ',';
    out += fixed(outcomes[m].fpr, 6);
    out += ',';
    out += fixed(outcomes[m].fnr, 6);
    out += '\n';
  }
  return out;
}

std::string drift_report_csv(const DriftReport& report) {
  const std::size_t n = report.inclusion_fractions.size();
  if (report.thresholds.size() != n || report.eers.size() != n || n == 0) {
    throw ValidationError("drift_report_csv: ragged report");
  }
  std::string out = "fraction,threshold,eer,reference_threshold,seed\n";
  const std::string reference =
      report.reference_threshold ? shortest(*report.reference_threshold)
                                 : std::string();
  for (std::size_t i = 0; i < n; ++i) {
    out += shortest(report.inclusion_fractions[i]);
    out += ',';
    out += shortest(report.thresholds[i]);
    out += ',';
    out += fixed(report.eers[i], 6);
    out += ',';
    out += reference;
    out += ',';
    out += std::to_string(report.seed);
    out += '\n';
  }
  return out;
}

std::string curve_csv(const std::vector<ErrorRatePoint>& curve) {
  std::string out = "threshold,fpr,fnr\n";
  for (const ErrorRatePoint& point : curve) {
    out += shortest(point.threshold);
    out += ',';
    out += fixed(point.fpr, 6);
    out += ',';
    out += fixed(point.fnr, 6);
    out += '\n';
  }
  return out;
}

}  // namespace crosseval
