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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <string>
#include <vector>

#include <json.hpp>

#include "crosseval/errors.hpp"
#include "crosseval/report.hpp"

using namespace crosseval;

namespace {

EerOutcome cell(double eer, double threshold) {
  return EerOutcome{eer, threshold, eer, eer};
}

CrossTestMatrix one_by_one() {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b"};
  matrix.spoof_ids = {"s"};
  matrix.cells = {{cell(0.25, 4.0)}};
  return matrix;
}

CrossTestMatrix two_by_one() {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b1", "b2"};
  matrix.spoof_ids = {"s1"};
  matrix.cells = {{cell(0.25, 4.0)}, {cell(1.0, 2.0)}};
  return matrix;
}

std::vector<std::string> extract_fills(const std::string& svg) {
  std::vector<std::string> fills;
  std::size_t pos = 0;
  while ((pos = svg.find("fill=\"#", pos)) != std::string::npos) {
    fills.push_back(svg.substr(pos + 7, 6));
    pos += 7;
  }
  return fills;
}

std::size_t count_occurrences(const std::string& text,
                              const std::string& needle) {
  std::size_t count = 0;
  std::size_t pos = 0;
  while ((pos = text.find(needle, pos)) != std::string::npos) {
    ++count;
    pos += needle.size();
  }
  return count;
}

}  // namespace

TEST_CASE("one-by-one matrix CSV") {
  const MatrixTables tables = emit_matrix(one_by_one());
  CHECK(tables.matrix_csv == ",b\ns,0.250000\n");
  CHECK(tables.thresholds_csv == ",b\ns,4\n");
}

TEST_CASE("two bona fide columns") {
  const MatrixTables tables = emit_matrix(two_by_one());
  CHECK(tables.matrix_csv == ",b1,b2\ns1,0.250000,1.000000\n");
  CHECK(tables.thresholds_csv == ",b1,b2\ns1,4,2\n");
}

TEST_CASE("csv and thresholds share headers, ids with commas are quoted") {
  CrossTestMatrix matrix = two_by_one();
  matrix.bonafide_ids = {"b,1", "b\"2"};
  matrix.spoof_ids = {"syn, v2"};
  const MatrixTables tables = emit_matrix(matrix);
  CHECK(tables.matrix_csv.substr(0, tables.matrix_csv.find('\n')) ==
        ",\"b,1\",\"b\"\"2\"");
  CHECK(tables.matrix_csv.substr(0, tables.matrix_csv.find('\n')) ==
        tables.thresholds_csv.substr(0, tables.thresholds_csv.find('\n')));
  CHECK(tables.matrix_csv.find("\"syn, v2\"") != std::string::npos);
}

TEST_CASE("matrix JSON round-trips values exactly") {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b1", "b2"};
  matrix.spoof_ids = {"s1", "s2", "s3"};
  matrix.cells = {
      {EerOutcome{1.0 / 3.0, -3.78, 0.25, 5.0 / 12.0},
       EerOutcome{2.0 / 7.0, 1.95, 2.0 / 7.0, 2.0 / 7.0},
       EerOutcome{0.0, -3.67, 0.0, 0.0}},
      {EerOutcome{0.5, 0.1 + 0.2, 0.5, 0.5},
       EerOutcome{1.0, -1e-9, 1.0, 1.0},
       EerOutcome{0.125, 42.0, 0.25, 0.0}}};

  const MatrixTables tables = emit_matrix(matrix, 1234567890123456789ull);
  const ParsedMatrix parsed = parse_matrix_json(tables.matrix_json);
  CHECK(parsed.matrix == matrix);
  REQUIRE(parsed.seed.has_value());
  CHECK(*parsed.seed == 1234567890123456789ull);

  const MatrixTables no_seed = emit_matrix(matrix);
  CHECK_FALSE(parse_matrix_json(no_seed.matrix_json).seed.has_value());
}

TEST_CASE("matrix JSON parser validates structure") {
  CHECK_THROWS_AS(parse_matrix_json("not json"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("[]"), ParseError);
  CHECK_THROWS_AS(parse_matrix_json("{}"), ParseError);
  CHECK_THROWS_AS(
      parse_matrix_json(R"({"bonafide_ids":[],"spoof_ids":["s"],"cells":[]})"),
      ParseError);
  // Ragged row: two bona fide ids, one cell.
  CHECK_THROWS_AS(parse_matrix_json(
                      R"({"bonafide_ids":["a","b"],"spoof_ids":["s"],
                          "cells":[[{"eer":0,"threshold":0,"fpr":0,"fnr":0}]]})"),
                  ParseError);
  // Out-of-range rate.
  CHECK_THROWS_AS(parse_matrix_json(
                      R"({"bonafide_ids":["a"],"spoof_ids":["s"],
                          "cells":[[{"eer":1.5,"threshold":0,"fpr":0,"fnr":0}]]})"),
                  ParseError);
  // Missing cell field.
  CHECK_THROWS_AS(parse_matrix_json(
                      R"({"bonafide_ids":["a"],"spoof_ids":["s"],
                          "cells":[[{"eer":0.5,"threshold":0,"fpr":0.5}]]})"),
                  ParseError);
  // Bad seed type.
  CHECK_THROWS_AS(parse_matrix_json(
                      R"({"bonafide_ids":["a"],"spoof_ids":["s"],"seed":-1,
                          "cells":[[{"eer":0,"threshold":0,"fpr":0,"fnr":0}]]})"),
                  ParseError);
}

TEST_CASE("matrix JSON parser ignores unknown keys") {
  const std::string text =
      R"({"bonafide_ids":["a"],"spoof_ids":["s"],"extra":42,
          "cells":[[{"eer":0.5,"threshold":1,"fpr":0.5,"fnr":0.5,"note":"x"}]]})";
  const ParsedMatrix parsed = parse_matrix_json(text);
  CHECK(parsed.matrix.cells[0][0].eer == 0.5);
}

TEST_CASE("pooled markdown rounds half away from zero") {
  const std::vector<PooledRow> rows = {
      PooledRow{"b1", 0.95, "s1", 0.11},
      PooledRow{"b2", 0.40, "s2", 0.05}};
  const std::string md = emit_pooled(rows);
  CHECK(md.find("|  | b1 | b2 | avg. |") != std::string::npos);
  CHECK(md.find("| max. EER | 0.95 | 0.40 | 0.68 |") != std::string::npos);
  CHECK(md.find("| avg. EER | 0.11 | 0.05 | 0.08 |") != std::string::npos);
  CHECK(md.find("| hardest spoof subset | s1 | s2 |") != std::string::npos);
  CHECK(md.find("not percentages") != std::string::npos);
}

TEST_CASE("pooled markdown with a single column") {
  const std::vector<PooledRow> rows = {PooledRow{"b", 0.25, "s", 0.2}};
  const std::string md = emit_pooled(rows);
  CHECK(md.find("| max. EER | 0.25 | 0.25 |") != std::string::npos);
  CHECK(md.find("| avg. EER | 0.20 | 0.20 |") != std::string::npos);
}

TEST_CASE("heatmap endpoints are white and black") {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b"};
  matrix.spoof_ids = {"s0", "s1"};
  matrix.cells = {{cell(0.0, 0.0), cell(1.0, 0.0)}};
  const std::string svg = render_heatmap(matrix);
  CHECK(svg.find("fill=\"#ffffff\"") != std::string::npos);
  CHECK(svg.find("fill=\"#000000\"") != std::string::npos);
}

TEST_CASE("heatmap has one rectangle per cell") {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b1", "b2"};
  matrix.spoof_ids = {"s1", "s2"};
  matrix.cells = {{cell(0.1, 0), cell(0.2, 0)},
                  {cell(0.3, 0), cell(0.4, 0)}};
  const std::string svg = render_heatmap(matrix);
  CHECK(count_occurrences(svg, "<rect") == 4);
  for (const char* id : {"b1", "b2", "s1", "s2"}) {
    CHECK(svg.find(">" + std::string(id) + "</text>") != std::string::npos);
  }
}

TEST_CASE("strictly larger EER renders strictly darker") {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b"};
  matrix.spoof_ids = {"s1", "s2", "s3", "s4"};
  matrix.cells = {
      {cell(0.05, 0), cell(0.30, 0), cell(0.55, 0), cell(0.95, 0)}};
  const auto fills = extract_fills(render_heatmap(matrix));
  REQUIRE(fills.size() == 4);
  long previous = 256;
  for (const std::string& fill : fills) {
    const long channel = std::strtol(fill.substr(0, 2).c_str(), nullptr, 16);
    CHECK(channel < previous);
    previous = channel;
    CHECK(fill.substr(0, 2) == fill.substr(2, 2));
    CHECK(fill.substr(0, 2) == fill.substr(4, 2));
  }
}

TEST_CASE("emitters are byte-deterministic") {
  const CrossTestMatrix matrix = two_by_one();
  CHECK(emit_matrix(matrix, 5) == emit_matrix(matrix, 5));
  CHECK(render_heatmap(matrix) == render_heatmap(matrix));
  CHECK(make_report_bundle(matrix, 5) == make_report_bundle(matrix, 5));
}

TEST_CASE("ids appear escaped in the SVG") {
  CrossTestMatrix matrix = one_by_one();
  matrix.bonafide_ids = {"a<b>&\"c\""};
  const std::string svg = render_heatmap(matrix);
  CHECK(svg.find("a&lt;b&gt;&amp;&quot;c&quot;") != std::string::npos);
  CHECK(svg.find("<b>") == std::string::npos);
}

TEST_CASE("csv cells parse back to the stored EER") {
  CrossTestMatrix matrix;
  matrix.bonafide_ids = {"b1", "b2", "b3"};
  matrix.spoof_ids = {"s1", "s2"};
  matrix.cells.assign(3, std::vector<EerOutcome>(2));
  const double values[3][2] = {{1.0 / 3.0, 1.0 / 7.0},
                               {2.0 / 3.0, 0.123456789},
                               {1e-7, 0.9999999}};
  for (std::size_t k = 0; k < 3; ++k) {
    for (std::size_t m = 0; m < 2; ++m) {
      matrix.cells[k][m] = cell(values[k][m], 0.0);
    }
  }
  const std::string csv = emit_matrix(matrix).matrix_csv;

  // Tear the body apart line by line, cell by cell.
  std::vector<std::string> lines;
  std::size_t pos = 0;
  while (pos < csv.size()) {
    const std::size_t next = csv.find('\n', pos);
    lines.push_back(csv.substr(pos, next - pos));
    pos = next + 1;
  }
  REQUIRE(lines.size() == 3);
  for (std::size_t m = 0; m < 2; ++m) {
    const std::string& line = lines[m + 1];
    std::size_t start = 0;
    for (std::size_t k = 0; k < 3; ++k) {
      start = line.find(',', start) + 1;
      const double parsed = std::strtod(line.c_str() + start, nullptr);
      CHECK(std::abs(parsed - matrix.cells[k][m].eer) <= 5e-7);
    }
  }
}

TEST_CASE("report bundle carries five aligned files") {
  const CrossTestMatrix matrix = two_by_one();
  const ReportBundle bundle = make_report_bundle(matrix, 42);
  CHECK(bundle.matrix_csv.substr(0, bundle.matrix_csv.find('\n')) ==
        bundle.thresholds_csv.substr(0, bundle.thresholds_csv.find('\n')));
  const ParsedMatrix parsed = parse_matrix_json(bundle.matrix_json);
  CHECK(parsed.matrix.bonafide_ids == matrix.bonafide_ids);
  CHECK(parsed.matrix.spoof_ids == matrix.spoof_ids);
  for (const std::string& id : matrix.bonafide_ids) {
    CHECK(bundle.heatmap_svg.find(id) != std::string::npos);
    CHECK(bundle.pooled_md.find(id) != std::string::npos);
  }
}

TEST_CASE("malformed matrices are rejected by emitters") {
  CrossTestMatrix empty;
  CHECK_THROWS_AS(emit_matrix(empty), ValidationError);
  CrossTestMatrix ragged = two_by_one();
  ragged.cells[1].clear();
  CHECK_THROWS_AS(emit_matrix(ragged), ValidationError);
  CHECK_THROWS_AS(render_heatmap(ragged), ValidationError);
  CHECK_THROWS_AS(emit_pooled({}), ValidationError);
}

TEST_CASE("combined outcome JSON") {
  const EerOutcome outcome{0.125, -3.78, 0.25, 0.0};
  const WeightMap weights = {{"s1", 1.0}, {"s2", 0.01}};
  const std::string text = combined_json(outcome, 7, weights);
  const auto doc = nlohmann::json::parse(text);
  CHECK(doc["eer"].get<double>() == 0.125);
  CHECK(doc["threshold"].get<double>() == -3.78);
  CHECK(doc["fpr"].get<double>() == 0.25);
  CHECK(doc["fnr"].get<double>() == 0.0);
  CHECK(doc["seed"].get<std::uint64_t>() == 7);
  CHECK(doc["weights"]["s1"].get<double>() == 1.0);
  CHECK(doc["weights"]["s2"].get<double>() == 0.01);
}

TEST_CASE("spoof cross-test CSV") {
  const std::vector<std::string> ids = {"tts", "vc,2"};
  const std::vector<EerOutcome> outcomes = {
      EerOutcome{0.25, 4.0, 0.25, 0.25}, EerOutcome{0.0, 2.0, 0.0, 0.0}};
  CHECK(spoof_cross_csv(ids, outcomes) ==
        "spoof_id,eer,threshold,fpr,fnr\n"
        "tts,0.250000,4,0.250000,0.250000\n"
        "\"vc,2\",0.000000,2,0.000000,0.000000\n");
  CHECK_THROWS_AS(spoof_cross_csv({"a"}, {}), ValidationError);
}

TEST_CASE("drift report CSV") {
  DriftReport report;
  report.inclusion_fractions = {1.0, 0.5};
  report.thresholds = {4.2, 4.4};
  report.eers = {0.001, 0.002};
  report.reference_threshold = 4.5;
  report.seed = 9;
  CHECK(drift_report_csv(report) ==
        "fraction,threshold,eer,reference_threshold,seed\n"
        "1,4.2,0.001000,4.5,9\n"
        "0.5,4.4,0.002000,4.5,9\n");

  report.reference_threshold.reset();
  CHECK(drift_report_csv(report) ==
        "fraction,threshold,eer,reference_threshold,seed\n"
        "1,4.2,0.001000,,9\n"
        "0.5,4.4,0.002000,,9\n");

  DriftReport ragged = report;
  ragged.eers.pop_back();
  CHECK_THROWS_AS(drift_report_csv(ragged), ValidationError);
}

TEST_CASE("error-rate curve CSV") {
  const std::vector<ErrorRatePoint> curve = {
      ErrorRatePoint{0.0, 0.0, 1.0}, ErrorRatePoint{1.5, 0.5, 0.0}};
  CHECK(curve_csv(curve) ==
        "threshold,fpr,fnr\n"
        "0,0.000000,1.000000\n"
        "1.5,0.500000,0.000000\n");
}
