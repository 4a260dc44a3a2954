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
// crosseval: score-file cross-testing for spoofing countermeasures.
//
//   crosseval eval     --scores s.tsv --manifest m.csv --out out/
//   crosseval pool     --matrix out/matrix.json --out pooled/
//   crosseval report   --matrix out/matrix.json --out report/
//   crosseval simulate --config drift.cfg --out sim/
//
// Exit codes: 0 success, 1 validation or parse error, 2 I/O error.
// Progress ("wrote <path>") goes to stdout, diagnostics to stderr.

#include <charconv>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "crosseval/crosstest.hpp"
#include "crosseval/errors.hpp"
#include "crosseval/ingest.hpp"
#include "crosseval/report.hpp"
#include "crosseval/simulate.hpp"

namespace fs = std::filesystem;

namespace {

using namespace crosseval;

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  return in;
}

std::string read_file(const std::string& path) {
  std::ifstream in = open_input(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading '" + path + "'");
  return buffer.str();
}

/// Creates out_dir if needed; refuses a non-empty one without --force.
fs::path prepare_out_dir(const std::string& out_dir, bool force) {
  const fs::path path(out_dir);
  std::error_code ec;
  fs::create_directories(path, ec);
  if (ec) {
    throw IoError("cannot create output directory '" + out_dir + "': " +
                  ec.message());
  }
  if (!force && fs::directory_iterator(path, ec) != fs::directory_iterator()) {
    throw ValidationError("output directory '" + out_dir +
                          "' is not empty (pass --force to overwrite)");
  }
  if (ec) {
    throw IoError("cannot inspect output directory '" + out_dir + "': " +
                  ec.message());
  }
  return path;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
  std::cout << "wrote " << path.string() << "\n";
}

WeightMap parse_weights(const std::vector<std::string>& raw) {
  WeightMap weights;
  for (const std::string& item : raw) {
    const std::size_t eq = item.rfind('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == item.size()) {
      throw ValidationError("bad --weight '" + item +
                            "' (expected <subset_id>=<fraction>)");
    }
    const std::string id = item.substr(0, eq);
    const std::string text = item.substr(eq + 1);
    double fraction = 0.0;
    const char* begin = text.data();
    const auto [ptr, parse_ec] =
        std::from_chars(begin, begin + text.size(), fraction);
    if (parse_ec != std::errc{} || ptr != begin + text.size()) {
      throw ValidationError("bad --weight fraction '" + text + "'");
    }
    if (!weights.emplace(id, fraction).second) {
      throw ValidationError("duplicate --weight for subset '" + id + "'");
    }
  }
  return weights;
}

struct EvalArgs {
  std::string scores_path;
  std::string manifest_path;
  std::string mode = "matrix";
  bool invert = false;
  std::vector<std::string> weight_args;
  std::uint64_t seed = 0;
  unsigned parallelism = 0;
  std::string out_dir;
  bool force = false;
};

void run_eval(const EvalArgs& args) {
  const WeightMap weights = parse_weights(args.weight_args);
  if (!weights.empty() && args.mode != "combined") {
    throw ValidationError("--weight is only valid with --mode combined");
  }

  std::ifstream scores_in = open_input(args.scores_path);
  const auto scores = parse_scores(scores_in);
  std::ifstream manifest_in = open_input(args.manifest_path);
  const auto manifest = parse_manifest(manifest_in);
  const BuildResult built = build_store(scores, manifest, args.invert);
  if (built.unmatched_scores > 0) {
    std::cerr << "note: " << built.unmatched_scores
              << " score(s) had no manifest entry and were ignored\n";
  }
  const SubsetStore& store = built.store;
  const fs::path out = prepare_out_dir(args.out_dir, args.force);

  if (args.mode == "matrix") {
    const CrossTestMatrix matrix = cross_test(store, args.parallelism);
    const ReportBundle bundle = make_report_bundle(matrix, args.seed);
    write_file(out / "matrix.csv", bundle.matrix_csv);
    write_file(out / "thresholds.csv", bundle.thresholds_csv);
    write_file(out / "matrix.json", bundle.matrix_json);
    write_file(out / "heatmap.svg", bundle.heatmap_svg);
    write_file(out / "pooled.md", bundle.pooled_md);
    return;
  }

  if (args.mode == "combined") {
    std::vector<double> pooled;
    for (const Subset& subset : store.bonafide_subsets()) {
      const auto& values = subset.scores.scores();
      pooled.insert(pooled.end(), values.begin(), values.end());
    }
    const ScoreSet bonafide(ClassLabel::bonafide, std::move(pooled),
                            "<pooled bonafide>");
    const EerOutcome outcome =
        combined_eer(bonafide, store.spoof_subsets(), weights, args.seed);
    // Echo the weights actually applied (default 1 when unnamed).
    WeightMap effective = weights;
    for (const Subset& subset : store.spoof_subsets()) {
      effective.emplace(subset.id, 1.0);
    }
    write_file(out / "combined.json",
               combined_json(outcome, args.seed, effective));
    return;
  }

  // spoof-cross: one bona fide set against each synthesizer in turn.
  if (store.num_bonafide() != 1) {
    throw ValidationError(
        "--mode spoof-cross needs exactly one bona fide subset (got " +
        std::to_string(store.num_bonafide()) + "); use --mode matrix");
  }
  const std::vector<EerOutcome> row =
      spoof_cross_test(store.bonafide_subsets()[0].scores,
                       store.spoof_subsets());
  std::vector<std::string> spoof_ids;
  for (const Subset& subset : store.spoof_subsets()) {
    spoof_ids.push_back(subset.id);
  }
  write_file(out / "spoof_cross.csv", spoof_cross_csv(spoof_ids, row));
}

void run_pool(const std::string& matrix_path, const std::string& out_dir,
              bool force) {
  const ParsedMatrix parsed = parse_matrix_json(read_file(matrix_path));
  const fs::path out = prepare_out_dir(out_dir, force);
  write_file(out / "pooled.md", emit_pooled(pool(parsed.matrix)));
}

void run_report(const std::string& matrix_path, const std::string& out_dir,
                bool force) {
  const ParsedMatrix parsed = parse_matrix_json(read_file(matrix_path));
  const fs::path out = prepare_out_dir(out_dir, force);
  const ReportBundle bundle = make_report_bundle(parsed.matrix, parsed.seed);
  write_file(out / "matrix.csv", bundle.matrix_csv);
  write_file(out / "thresholds.csv", bundle.thresholds_csv);
  write_file(out / "matrix.json", bundle.matrix_json);
  write_file(out / "heatmap.svg", bundle.heatmap_svg);
  write_file(out / "pooled.md", bundle.pooled_md);
}

void run_simulate(const std::string& config_path, bool seed_given,
                  std::uint64_t seed, const std::string& out_dir, bool force) {
  std::ifstream config_in = open_input(config_path);
  SimulationConfig config = parse_simulation_config(config_in);
  if (seed_given) config.spec.seed = seed;

  const SubsetStore store = generate(config.spec);
  const fs::path out = prepare_out_dir(out_dir, force);
  std::cout << "seed " << config.spec.seed << "\n";

  std::ostringstream scores_out;
  write_scores(store, scores_out);
  write_file(out / "scores.tsv", scores_out.str());

  std::ostringstream manifest_out;
  write_manifest(store, manifest_out);
  write_file(out / "manifest.csv", manifest_out.str());

  if (config.drift) {
    const DriftReport report = drift_experiment(
        config.spec, config.drift->shrink_subset, config.drift->fractions);
    write_file(out / "drift_report.csv", drift_report_csv(report));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cross-testing EER evaluation for spoofing countermeasures"};
  app.require_subcommand(1);

  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());

  EvalArgs eval_args;
  eval_args.parallelism = hw;
  CLI::App* eval = app.add_subcommand(
      "eval", "Evaluate score files against a manifest");
  eval->add_option("--scores", eval_args.scores_path,
                   "Score file (<utt_id>\\t<score> per line)")
      ->required();
  eval->add_option("--manifest", eval_args.manifest_path,
                   "Trial manifest CSV (utt_id,label,subset_id)")
      ->required();
  eval->add_option("--mode", eval_args.mode,
                   "matrix (default), spoof-cross, or combined")
      ->check(CLI::IsMember({"matrix", "spoof-cross", "combined"}));
  eval->add_flag("--invert", eval_args.invert,
                 "Negate scores (for higher-means-spoof systems)");
  eval->add_option("--weight", eval_args.weight_args,
                   "Inclusion fraction <subset_id>=<fraction> "
                   "(combined mode; repeatable)");
  eval->add_option("--seed", eval_args.seed, "Subsampling seed (default 0)");
  eval->add_option("--parallelism", eval_args.parallelism,
                   "Worker threads for the matrix (default: cores)")
      ->check(CLI::Range(1u, 1024u));
  eval->add_option("--out", eval_args.out_dir, "Output directory")->required();
  eval->add_flag("--force", eval_args.force,
                 "Write into a non-empty output directory");

  std::string pool_matrix_path;
  std::string pool_out_dir;
  bool pool_force = false;
  CLI::App* pool_cmd = app.add_subcommand(
      "pool", "Recompute the pooled summary from a matrix JSON");
  pool_cmd->add_option("--matrix", pool_matrix_path, "matrix.json path")
      ->required();
  pool_cmd->add_option("--out", pool_out_dir, "Output directory")->required();
  pool_cmd->add_flag("--force", pool_force,
                     "Write into a non-empty output directory");

  std::string report_matrix_path;
  std::string report_out_dir;
  bool report_force = false;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "Re-render all report files from a matrix JSON");
  report_cmd->add_option("--matrix", report_matrix_path, "matrix.json path")
      ->required();
  report_cmd->add_option("--out", report_out_dir, "Output directory")
      ->required();
  report_cmd->add_flag("--force", report_force,
                       "Write into a non-empty output directory");

  std::string sim_config_path;
  std::uint64_t sim_seed = 0;
  std::string sim_out_dir;
  bool sim_force = false;
  CLI::App* simulate_cmd = app.add_subcommand(
      "simulate", "Generate synthetic scores from a config");
  simulate_cmd->add_option("--config", sim_config_path,
                           "Simulation config file")
      ->required();
  CLI::Option* sim_seed_opt = simulate_cmd->add_option(
      "--seed", sim_seed, "Seed (overrides the config's seed)");
  simulate_cmd->add_option("--out", sim_out_dir, "Output directory")
      ->required();
  simulate_cmd->add_flag("--force", sim_force,
                         "Write into a non-empty output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& error) {
    const int code = app.exit(error);
    return code == 0 ? 0 : 1;
  }

  try {
    if (eval->parsed()) {
      run_eval(eval_args);
    } else if (pool_cmd->parsed()) {
      run_pool(pool_matrix_path, pool_out_dir, pool_force);
    } else if (report_cmd->parsed()) {
      run_report(report_matrix_path, report_out_dir, report_force);
    } else if (simulate_cmd->parsed()) {
      run_simulate(sim_config_path, sim_seed_opt->count() > 0, sim_seed,
                   sim_out_dir, sim_force);
    }
  } catch (const IoError& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 2;
  } catch (const Error& error) {
    std::cerr << "error: " << error.what() << "\n";
    return 1;
  } catch (const std::exception& error) {
    std::cerr << "internal error: " << error.what() << "\n";
    return 1;
  }
  return 0;
}
