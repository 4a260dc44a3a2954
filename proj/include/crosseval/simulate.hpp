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
// Synthetic score generation. Each component draws `count` scores from
// Normal(mean, stddev^2) on its own substream of the run seed, so a
// spec generates bit-identical stores on every platform. On top of that
// sits the threshold-drift experiment: one spoof subset is included at
// shrinking fractions of its size while the EER threshold of the
// combined test set is tracked against the threshold obtained with that
// subset omitted.

#ifndef CROSSEVAL_SIMULATE_HPP_
#define CROSSEVAL_SIMULATE_HPP_

#include <cstdint>
#include <istream>
#include <optional>
#include <string>
#include <vector>

#include "crosseval/score_set.hpp"
#include "crosseval/subset_store.hpp"

namespace crosseval {

/// One synthetic subset: `count` draws from Normal(mean, stddev^2).
struct SimComponent {
  std::string subset_id;
  ClassLabel label = ClassLabel::bonafide;
  double mean = 0.0;
  double stddev = 1.0;
  std::size_t count = 0;

  friend bool operator==(const SimComponent&, const SimComponent&) = default;
};

/// A full synthetic evaluation: at least one component per class,
/// stddev > 0 and count >= 1 everywhere, unique subset ids.
struct SimulationSpec {
  std::vector<SimComponent> components;
  std::uint64_t seed = 0;

  friend bool operator==(const SimulationSpec&, const SimulationSpec&) =
      default;
};

/// Result of drift_experiment: parallel arrays over the requested
/// inclusion fractions, plus the threshold of the same combined test
/// with the shrinking subset left out entirely (absent when that subset
/// is the only spoof component).
struct DriftReport {
  std::vector<double> inclusion_fractions;  // strictly decreasing
  std::vector<double> thresholds;           // tau-hat per fraction
  std::vector<double> eers;
  std::optional<double> reference_threshold;
  std::uint64_t seed = 0;

  friend bool operator==(const DriftReport&, const DriftReport&) = default;
};

/// Materializes the spec into a SubsetStore. Component i draws from the
/// substream keyed by i, so output depends only on (seed, component
/// order). Throws ValidationError on an invalid spec.
SubsetStore generate(const SimulationSpec& spec);

/// Runs the shrinking-subset experiment: for each fraction f the
/// combined test set is rebuilt with weight f on `shrink_subset` and 1
/// on every other spoof subset, and the combined EER and threshold are
/// recorded. Throws ValidationError when `shrink_subset` is not a spoof
/// component of the spec or the fractions are not strictly decreasing
/// within (0, 1]. All bona fide components are pooled into one set.
DriftReport drift_experiment(const SimulationSpec& spec,
                             const std::string& shrink_subset,
                             const std::vector<double>& fractions);

/// Drift settings as read from a config file.
struct DriftConfig {
  std::string shrink_subset;
  std::vector<double> fractions;

  friend bool operator==(const DriftConfig&, const DriftConfig&) = default;
};

/// A parsed simulation config: the spec plus the optional drift block.
struct SimulationConfig {
  SimulationSpec spec;
  std::optional<DriftConfig> drift;

  friend bool operator==(const SimulationConfig&, const SimulationConfig&) =
      default;
};

/// Parses the plain-text simulation config format:
///
///   # comment lines start with '#'
///   [simulation]
///   seed = 7            # optional, default 0
///
///   [component]         # one block per subset, all five keys required
///   id = bonafide_eval
///   label = bonafide    # bonafide | spoof
///   mean = 5.0
///   stddev = 1.0
///   count = 10000
///
///   [drift]             # optional
///   shrink = spoof_neural
///   fractions = 1.0, 0.5, 0.1, 0.01
///
/// Keys are `name = value`, one per line; blank lines ignored. Throws
/// ParseError (with line number) on anything malformed.
SimulationConfig parse_simulation_config(std::istream& in);

}  // namespace crosseval

#endif  // CROSSEVAL_SIMULATE_HPP_
