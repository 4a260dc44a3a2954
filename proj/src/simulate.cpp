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

#include "crosseval/simulate.hpp"

#include <charconv>
#include <cmath>
#include <unordered_set>
#include <utility>

#include "crosseval/crosstest.hpp"
#include "crosseval/errors.hpp"
#include "crosseval/rng.hpp"

namespace crosseval {

namespace {

void validate_spec(const SimulationSpec& spec) {
  if (spec.components.empty()) {
    throw ValidationError("simulation spec has no components");
  }
  std::unordered_set<std::string> ids;
  std::size_t per_label[2] = {0, 0};
  for (const SimComponent& c : spec.components) {
    if (c.subset_id.empty()) {
      throw ValidationError("simulation component with empty subset_id");
    }
    if (!ids.insert(c.subset_id).second) {
      throw ValidationError("duplicate simulation subset_id '" + c.subset_id +
                            "'");
    }
    if (!std::isfinite(c.mean)) {
      throw ValidationError("component '" + c.subset_id +
                            "': mean must be finite");
    }
    if (!std::isfinite(c.stddev) || c.stddev <= 0.0) {
      throw ValidationError("component '" + c.subset_id +
                            "': stddev must be positive");
    }
    if (c.count < 1) {
      throw ValidationError("component '" + c.subset_id +
                            "': count must be at least 1");
    }
    ++per_label[c.label == ClassLabel::spoof ? 1 : 0];
  }
  if (per_label[0] == 0 || per_label[1] == 0) {
    throw ValidationError(
        "simulation spec needs at least one bonafide and one spoof component");
  }
}

}  // namespace

SubsetStore generate(const SimulationSpec& spec) {
  validate_spec(spec);
  std::vector<Subset> bonafide;
  std::vector<Subset> spoof;
  for (std::size_t i = 0; i < spec.components.size(); ++i) {
    const SimComponent& c = spec.components[i];
    GaussianStream stream(substream_seed(spec.seed, i));
    std::vector<double> values;
    values.reserve(c.count);
    for (std::size_t j = 0; j < c.count; ++j) {
      values.push_back(c.mean + c.stddev * stream.next());
    }
    auto& target = c.label == ClassLabel::bonafide ? bonafide : spoof;
    target.push_back(
        Subset{c.subset_id,
               ScoreSet(c.label, std::move(values), c.subset_id)});
  }
  return SubsetStore(std::move(bonafide), std::move(spoof));
}

DriftReport drift_experiment(const SimulationSpec& spec,
                             const std::string& shrink_subset,
                             const std::vector<double>& fractions) {
  bool shrink_is_spoof = false;
  for (const SimComponent& c : spec.components) {
    if (c.subset_id == shrink_subset) {
      shrink_is_spoof = c.label == ClassLabel::spoof;
      break;
    }
  }
  if (!shrink_is_spoof) {
    throw ValidationError("unknown spoof subset '" + shrink_subset + "'");
  }
  if (fractions.empty()) {
    throw ValidationError("drift experiment needs at least one fraction");
  }
  for (std::size_t i = 0; i < fractions.size(); ++i) {
    if (!(fractions[i] > 0.0) || fractions[i] > 1.0) {
      throw ValidationError("inclusion fractions must lie in (0, 1]");
    }
    if (i > 0 && fractions[i] >= fractions[i - 1]) {
      throw ValidationError("inclusion fractions must strictly decrease");
    }
  }

  const SubsetStore store = generate(spec);

  std::vector<double> pooled_bonafide;
  for (const Subset& subset : store.bonafide_subsets()) {
    const auto& values = subset.scores.scores();
    pooled_bonafide.insert(pooled_bonafide.end(), values.begin(),
                           values.end());
  }
  const ScoreSet bonafide(ClassLabel::bonafide, std::move(pooled_bonafide),
                          "<pooled bonafide>");

  DriftReport report;
  report.inclusion_fractions = fractions;
  report.seed = spec.seed;
  for (const double fraction : fractions) {
    WeightMap weights;
    weights[shrink_subset] = fraction;
    const EerOutcome outcome =
        combined_eer(bonafide, store.spoof_subsets(), weights, spec.seed);
    report.thresholds.push_back(outcome.threshold);
    report.eers.push_back(outcome.eer);
  }

  std::vector<Subset> remaining;
  for (const Subset& subset : store.spoof_subsets()) {
    if (subset.id != shrink_subset) remaining.push_back(subset);
  }
  if (!remaining.empty()) {
    report.reference_threshold =
        combined_eer(bonafide, remaining, WeightMap{}, spec.seed).threshold;
  }
  return report;
}

namespace {

std::string trim(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  std::size_t b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

double parse_real(const std::string& text, std::size_t line_no) {
  double value = 0.0;
  const char* begin = text.data();
  const auto [ptr, ec] = std::from_chars(begin, begin + text.size(), value);
  if (ec != std::errc{} || ptr != begin + text.size() || text.empty()) {
    throw ParseError("malformed number '" + text + "'", line_no);
  }
  return value;
}

std::size_t parse_count(const std::string& text, std::size_t line_no) {
  std::size_t value = 0;
  const char* begin = text.data();
  const auto [ptr, ec] = std::from_chars(begin, begin + text.size(), value);
  if (ec != std::errc{} || ptr != begin + text.size() || text.empty()) {
    throw ParseError("malformed count '" + text + "'", line_no);
  }
  return value;
}

// One [component] block under construction; flags track which keys the
// block has set so far.
struct PendingComponent {
  SimComponent component;
  std::size_t header_line = 0;
  bool has_id = false, has_label = false, has_mean = false,
       has_stddev = false, has_count = false;
};

void commit(PendingComponent& pending, SimulationSpec& spec) {
  const char* missing = nullptr;
  if (!pending.has_id) missing = "id";
  else if (!pending.has_label) missing = "label";
  else if (!pending.has_mean) missing = "mean";
  else if (!pending.has_stddev) missing = "stddev";
  else if (!pending.has_count) missing = "count";
  if (missing) {
    throw ParseError(std::string("[component] is missing key '") + missing +
                         "'",
                     pending.header_line);
  }
  spec.components.push_back(std::move(pending.component));
}

}  // namespace

SimulationConfig parse_simulation_config(std::istream& in) {
  enum class Section { none, simulation, component, drift };

  SimulationConfig config;
  Section section = Section::none;
  std::optional<PendingComponent> pending;
  bool seen_drift = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (!raw.empty() && raw.back() == '\r') raw.pop_back();
    const std::string line = trim(raw);
    if (line.empty() || line[0] == '#') continue;

    if (line.front() == '[') {
      if (line.back() != ']') {
        throw ParseError("malformed section header '" + line + "'", line_no);
      }
      if (pending) {
        commit(*pending, config.spec);
        pending.reset();
      }
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name == "simulation") {
        section = Section::simulation;
      } else if (name == "component") {
        section = Section::component;
        pending.emplace();
        pending->header_line = line_no;
      } else if (name == "drift") {
        if (seen_drift) throw ParseError("duplicate [drift] section", line_no);
        seen_drift = true;
        section = Section::drift;
        config.drift.emplace();
      } else {
        throw ParseError("unknown section '[" + name + "]'", line_no);
      }
      continue;
    }

    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) {
      throw ParseError("expected 'key = value', got '" + line + "'", line_no);
    }
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", line_no);

    switch (section) {
      case Section::none:
        throw ParseError("key '" + key + "' outside any section", line_no);
      case Section::simulation:
        if (key == "seed") {
          std::uint64_t seed = 0;
          const char* begin = value.data();
          const auto [ptr, ec] =
              std::from_chars(begin, begin + value.size(), seed);
          if (ec != std::errc{} || ptr != begin + value.size() ||
              value.empty()) {
            throw ParseError("malformed seed '" + value + "'", line_no);
          }
          config.spec.seed = seed;
        } else {
          throw ParseError("unknown [simulation] key '" + key + "'", line_no);
        }
        break;
      case Section::component: {
        PendingComponent& p = *pending;
        if (key == "id") {
          if (p.has_id) throw ParseError("duplicate key 'id'", line_no);
          if (value.empty()) throw ParseError("empty id", line_no);
          p.component.subset_id = value;
          p.has_id = true;
        } else if (key == "label") {
          if (p.has_label) throw ParseError("duplicate key 'label'", line_no);
          if (value == "bonafide") {
            p.component.label = ClassLabel::bonafide;
          } else if (value == "spoof") {
            p.component.label = ClassLabel::spoof;
          } else {
            throw ParseError("bad label '" + value +
                                 "' (expected 'bonafide' or 'spoof')",
                             line_no);
          }
          p.has_label = true;
        } else if (key == "mean") {
          if (p.has_mean) throw ParseError("duplicate key 'mean'", line_no);
          p.component.mean = parse_real(value, line_no);
          p.has_mean = true;
        } else if (key == "stddev") {
          if (p.has_stddev)
            throw ParseError("duplicate key 'stddev'", line_no);
          p.component.stddev = parse_real(value, line_no);
          p.has_stddev = true;
        } else if (key == "count") {
          if (p.has_count) throw ParseError("duplicate key 'count'", line_no);
          p.component.count = parse_count(value, line_no);
          p.has_count = true;
        } else {
          throw ParseError("unknown [component] key '" + key + "'", line_no);
        }
        break;
      }
      case Section::drift:
        if (key == "shrink") {
          if (value.empty()) throw ParseError("empty shrink subset", line_no);
          config.drift->shrink_subset = value;
        } else if (key == "fractions") {
          std::vector<double>& fractions = config.drift->fractions;
          if (!fractions.empty()) {
            throw ParseError("duplicate key 'fractions'", line_no);
          }
          std::size_t start = 0;
          while (start <= value.size()) {
            std::size_t comma = value.find(',', start);
            if (comma == std::string::npos) comma = value.size();
            fractions.push_back(
                parse_real(trim(value.substr(start, comma - start)), line_no));
            start = comma + 1;
          }
        } else {
          throw ParseError("unknown [drift] key '" + key + "'", line_no);
        }
        break;
    }
  }

  if (pending) commit(*pending, config.spec);
  if (config.drift) {
    if (config.drift->shrink_subset.empty()) {
      throw ParseError("[drift] is missing key 'shrink'");
    }
    if (config.drift->fractions.empty()) {
      throw ParseError("[drift] is missing key 'fractions'");
    }
  }
  return config;
}

}  // namespace crosseval
