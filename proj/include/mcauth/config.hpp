// mcauth - CIR-based physical layer authentication for diffusive molecular links
// Copyright (C) 2026 the mcauth authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include "mcauth/montecarlo.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcauth {

/// Every key-level problem found while loading a config, aggregated into a
/// single report so a broken file surfaces all its mistakes at once.
class ConfigError : public std::runtime_error {
  public:
    explicit ConfigError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

  private:
    std::vector<std::string> issues_;
};

struct RunSettings {
    std::vector<double> alphas;         ///< strictly increasing, each in (0,1)
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    std::vector<int> tap_counts;        ///< sweep; defaults to the channel's L
    std::vector<double> sigma2_values;  ///< sweep; defaults to the noise sigma2
};

/// Parsed, fully validated experiment description.
///
/// File format: INI-style sections [channel], [attacker], [noise], [test],
/// [run]; `key = value` lines; `#`/`;` comments. Unknown sections or keys are
/// hard errors. The tap grid may be pinned explicitly (first_tap_time +
/// tap_spacing, both or neither) or left to the peak-centred default: first
/// tap at peak_time / 2, spacing peak_time / L.
struct ExperimentConfig {
    ChannelParams alice;      ///< with grid resolved for alice.tap_count
    ChannelParams eve;        ///< same grid; attacker distance/budget
    double sigma2 = 1.0;
    DfMode df_mode = DfMode::RealModelL;
    double alpha = 0.05;      ///< single-point default when [run] alphas absent
    RunSettings run;
    bool explicit_grid = false;

    static ExperimentConfig load(const std::string& path);
    static ExperimentConfig parse(const std::string& text, const std::string& origin);

    /// Scenario for one (tap_count, sigma2) combination of the sweep; the
    /// peak-centred grid is recomputed for that tap count unless the grid
    /// was explicit.
    Scenario scenario_for(int tap_count, double sigma2_value) const;

    /// Base combination: the [channel] tap count and [noise] sigma2.
    Scenario scenario() const { return scenario_for(alice.tap_count, sigma2); }
};

}  // namespace mcauth
