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

#include "mcauth/montecarlo.hpp"

#include <cinttypes>
#include <cstdio>
#include <stdexcept>

namespace mcauth {

namespace {

void append_fnv(std::uint64_t& hash, const char* bytes, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        hash ^= static_cast<unsigned char>(bytes[i]);
        hash *= 1099511628211ull;
    }
}

void append_fnv_double(std::uint64_t& hash, double v) {
    char buf[32];
    const int n = std::snprintf(buf, sizeof(buf), "%.17g;", v);
    append_fnv(hash, buf, static_cast<std::size_t>(n));
}

void append_fnv_channel(std::uint64_t& hash, const ChannelParams& c) {
    append_fnv_double(hash, c.diffusion_coefficient);
    append_fnv_double(hash, c.distance);
    append_fnv_double(hash, c.molecules_per_slot);
    append_fnv_double(hash, static_cast<double>(c.tap_count));
    append_fnv_double(hash, c.tap_spacing);
    append_fnv_double(hash, c.first_tap_time);
}

// z - h_alice for the occupant's true response h: the H0 deviation is pure
// colored noise, the H1 deviation adds the response gap. Returns the test
// statistic of the slot.
double slot_statistic(const TrialKernel& kernel, const Cir& occupant_response,
                      std::uint64_t stream_seed, std::vector<double>& normals,
                      std::vector<double>& deviation) {
    SplitMix64 rng(stream_seed);
    fill_standard_normal(rng, normals);
    const std::vector<double> noise = kernel.noise_factor.multiply(normals);
    for (int i = 0; i < kernel.tap_count; ++i) {
        const auto u = static_cast<std::size_t>(i);
        deviation[u] = occupant_response.taps[u] + noise[u] - kernel.h_alice.taps[u];
    }
    const std::vector<double> whitened = kernel.noise_factor.forward_solve(deviation);
    double acc = 0.0;
    for (double v : whitened) acc += v * v;
    return acc;
}

struct TrialOutcome {
    bool false_alarm;
    bool missed_detection;
};

TrialOutcome run_one_trial(const TrialKernel& kernel, std::uint64_t h0_base, std::uint64_t h1_base,
                           std::uint64_t trial_index, std::vector<double>& normals,
                           std::vector<double>& deviation) {
    const double t0 = slot_statistic(kernel, kernel.h_alice, derive_seed(h0_base, trial_index),
                                     normals, deviation);
    const double t1 = slot_statistic(kernel, kernel.h_eve, derive_seed(h1_base, trial_index),
                                     normals, deviation);
    return TrialOutcome{t0 > kernel.threshold, !(t1 > kernel.threshold)};
}

}  // namespace

void Scenario::validate() const {
    alice_channel.validate();
    eve_channel.validate();
    measurement.validate();
    if (alice_channel.tap_count != eve_channel.tap_count)
        throw std::domain_error("Scenario: attacker tap_count differs from the legitimate link");
    if (alice_channel.tap_spacing != eve_channel.tap_spacing ||
        alice_channel.first_tap_time != eve_channel.first_tap_time)
        throw std::domain_error("Scenario: attacker tap grid differs from the legitimate link");
    if (measurement.dim() != alice_channel.tap_count)
        throw std::domain_error("Scenario: measurement covariance size does not match tap_count");
}

std::string Scenario::digest() const {
    std::uint64_t hash = 1469598103934665603ull;  // FNV offset basis
    append_fnv_channel(hash, alice_channel);
    append_fnv_channel(hash, eve_channel);
    append_fnv_double(hash, measurement.sigma2);
    for (std::size_t i = 0; i < measurement.covariance.rows(); ++i) {
        for (std::size_t j = 0; j < measurement.covariance.cols(); ++j) {
            append_fnv_double(hash, measurement.covariance(i, j));
        }
    }
    append_fnv_double(hash, df_mode == DfMode::Paper2L ? 2.0 : 1.0);
    char out[17];
    std::snprintf(out, sizeof(out), "%016" PRIx64, hash);
    return std::string(out);
}

std::vector<double> simulate_slot(Occupant occupant, const Scenario& scenario, SplitMix64& rng) {
    scenario.validate();
    const ChannelParams& channel =
        occupant == Occupant::Alice ? scenario.alice_channel : scenario.eve_channel;
    const Cir response = sample_cir(channel);
    const CholeskyFactor factor = CholeskyFactor::decompose(scenario.measurement.covariance);
    std::vector<double> normals(response.taps.size());
    fill_standard_normal(rng, normals);
    std::vector<double> z = factor.multiply(normals);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] += response.taps[i];
    return z;
}

TrialKernel TrialKernel::prepare(const Scenario& scenario, double alpha) {
    scenario.validate();
    return TrialKernel{sample_cir(scenario.alice_channel), sample_cir(scenario.eve_channel),
                       CholeskyFactor::decompose(scenario.measurement.covariance),
                       compute_threshold(alpha, scenario.degrees_of_freedom()),
                       scenario.tap_count()};
}

TrialCounts run_trials_serial(const TrialKernel& kernel, std::uint64_t trials,
                              std::uint64_t seed) {
    const std::uint64_t h0_base = derive_seed(seed, 0);
    const std::uint64_t h1_base = derive_seed(seed, 1);
    std::uint64_t fa = 0;
    std::uint64_t md = 0;
    std::vector<double> normals(static_cast<std::size_t>(kernel.tap_count));
    std::vector<double> deviation(static_cast<std::size_t>(kernel.tap_count));
    for (std::uint64_t i = 0; i < trials; ++i) {
        const TrialOutcome o = run_one_trial(kernel, h0_base, h1_base, i, normals, deviation);
        fa += o.false_alarm ? 1 : 0;
        md += o.missed_detection ? 1 : 0;
    }
    return TrialCounts{fa, md};
}

TrialCounts run_trials_openmp(const TrialKernel& kernel, std::uint64_t trials,
                              std::uint64_t seed) {
    const std::uint64_t h0_base = derive_seed(seed, 0);
    const std::uint64_t h1_base = derive_seed(seed, 1);
    std::uint64_t fa = 0;
    std::uint64_t md = 0;
    const auto n = static_cast<std::int64_t>(trials);
#pragma omp parallel reduction(+ : fa, md)
    {
        std::vector<double> normals(static_cast<std::size_t>(kernel.tap_count));
        std::vector<double> deviation(static_cast<std::size_t>(kernel.tap_count));
#pragma omp for schedule(static)
        for (std::int64_t i = 0; i < n; ++i) {
            const TrialOutcome o = run_one_trial(kernel, h0_base, h1_base,
                                                 static_cast<std::uint64_t>(i), normals, deviation);
            fa += o.false_alarm ? 1 : 0;
            md += o.missed_detection ? 1 : 0;
        }
    }
    return TrialCounts{fa, md};
}

std::pair<double, double> estimate_error_probs(const Scenario& scenario, double alpha,
                                               std::uint64_t trials, std::uint64_t seed,
                                               Execution exec) {
    if (trials < 1) throw std::domain_error("estimate_error_probs: trials must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("estimate_error_probs: alpha must lie in (0, 1)");
    const TrialKernel kernel = TrialKernel::prepare(scenario, alpha);
    const TrialCounts counts = exec == Execution::Serial ? run_trials_serial(kernel, trials, seed)
                                                         : run_trials_openmp(kernel, trials, seed);
    const double denom = static_cast<double>(trials);
    return {static_cast<double>(counts.false_alarms) / denom,
            static_cast<double>(counts.missed_detections) / denom};
}

RocCurve run_roc(const Scenario& scenario, std::span<const double> alphas, std::uint64_t trials,
                 std::uint64_t seed, Execution exec) {
    if (alphas.empty()) throw std::domain_error("run_roc: need at least one alpha");
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (!(alphas[i] > 0.0 && alphas[i] < 1.0))
            throw std::domain_error("run_roc: alphas must lie in (0, 1)");
        if (i > 0 && !(alphas[i] > alphas[i - 1]))
            throw std::domain_error("run_roc: alphas must be strictly increasing");
    }
    RocCurve curve;
    curve.trials_per_point = trials;
    curve.seed = seed;
    curve.scenario_digest = scenario.digest();
    curve.points.reserve(alphas.size());
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        const auto [pfa, pmd] =
            estimate_error_probs(scenario, alphas[i], trials, derive_seed(seed, i), exec);
        curve.points.push_back(RocPoint{alphas[i], pfa, pmd});
    }
    return curve;
}

}  // namespace mcauth
