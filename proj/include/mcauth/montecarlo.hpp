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

#include "mcauth/channel.hpp"
#include "mcauth/detect.hpp"
#include "mcauth/rng.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace mcauth {

enum class Occupant { Alice, Eve };

/// Degrees of freedom handed to the threshold computation. RealModelL (df =
/// L) is exact for the real Gaussian measurement model and is the default;
/// Paper2L (df = 2L) replicates the complex-valued convention and makes the
/// threshold conservative (empirical false-alarm rate below alpha).
enum class DfMode { RealModelL, Paper2L };

/// One impersonation experiment: the legitimate link, the attacker's link
/// (same tap grid, different geometry/budget), and the receiver's
/// measurement model.
struct Scenario {
    ChannelParams alice_channel;
    ChannelParams eve_channel;
    MeasurementModel measurement;
    DfMode df_mode = DfMode::RealModelL;

    /// Both channels valid, tap grids identical, measurement matching L.
    void validate() const;

    int tap_count() const { return alice_channel.tap_count; }
    int degrees_of_freedom() const {
        return df_mode == DfMode::Paper2L ? 2 * tap_count() : tap_count();
    }

    /// 16-hex-digit FNV-1a fingerprint over every parameter; identical
    /// scenarios produce identical digests.
    std::string digest() const;
};

struct RocPoint {
    double alpha;
    double pfa_hat;
    double pmd_hat;
};

struct RocCurve {
    std::vector<RocPoint> points;
    std::uint64_t trials_per_point = 0;
    std::uint64_t seed = 0;
    std::string scenario_digest;
};

enum class Execution { Serial, OpenMp };

/// One noisy slot measurement z = h_occupant + v, with v drawn by coloring a
/// standard normal vector through the covariance's Cholesky factor.
std::vector<double> simulate_slot(Occupant occupant, const Scenario& scenario, SplitMix64& rng);

/// Empirical error probabilities at one prescribed false-alarm level:
/// `trials` legitimate slots and `trials` impersonated slots are pushed
/// through the test; pfa_hat is the rejected fraction of the former, pmd_hat
/// the accepted fraction of the latter. Every trial draws from a stream
/// derived only from (seed, hypothesis, trial index), so the result is
/// independent of execution order and thread count.
std::pair<double, double> estimate_error_probs(const Scenario& scenario, double alpha,
                                               std::uint64_t trials, std::uint64_t seed,
                                               Execution exec = Execution::OpenMp);

/// One curve point per alpha (strictly increasing, each in (0,1)); point i
/// uses the sub-seed derived from (seed, i), so any point is reproducible in
/// isolation.
RocCurve run_roc(const Scenario& scenario, std::span<const double> alphas, std::uint64_t trials,
                 std::uint64_t seed, Execution exec = Execution::OpenMp);

// --- trial kernels ---------------------------------------------------------
//
// The serial kernel is the reference implementation; the OpenMP kernel must
// produce bit-identical counts for any thread count. Both share the same
// per-trial routine; only the loop orchestration differs. The benchmark
// target compares their throughput.

/// Per-alpha precomputed state shared by every trial.
struct TrialKernel {
    Cir h_alice;
    Cir h_eve;
    CholeskyFactor noise_factor;  ///< Cholesky factor of the measurement covariance
    double threshold;
    int tap_count;

    static TrialKernel prepare(const Scenario& scenario, double alpha);
};

struct TrialCounts {
    std::uint64_t false_alarms = 0;      ///< legitimate slots rejected
    std::uint64_t missed_detections = 0; ///< impersonated slots accepted
};

TrialCounts run_trials_serial(const TrialKernel& kernel, std::uint64_t trials,
                              std::uint64_t seed);
TrialCounts run_trials_openmp(const TrialKernel& kernel, std::uint64_t trials,
                              std::uint64_t seed);

}  // namespace mcauth
