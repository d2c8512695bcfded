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

#include <vector>

namespace mcauth {

/// One point-source diffusion link plus the tap grid used to read its
/// impulse response. Units are SI if you treat them so; every experiment in
/// this repository uses illustrative dimensionless values from its config.
struct ChannelParams {
    double diffusion_coefficient = 0.0;  ///< D > 0, area per time
    double distance = 0.0;               ///< emitter-receiver distance d > 0
    double molecules_per_slot = 0.0;     ///< Q >= 0, released per occupied slot
    int tap_count = 0;                   ///< L >= 1
    double tap_spacing = 0.0;            ///< time between consecutive taps, > 0
    double first_tap_time = 0.0;         ///< sample instant of tap 0, > 0

    /// Throws std::domain_error naming the offending field.
    void validate() const;

    double tap_time(int tap_index) const { return first_tap_time + tap_index * tap_spacing; }
};

/// Sampled channel impulse response: receiver-side molecule concentration at
/// each tap instant. Taps are non-negative by construction.
struct Cir {
    std::vector<double> taps;

    int tap_count() const { return static_cast<int>(taps.size()); }
};

/// Free 3D diffusion response to an instantaneous point release:
///
///     c(d, t) = Q / (4 pi D t)^(3/2) * exp(-d^2 / (4 D t))
///
/// The value at t = 0 is the right-hand limit, which is 0 for d > 0.
/// Throws std::domain_error for t < 0 or invalid params.
double concentration(const ChannelParams& params, double t);

/// Instant of maximum concentration: d^2 / (6 D).
double peak_time(const ChannelParams& params);

/// Impulse response read on the params' tap grid,
/// taps[l] = concentration at first_tap_time + l * tap_spacing.
Cir sample_cir(const ChannelParams& params);

}  // namespace mcauth
