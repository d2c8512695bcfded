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

#include "mcauth/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace mcauth {

namespace {
constexpr double kFourPi = 12.566370614359172953850573533118;
}

void ChannelParams::validate() const {
    if (!(diffusion_coefficient > 0.0))
        throw std::domain_error("ChannelParams: diffusion_coefficient must be > 0");
    if (!(distance > 0.0)) throw std::domain_error("ChannelParams: distance must be > 0");
    if (!(molecules_per_slot >= 0.0))
        throw std::domain_error("ChannelParams: molecules_per_slot must be >= 0");
    if (tap_count < 1) throw std::domain_error("ChannelParams: tap_count must be >= 1");
    if (!(tap_spacing > 0.0)) throw std::domain_error("ChannelParams: tap_spacing must be > 0");
    if (!(first_tap_time > 0.0))
        throw std::domain_error("ChannelParams: first_tap_time must be > 0");
}

double concentration(const ChannelParams& params, double t) {
    params.validate();
    if (t < 0.0) throw std::domain_error("concentration: t must be >= 0");
    if (t == 0.0) return 0.0;
    // Q kept as a single multiplicative factor so scaling in Q is exact.
    const double spread = kFourPi * params.diffusion_coefficient * t;
    const double shape =
        std::exp(-params.distance * params.distance /
                 (4.0 * params.diffusion_coefficient * t)) /
        (spread * std::sqrt(spread));
    return params.molecules_per_slot * shape;
}

double peak_time(const ChannelParams& params) {
    params.validate();
    return params.distance * params.distance / (6.0 * params.diffusion_coefficient);
}

Cir sample_cir(const ChannelParams& params) {
    params.validate();
    Cir cir;
    cir.taps.reserve(static_cast<std::size_t>(params.tap_count));
    for (int l = 0; l < params.tap_count; ++l) {
        cir.taps.push_back(concentration(params, params.tap_time(l)));
    }
    return cir;
}

}  // namespace mcauth
