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

#include "oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <stdexcept>

using mcauth::ChannelParams;
using mcauth::Cir;
using mcauth::concentration;
using mcauth::peak_time;
using mcauth::sample_cir;

namespace {

// The sample experiment link: peak at t = 37.5, L = 4 grid 18.75 .. 46.875.
ChannelParams sample_params(int tap_count = 4) {
    ChannelParams p;
    p.diffusion_coefficient = 1.0;
    p.distance = 15.0;
    p.molecules_per_slot = 5e5;
    p.tap_count = tap_count;
    p.first_tap_time = 18.75;
    p.tap_spacing = 37.5 / tap_count;
    return p;
}

}  // namespace

TEST_CASE("concentration: zero release and t = 0 edge values") {
    ChannelParams p = sample_params();
    p.molecules_per_slot = 0.0;
    CHECK(concentration(p, 12.0) == 0.0);
    CHECK(concentration(sample_params(), 0.0) == 0.0);
}

TEST_CASE("concentration: matches 50-digit reference evaluation") {
    const ChannelParams p = sample_params();
    // reference values computed with 50-digit arithmetic
    const struct {
        double t;
        double expected;
    } cases[] = {
        {18.75, 6.8828745578454352},  {28.125, 10.184212388601921},
        {37.5, 10.906027384803802},   {46.875, 10.533917408005190},
        {10.0, 1.2801142956982103},   {100.0, 6.3953536081109153},
    };
    for (const auto& c : cases) {
        CHECK(concentration(p, c.t) == doctest::Approx(c.expected).epsilon(1e-12));
    }
}

TEST_CASE("concentration: rejects negative time and bad params") {
    CHECK_THROWS_AS(concentration(sample_params(), -1.0), std::domain_error);
    ChannelParams bad = sample_params();
    bad.distance = 0.0;
    CHECK_THROWS_AS(concentration(bad, 1.0), std::domain_error);
    bad = sample_params();
    bad.diffusion_coefficient = -0.5;
    CHECK_THROWS_AS(concentration(bad, 1.0), std::domain_error);
    bad = sample_params();
    bad.molecules_per_slot = -1.0;
    CHECK_THROWS_AS(concentration(bad, 1.0), std::domain_error);
}

TEST_CASE("concentration: exact linear scaling in the molecule budget") {
    ChannelParams p = sample_params();
    ChannelParams doubled = p;
    doubled.molecules_per_slot = 2.0 * p.molecules_per_slot;
    for (double t : {0.5, 5.0, 18.75, 37.5, 120.0, 3000.0}) {
        CHECK(concentration(doubled, t) == 2.0 * concentration(p, t));
    }
}

TEST_CASE("concentration: unimodal, rising before the peak and falling after") {
    const ChannelParams p = sample_params();
    const double peak = peak_time(p);
    double prev = concentration(p, peak / 64.0);
    for (int i = 2; i <= 64; ++i) {
        const double c = concentration(p, peak * i / 64.0);
        CHECK(c > prev);
        prev = c;
    }
    prev = concentration(p, peak);
    for (int i = 1; i <= 64; ++i) {
        const double c = concentration(p, peak * (1.0 + i / 8.0));
        CHECK(c < prev);
        prev = c;
    }
}

TEST_CASE("concentration: vanishes for large t") {
    const ChannelParams p = sample_params();
    CHECK(concentration(p, 1e10) < 1e-10);
    CHECK(concentration(p, 1e12) < 1e-13);
}

TEST_CASE("peak_time: closed form and scaling") {
    ChannelParams p = sample_params();
    p.distance = 1.0;
    p.diffusion_coefficient = 1.0 / 6.0;
    CHECK(peak_time(p) == doctest::Approx(1.0).epsilon(1e-15));

    ChannelParams wide = p;
    wide.distance = 2.0;
    CHECK(peak_time(wide) == doctest::Approx(4.0 * peak_time(p)).epsilon(1e-15));
}

TEST_CASE("peak_time: agrees with a dense scan of the pulse") {
    const ChannelParams p = sample_params();
    const double analytic = peak_time(p);
    const int steps = 200000;  // step = peak / 1e5 over (0, 2 * peak]
    const double scanned = mcauth::oracles::scan_peak_time(p, 2.0 * analytic, steps);
    CHECK(std::abs(scanned - analytic) <= 2.0 * analytic / steps);
}

TEST_CASE("sample_cir: matches the pointwise solution on the grid") {
    const Cir cir = sample_cir(sample_params());
    REQUIRE(cir.tap_count() == 4);
    const double expected[] = {6.8828745578454352, 10.184212388601921, 10.906027384803802,
                               10.533917408005190};
    for (int l = 0; l < 4; ++l) {
        CHECK(cir.taps[l] == doctest::Approx(expected[l]).epsilon(1e-12));
        CHECK(cir.taps[l] >= 0.0);
    }
}

TEST_CASE("sample_cir: degenerate single-tap grid") {
    ChannelParams p = sample_params(1);
    const Cir cir = sample_cir(p);
    REQUIRE(cir.tap_count() == 1);
    CHECK(cir.taps[0] == concentration(p, p.first_tap_time));
}

TEST_CASE("sample_cir: zero budget gives the all-zero response") {
    ChannelParams p = sample_params(8);
    p.molecules_per_slot = 0.0;
    const Cir cir = sample_cir(p);
    REQUIRE(cir.tap_count() == 8);
    for (double tap : cir.taps) CHECK(tap == 0.0);
}

TEST_CASE("sample_cir: deterministic") {
    const Cir a = sample_cir(sample_params(12));
    const Cir b = sample_cir(sample_params(12));
    REQUIRE(a.taps.size() == b.taps.size());
    for (std::size_t i = 0; i < a.taps.size(); ++i) CHECK(a.taps[i] == b.taps[i]);
}
