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
//
// Throughput comparison of the serial reference kernel against the OpenMP
// kernel, on the shipped-style scenario. Counts must agree exactly; wall
// times and the speedup are reported.
//
// usage: mcauth_bench [trials] [tap_count]

#include "mcauth/montecarlo.hpp"

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

mcauth::Scenario make_scenario(int tap_count) {
    mcauth::ChannelParams alice;
    alice.diffusion_coefficient = 1.0;
    alice.distance = 15.0;
    alice.molecules_per_slot = 5e5;
    alice.tap_count = tap_count;
    const double peak = 15.0 * 15.0 / 6.0;
    alice.first_tap_time = 0.5 * peak;
    alice.tap_spacing = peak / tap_count;

    mcauth::ChannelParams eve = alice;
    eve.distance = 16.5;

    mcauth::Scenario s;
    s.alice_channel = alice;
    s.eve_channel = eve;
    s.measurement = mcauth::MeasurementModel::isotropic(1.0, tap_count);
    s.df_mode = mcauth::DfMode::RealModelL;
    return s;
}

template <typename F>
double time_ms(F&& f) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    const std::uint64_t trials = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
    const int tap_count = argc > 2 ? std::atoi(argv[2]) : 12;

    const mcauth::Scenario scenario = make_scenario(tap_count);
    const mcauth::TrialKernel kernel = mcauth::TrialKernel::prepare(scenario, 0.05);

    mcauth::TrialCounts serial_counts{};
    mcauth::TrialCounts openmp_counts{};

    // warm-up pass so page faults and thread spin-up stay out of the timings
    (void)mcauth::run_trials_openmp(kernel, trials / 10 + 1, 99);

    const double serial_ms =
        time_ms([&] { serial_counts = mcauth::run_trials_serial(kernel, trials, 42); });
    const double openmp_ms =
        time_ms([&] { openmp_counts = mcauth::run_trials_openmp(kernel, trials, 42); });

    int threads = 1;
#ifdef _OPENMP
    threads = omp_get_max_threads();
#endif

    std::printf("trials: %llu  taps: %d  threads: %d\n",
                static_cast<unsigned long long>(trials), tap_count, threads);
    std::printf("serial: %9.2f ms  (%llu false alarms, %llu missed)\n", serial_ms,
                static_cast<unsigned long long>(serial_counts.false_alarms),
                static_cast<unsigned long long>(serial_counts.missed_detections));
    std::printf("openmp: %9.2f ms  (%llu false alarms, %llu missed)\n", openmp_ms,
                static_cast<unsigned long long>(openmp_counts.false_alarms),
                static_cast<unsigned long long>(openmp_counts.missed_detections));
    std::printf("speedup: %.2fx\n", serial_ms / openmp_ms);

    const bool match = serial_counts.false_alarms == openmp_counts.false_alarms &&
                       serial_counts.missed_detections == openmp_counts.missed_detections;
    std::printf("counts %s\n", match ? "match" : "DIFFER");
    return match ? 0 : 1;
}
