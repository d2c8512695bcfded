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

#include "mcauth/estimation.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mcauth {

void TrainingFrame::validate() const {
    if (symbols.empty()) throw std::invalid_argument("TrainingFrame: frame has no symbols");
    for (int b : symbols) {
        if (b != 0 && b != 1)
            throw std::invalid_argument("TrainingFrame: symbols must be exactly 0 or 1");
    }
}

TrainingFrame random_training_frame(int length, int start_index, SplitMix64& rng) {
    if (length < 1) throw std::invalid_argument("random_training_frame: length must be >= 1");
    TrainingFrame frame;
    frame.start_index = start_index;
    frame.symbols.reserve(static_cast<std::size_t>(length));
    for (int i = 0; i < length; ++i) frame.symbols.push_back(rng.next_u64() >> 63 ? 1 : 0);
    return frame;
}

ReceivedFrame synthesize_received(const Cir& cir, const TrainingFrame& frame, double sigma2,
                                  SplitMix64& rng) {
    frame.validate();
    const int tap_count = cir.tap_count();
    if (tap_count < 1) throw std::invalid_argument("synthesize_received: empty impulse response");
    if (sigma2 < 0.0) throw std::domain_error("synthesize_received: sigma2 must be >= 0");
    const int k1 = frame.start_index;
    const int km = frame.end_index();
    if (km - k1 < tap_count - 1) {
        throw std::invalid_argument(
            "synthesize_received: frame too short, no fully supported output sample "
            "(need k_m - k_1 >= L - 1)");
    }
    const double noise_scale = std::sqrt(sigma2);
    ReceivedFrame out;
    out.samples.reserve(static_cast<std::size_t>(km - k1 - tap_count + 2));
    for (int k = k1 + tap_count - 1; k <= km; ++k) {
        double acc = 0.0;
        for (int l = 0; l < tap_count; ++l) acc += cir.taps[static_cast<std::size_t>(l)] * frame.symbol(k - l);
        if (noise_scale > 0.0) acc += noise_scale * rng.next_normal();
        out.samples.push_back(acc);
    }
    return out;
}

bool check_identifiability(const TrainingFrame& frame, int tap_count) {
    return frame.end_index() - frame.start_index >= 2 * tap_count;
}

Matrix build_training_matrix(const TrainingFrame& frame, int tap_count) {
    frame.validate();
    if (tap_count < 1) throw std::invalid_argument("build_training_matrix: tap_count must be >= 1");
    if (!check_identifiability(frame, tap_count)) {
        throw std::invalid_argument(
            "build_training_matrix: training too short for identifiability, need k_m-k_1 >= 2L "
            "(k_m-k_1 = " +
            std::to_string(frame.end_index() - frame.start_index) +
            ", L = " + std::to_string(tap_count) + ")");
    }
    const int k1 = frame.start_index;
    const int km = frame.end_index();
    const std::size_t rows = static_cast<std::size_t>(km - k1 - tap_count + 2);
    Matrix b(rows, static_cast<std::size_t>(tap_count), 0.0);
    for (std::size_t j = 0; j < rows; ++j) {
        for (int c = 0; c < tap_count; ++c) {
            b(j, static_cast<std::size_t>(c)) =
                static_cast<double>(frame.symbol(k1 + tap_count - 1 + static_cast<int>(j) - c));
        }
    }
    return b;
}

LsEstimate ls_estimate(const Matrix& training_matrix, const ReceivedFrame& received,
                       double sigma2) {
    if (received.samples.size() != training_matrix.rows()) {
        throw std::invalid_argument("ls_estimate: received length " +
                                    std::to_string(received.samples.size()) +
                                    " does not match training matrix rows " +
                                    std::to_string(training_matrix.rows()));
    }
    if (training_matrix.rows() < training_matrix.cols()) {
        throw std::invalid_argument("ls_estimate: underdetermined system (rows < cols)");
    }
    if (sigma2 < 0.0) throw std::domain_error("ls_estimate: sigma2 must be >= 0");

    const Matrix normal = gram(training_matrix);
    const CholeskyFactor factor = CholeskyFactor::decompose(normal);
    LsEstimate est;
    est.h_hat = factor.solve(matvec_transposed(training_matrix, received.samples));
    est.covariance = factor.inverse();
    const std::size_t n = est.covariance.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) est.covariance(i, j) *= sigma2;
    }
    return est;
}

}  // namespace mcauth
