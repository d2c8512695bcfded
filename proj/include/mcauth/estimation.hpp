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
#include "mcauth/linalg.hpp"
#include "mcauth/rng.hpp"

#include <vector>

namespace mcauth {

/// On/off training symbols b[k], k = start_index .. end_index().
struct TrainingFrame {
    std::vector<int> symbols;  ///< each exactly 0 or 1
    int start_index = 0;       ///< k_1

    int end_index() const { return start_index + static_cast<int>(symbols.size()) - 1; }
    int symbol(int k) const { return symbols[static_cast<std::size_t>(k - start_index)]; }

    /// Throws std::invalid_argument on an empty frame or non-binary symbols.
    void validate() const;
};

/// Received samples over the fully supported output range,
/// r[k_1 + L - 1], ..., r[k_m].
struct ReceivedFrame {
    std::vector<double> samples;
};

struct LsEstimate {
    std::vector<double> h_hat;  ///< length = training-matrix column count
    Matrix covariance;          ///< sigma2 * (B^T B)^{-1}
};

/// i.i.d. equiprobable 0/1 symbols from the stream.
TrainingFrame random_training_frame(int length, int start_index, SplitMix64& rng);

/// r[k] = sum_{l=0}^{L-1} h[l] b[k - l] + w[k] for k = k_1 + L - 1 .. k_m,
/// with w[k] i.i.d. N(0, sigma2). sigma2 = 0 gives the noiseless convolution.
/// Throws std::invalid_argument when the frame has no fully supported output
/// sample (k_m - k_1 < L - 1).
ReceivedFrame synthesize_received(const Cir& cir, const TrainingFrame& frame, double sigma2,
                                  SplitMix64& rng);

/// Training-length condition for a full-column-rank training matrix:
/// k_m - k_1 >= 2L.
bool check_identifiability(const TrainingFrame& frame, int tap_count);

/// Toeplitz convolution matrix with row j, column c holding
/// b[k_1 + L - 1 + j - c], so that B h equals the noiseless received frame
/// exactly. Throws std::invalid_argument when check_identifiability fails.
Matrix build_training_matrix(const TrainingFrame& frame, int tap_count);

/// Least-squares channel estimate from r = B h + w:
///   h_hat solves the normal equations through a Cholesky factorization of
///   B^T B (no explicit inverse on the solve path);
///   covariance = sigma2 * (B^T B)^{-1}, the one place the inverse is formed.
/// Throws std::runtime_error when B^T B fails the factorization (rank-
/// deficient training), std::invalid_argument on dimension mismatch.
LsEstimate ls_estimate(const Matrix& training_matrix, const ReceivedFrame& received,
                       double sigma2);

}  // namespace mcauth
