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

#include <span>

namespace mcauth {

/// Gaussian error model of one CIR measurement, z = h + v with
/// v ~ N(0, covariance). The default covariance is sigma2 * I; when the
/// measurement comes out of a least-squares training pass it is
/// sigma2 * (B^T B)^{-1}.
struct MeasurementModel {
    double sigma2 = 0.0;
    Matrix covariance;

    static MeasurementModel isotropic(double sigma2, int tap_count);
    static MeasurementModel from_training(double sigma2, const Matrix& training_matrix);

    /// sigma2 > 0, covariance square, symmetric within 1e-12 relative, and
    /// Cholesky-factorizable. Throws std::domain_error / std::runtime_error.
    void validate() const;

    int dim() const { return static_cast<int>(covariance.rows()); }
};

enum class Verdict {
    AcceptH0,  ///< measurement consistent with the legitimate transmitter
    RejectH1,  ///< flagged as an impersonation
};

struct Decision {
    Verdict verdict;
    double statistic;  ///< observed T
};

/// Neyman-Pearson threshold: the (1 - alpha) chi-squared quantile with the
/// given degrees of freedom, so that Pr(T > threshold | legitimate) = alpha.
double compute_threshold(double alpha, int degrees_of_freedom);

/// Whitened squared deviation T = (z - reference)^T Sigma^{-1} (z - reference),
/// evaluated as the squared norm of the forward-substitution solution of
/// L y = z - reference (no inverse is formed).
double test_statistic(std::span<const double> z, const Cir& reference,
                      const MeasurementModel& model);

/// Immutable, ready-to-run authentication test: reference response, the
/// covariance's Cholesky factor, and the threshold for the prescribed
/// false-alarm probability.
class AuthTest {
  public:
    /// degrees_of_freedom must be L or 2L; the first matches the real-valued
    /// measurement model, the second the complex-valued convention (kept as
    /// an explicit replication mode, see DfMode).
    AuthTest(Cir reference, const MeasurementModel& model, double alpha, int degrees_of_freedom);

    const Cir& reference() const { return reference_; }
    const CholeskyFactor& covariance_factor() const { return factor_; }
    double threshold() const { return threshold_; }
    int degrees_of_freedom() const { return degrees_of_freedom_; }
    double alpha() const { return alpha_; }

  private:
    Cir reference_;
    CholeskyFactor factor_;
    double threshold_;
    int degrees_of_freedom_;
    double alpha_;
};

/// T > threshold rejects (impersonation called); equality accepts, matching
/// the threshold's one-sided definition.
Decision authenticate(std::span<const double> z, const AuthTest& test);

}  // namespace mcauth
