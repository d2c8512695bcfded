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

#include "mcauth/detect.hpp"

#include "mcauth/chi2.hpp"

#include <stdexcept>
#include <vector>

namespace mcauth {

namespace {

double whitened_sq_norm(const CholeskyFactor& factor, std::span<const double> deviation) {
    const std::vector<double> y = factor.forward_solve(deviation);
    double acc = 0.0;
    for (double v : y) acc += v * v;
    return acc;
}

std::vector<double> deviation_from(std::span<const double> z, const Cir& reference) {
    if (z.size() != reference.taps.size())
        throw std::invalid_argument("test_statistic: measurement length does not match reference");
    std::vector<double> d(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) d[i] = z[i] - reference.taps[i];
    return d;
}

CholeskyFactor validated_factor(const MeasurementModel& model, const Cir& reference, double alpha,
                                int degrees_of_freedom) {
    const int taps = reference.tap_count();
    if (model.dim() != taps)
        throw std::invalid_argument("AuthTest: covariance size does not match reference CIR");
    if (degrees_of_freedom != taps && degrees_of_freedom != 2 * taps)
        throw std::domain_error("AuthTest: degrees_of_freedom must be L or 2L");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("AuthTest: alpha must lie in (0, 1)");
    if (!(model.sigma2 > 0.0)) throw std::domain_error("MeasurementModel: sigma2 must be > 0");
    if (!symmetric_within(model.covariance, 1e-12))
        throw std::domain_error("MeasurementModel: covariance is not symmetric within 1e-12");
    return CholeskyFactor::decompose(model.covariance);
}

}  // namespace

MeasurementModel MeasurementModel::isotropic(double sigma2, int tap_count) {
    if (!(sigma2 > 0.0)) throw std::domain_error("MeasurementModel: sigma2 must be > 0");
    if (tap_count < 1) throw std::domain_error("MeasurementModel: tap_count must be >= 1");
    MeasurementModel m;
    m.sigma2 = sigma2;
    m.covariance = Matrix::identity(static_cast<std::size_t>(tap_count));
    for (int i = 0; i < tap_count; ++i)
        m.covariance(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = sigma2;
    return m;
}

MeasurementModel MeasurementModel::from_training(double sigma2, const Matrix& training_matrix) {
    if (!(sigma2 > 0.0)) throw std::domain_error("MeasurementModel: sigma2 must be > 0");
    const CholeskyFactor factor = CholeskyFactor::decompose(gram(training_matrix));
    MeasurementModel m;
    m.sigma2 = sigma2;
    m.covariance = factor.inverse();
    const std::size_t n = m.covariance.rows();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m.covariance(i, j) *= sigma2;
    }
    return m;
}

void MeasurementModel::validate() const {
    if (!(sigma2 > 0.0)) throw std::domain_error("MeasurementModel: sigma2 must be > 0");
    if (covariance.rows() == 0 || covariance.rows() != covariance.cols())
        throw std::domain_error("MeasurementModel: covariance must be square and non-empty");
    if (!symmetric_within(covariance, 1e-12))
        throw std::domain_error("MeasurementModel: covariance is not symmetric within 1e-12");
    CholeskyFactor::decompose(covariance);  // throws when not SPD
}

double compute_threshold(double alpha, int degrees_of_freedom) {
    return chi2_quantile(degrees_of_freedom, 1.0 - alpha);
}

double test_statistic(std::span<const double> z, const Cir& reference,
                      const MeasurementModel& model) {
    if (model.dim() != reference.tap_count())
        throw std::invalid_argument("test_statistic: covariance size does not match reference");
    const CholeskyFactor factor = CholeskyFactor::decompose(model.covariance);
    return whitened_sq_norm(factor, deviation_from(z, reference));
}

AuthTest::AuthTest(Cir reference, const MeasurementModel& model, double alpha,
                   int degrees_of_freedom)
    : reference_(std::move(reference)),
      factor_(validated_factor(model, reference_, alpha, degrees_of_freedom)),
      threshold_(compute_threshold(alpha, degrees_of_freedom)),
      degrees_of_freedom_(degrees_of_freedom),
      alpha_(alpha) {}

Decision authenticate(std::span<const double> z, const AuthTest& test) {
    const double t = whitened_sq_norm(test.covariance_factor(), deviation_from(z, test.reference()));
    return Decision{t > test.threshold() ? Verdict::RejectH1 : Verdict::AcceptH0, t};
}

}  // namespace mcauth
