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

#include "mcauth/chi2.hpp"

#include <cmath>
#include <stdexcept>

namespace mcauth {

namespace {

constexpr double kSeriesEps = 1e-16;
constexpr int kSeriesMaxIter = 600;
constexpr double kLentzTiny = 1e-300;
constexpr double kQuantileCdfTol = 1e-10;
constexpr int kQuantileMaxIter = 200;

// P(a, x) by the ascending series x^a e^-x / Gamma(a) * sum x^k / (a)_{k+1}.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    double denom = a;
    for (int n = 0; n < kSeriesMaxIter; ++n) {
        denom += 1.0;
        term *= x / denom;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kSeriesEps) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("regularized_gamma_p: series did not converge");
}

// Q(a, x) by the continued fraction
//   x^a e^-x / Gamma(a) * 1/(x+1-a- 1*(1-a)/(x+3-a- 2*(2-a)/(x+5-a- ...)))
// evaluated with the modified Lentz method.
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kLentzTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kSeriesMaxIter; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kLentzTiny) d = kLentzTiny;
        c = b + an / c;
        if (std::abs(c) < kLentzTiny) c = kLentzTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kSeriesEps) {
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw std::runtime_error("regularized_gamma_p: continued fraction did not converge");
}

}  // namespace

double regularized_gamma_p(double a, double x) {
    if (!(a > 0.0)) throw std::domain_error("regularized_gamma_p: a must be > 0");
    if (x < 0.0) throw std::domain_error("regularized_gamma_p: x must be >= 0");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_contfrac(a, x);
}

double chi2_pdf(int df, double x) {
    if (df < 1) throw std::domain_error("chi2_pdf: df must be >= 1");
    if (x <= 0.0) return 0.0;
    const double half_df = 0.5 * static_cast<double>(df);
    return std::exp((half_df - 1.0) * std::log(x) - 0.5 * x - std::lgamma(half_df) -
                    half_df * 0.6931471805599453094172321214581766);
}

double chi2_cdf(int df, double x) {
    if (df < 1) throw std::domain_error("chi2_cdf: df must be >= 1");
    if (x <= 0.0) return 0.0;
    return regularized_gamma_p(0.5 * static_cast<double>(df), 0.5 * x);
}

double chi2_quantile(int df, double p) {
    if (df < 1) throw std::domain_error("chi2_quantile: df must be >= 1");
    if (!(p > 0.0 && p < 1.0)) throw std::domain_error("chi2_quantile: p must lie in (0, 1)");

    // bracket: cdf(lo) < p <= cdf(hi)
    double lo = 0.0;
    double hi = static_cast<double>(df);
    while (chi2_cdf(df, hi) < p) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) throw std::runtime_error("chi2_quantile: failed to bracket the quantile");
    }

    // Converge in CDF space (the stated contract) and then keep polishing
    // until the step stalls at machine level, so flat-density regions still
    // come out accurate in x.
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < kQuantileMaxIter; ++it) {
        const double f = chi2_cdf(df, x) - p;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        const double slope = chi2_pdf(df, x);
        double next = (slope > 0.0) ? x - f / slope : 0.5 * (lo + hi);
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) next = 0.5 * (lo + hi);
        const double step = std::abs(next - x);
        x = next;
        if (std::abs(f) <= kQuantileCdfTol && step <= 1e-12 * std::max(1.0, x)) return x;
    }
    throw std::runtime_error("chi2_quantile: no convergence within 200 iterations (numerics bug)");
}

}  // namespace mcauth
