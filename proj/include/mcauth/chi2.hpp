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

namespace mcauth {

/// Regularized lower incomplete gamma P(a, x): power series for x < a + 1,
/// complemented continued fraction (modified Lentz) otherwise.
double regularized_gamma_p(double a, double x);

/// Central chi-squared density with df degrees of freedom; 0 for x <= 0
/// (except df = 1 and df = 2, whose x -> 0+ limits diverge / equal 1/2 —
/// callers only evaluate at interior points).
double chi2_pdf(int df, double x);

/// Central chi-squared CDF, P(df/2, x/2).
double chi2_cdf(int df, double x);

/// Inverse CDF: the x with chi2_cdf(df, x) = p, by bisection-safeguarded
/// Newton on a bracketing interval, converged to |cdf(x) - p| <= 1e-10.
/// Throws std::domain_error outside df >= 1, 0 < p < 1, and
/// std::runtime_error if the iteration cap (200) is hit.
double chi2_quantile(int df, double p);

}  // namespace mcauth
