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

#include "mcauth/linalg.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace mcauth {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

std::vector<double> matvec(const Matrix& a, std::span<const double> x) {
    if (x.size() != a.cols()) throw std::invalid_argument("matvec: dimension mismatch");
    std::vector<double> y(a.rows(), 0.0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < a.cols(); ++j) acc += a(i, j) * x[j];
        y[i] = acc;
    }
    return y;
}

Matrix gram(const Matrix& b) {
    const std::size_t n = b.cols();
    Matrix g(n, n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) {
            double acc = 0.0;
            for (std::size_t k = 0; k < b.rows(); ++k) acc += b(k, i) * b(k, j);
            g(i, j) = acc;
            g(j, i) = acc;
        }
    }
    return g;
}

std::vector<double> matvec_transposed(const Matrix& b, std::span<const double> y) {
    if (y.size() != b.rows()) throw std::invalid_argument("matvec_transposed: dimension mismatch");
    std::vector<double> out(b.cols(), 0.0);
    for (std::size_t k = 0; k < b.rows(); ++k) {
        for (std::size_t j = 0; j < b.cols(); ++j) out[j] += b(k, j) * y[k];
    }
    return out;
}

bool symmetric_within(const Matrix& a, double rel_tol) {
    if (a.rows() != a.cols()) return false;
    double max_abs = 0.0;
    double max_skew = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            max_abs = std::max(max_abs, std::abs(a(i, j)));
            max_skew = std::max(max_skew, std::abs(a(i, j) - a(j, i)));
        }
    }
    return max_skew <= rel_tol * max_abs;
}

CholeskyFactor CholeskyFactor::decompose(const Matrix& a, double rel_pivot_tol) {
    if (a.rows() != a.cols()) throw std::invalid_argument("cholesky: matrix must be square");
    const std::size_t n = a.rows();
    double max_diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) max_diag = std::max(max_diag, std::abs(a(i, i)));
    const double pivot_floor = rel_pivot_tol * max_diag;

    Matrix l(n, n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double d = a(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= l(j, k) * l(j, k);
        if (!(d > pivot_floor)) {
            throw std::runtime_error("cholesky: pivot " + std::to_string(d) + " at column " +
                                     std::to_string(j) +
                                     " below tolerance; matrix is rank deficient or not SPD");
        }
        l(j, j) = std::sqrt(d);
        for (std::size_t i = j + 1; i < n; ++i) {
            double acc = a(i, j);
            for (std::size_t k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
            l(i, j) = acc / l(j, j);
        }
    }
    return CholeskyFactor(std::move(l));
}

std::vector<double> CholeskyFactor::forward_solve(std::span<const double> b) const {
    const std::size_t n = dim();
    if (b.size() != n) throw std::invalid_argument("cholesky forward_solve: dimension mismatch");
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = b[i];
        for (std::size_t k = 0; k < i; ++k) acc -= lower_(i, k) * y[k];
        y[i] = acc / lower_(i, i);
    }
    return y;
}

std::vector<double> CholeskyFactor::solve(std::span<const double> b) const {
    std::vector<double> x = forward_solve(b);
    const std::size_t n = dim();
    for (std::size_t ip = n; ip-- > 0;) {
        double acc = x[ip];
        for (std::size_t k = ip + 1; k < n; ++k) acc -= lower_(k, ip) * x[k];
        x[ip] = acc / lower_(ip, ip);
    }
    return x;
}

std::vector<double> CholeskyFactor::multiply(std::span<const double> x) const {
    const std::size_t n = dim();
    if (x.size() != n) throw std::invalid_argument("cholesky multiply: dimension mismatch");
    std::vector<double> y(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        double acc = 0.0;
        for (std::size_t k = 0; k <= i; ++k) acc += lower_(i, k) * x[k];
        y[i] = acc;
    }
    return y;
}

Matrix CholeskyFactor::inverse() const {
    const std::size_t n = dim();
    Matrix inv(n, n, 0.0);
    std::vector<double> e(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1.0;
        std::vector<double> col = solve(e);
        for (std::size_t i = 0; i < n; ++i) inv(i, j) = col[i];
        e[j] = 0.0;
    }
    // symmetrize away the last-bit asymmetry of the column solves
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double v = 0.5 * (inv(i, j) + inv(j, i));
            inv(i, j) = v;
            inv(j, i) = v;
        }
    }
    return inv;
}

}  // namespace mcauth
