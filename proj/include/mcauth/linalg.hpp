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

#include <cstddef>
#include <span>
#include <vector>

namespace mcauth {

// Dense row-major matrix. Everything in this project is small (tap counts
// and training windows, dimensions well under a hundred), so a plain
// contiguous buffer beats pulling in a linear algebra package.
class Matrix {
  public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
        : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    const std::vector<double>& data() const { return data_; }

  private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<double> data_;
};

std::vector<double> matvec(const Matrix& a, std::span<const double> x);

/// B^T B of a tall matrix (the normal-equations Gram matrix).
Matrix gram(const Matrix& b);

/// B^T y.
std::vector<double> matvec_transposed(const Matrix& b, std::span<const double> y);

/// max_ij |a_ij - a_ji| <= rel_tol * max_ij |a_ij| (vacuously true for a = 0).
bool symmetric_within(const Matrix& a, double rel_tol);

/// Relative pivot tolerance used for every SPD factorization in the project:
/// a pivot below 1e-12 times the largest input diagonal is treated as
/// rank deficiency.
inline constexpr double kCholeskyRelPivotTol = 1e-12;

// Lower-triangular Cholesky factor of a symmetric positive definite matrix,
// A = L L^T. Factorization failure (pivot under the relative tolerance)
// throws std::runtime_error: the input was rank deficient or not SPD.
class CholeskyFactor {
  public:
    static CholeskyFactor decompose(const Matrix& a, double rel_pivot_tol = kCholeskyRelPivotTol);

    std::size_t dim() const { return lower_.rows(); }
    const Matrix& lower() const { return lower_; }

    /// Solves L y = b (forward substitution). This is the whitening map:
    /// if b = A^{1/2}-correlated, y is unit-covariance.
    std::vector<double> forward_solve(std::span<const double> b) const;

    /// Solves A x = b via the two triangular systems.
    std::vector<double> solve(std::span<const double> b) const;

    /// L x (colored-noise synthesis from a standard normal vector).
    std::vector<double> multiply(std::span<const double> x) const;

    /// A^{-1}, built column by column from triangular solves. Only used where
    /// an explicit inverse is part of the result (estimator covariance);
    /// solves never go through it.
    Matrix inverse() const;

  private:
    explicit CholeskyFactor(Matrix lower) : lower_(std::move(lower)) {}
    Matrix lower_;
};

}  // namespace mcauth
