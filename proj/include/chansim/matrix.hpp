// Copyright 2026 The chansim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <vector>

namespace chansim {

/// Dense row-major real matrix.
class Matrix {
  public:
    Matrix() = default;
    Matrix(size_t rows, size_t cols, double fill = 0.0) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

    /// Builds from nested rows; all rows must share one length.
    static Matrix from_rows(const std::vector<std::vector<double>> &rows);
    static Matrix identity(size_t n);

    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    double &operator()(size_t r, size_t c) { return data_[r * cols_ + c]; }
    double operator()(size_t r, size_t c) const { return data_[r * cols_ + c]; }

    std::vector<double> column(size_t c) const;
    std::vector<std::vector<double>> to_rows() const;

    Matrix operator*(const Matrix &other) const;
    Matrix &operator+=(const Matrix &other);
    Matrix scaled(double factor) const;

    /// Largest entrywise absolute difference; shapes must agree.
    double max_abs_diff(const Matrix &other) const;

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<double> data_;
};

/// k x l column-stochastic matrix of conditional output probabilities.
/// Entry (i, j) is the probability of output i given input j.
class TransitionMatrix {
  public:
    static constexpr double kDefaultTol = 1e-9;

    /// Validates entries in [-tol, 1 + tol] and unit column sums within tol.
    /// Throws Error(NotStochastic).
    static TransitionMatrix from(Matrix m, double tol = kDefaultTol);

    size_t k() const { return m_.rows(); }
    size_t l() const { return m_.cols(); }
    double operator()(size_t i, size_t j) const { return m_(i, j); }
    const Matrix &matrix() const { return m_; }

  private:
    explicit TransitionMatrix(Matrix m) : m_(std::move(m)) {}
    Matrix m_;
};

}  // namespace chansim
