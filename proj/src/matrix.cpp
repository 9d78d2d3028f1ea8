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

#include "chansim/matrix.hpp"

#include <cmath>
#include <string>

#include "chansim/error.hpp"

namespace chansim {

Matrix Matrix::from_rows(const std::vector<std::vector<double>> &rows) {
    size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) {
            throw Error(ErrorCode::DimensionMismatch, "ragged matrix rows");
        }
        for (size_t c = 0; c < cols; ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

Matrix Matrix::identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

std::vector<double> Matrix::column(size_t c) const {
    std::vector<double> out(rows_);
    for (size_t r = 0; r < rows_; ++r) {
        out[r] = (*this)(r, c);
    }
    return out;
}

std::vector<std::vector<double>> Matrix::to_rows() const {
    std::vector<std::vector<double>> out(rows_, std::vector<double>(cols_));
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t c = 0; c < cols_; ++c) {
            out[r][c] = (*this)(r, c);
        }
    }
    return out;
}

Matrix Matrix::operator*(const Matrix &other) const {
    if (cols_ != other.rows_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product shape mismatch");
    }
    Matrix out(rows_, other.cols_);
    for (size_t r = 0; r < rows_; ++r) {
        for (size_t t = 0; t < cols_; ++t) {
            double a = (*this)(r, t);
            if (a == 0.0) {
                continue;
            }
            for (size_t c = 0; c < other.cols_; ++c) {
                out(r, c) += a * other(t, c);
            }
        }
    }
    return out;
}

Matrix &Matrix::operator+=(const Matrix &other) {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum shape mismatch");
    }
    for (size_t i = 0; i < data_.size(); ++i) {
        data_[i] += other.data_[i];
    }
    return *this;
}

Matrix Matrix::scaled(double factor) const {
    Matrix out = *this;
    for (auto &v : out.data_) {
        v *= factor;
    }
    return out;
}

double Matrix::max_abs_diff(const Matrix &other) const {
    if (rows_ != other.rows_ || cols_ != other.cols_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix comparison shape mismatch");
    }
    double worst = 0.0;
    for (size_t i = 0; i < data_.size(); ++i) {
        worst = std::max(worst, std::abs(data_[i] - other.data_[i]));
    }
    return worst;
}

TransitionMatrix TransitionMatrix::from(Matrix m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) {
        throw Error(ErrorCode::NotStochastic, "empty transition matrix");
    }
    for (size_t j = 0; j < m.cols(); ++j) {
        double sum = 0.0;
        for (size_t i = 0; i < m.rows(); ++i) {
            double a = m(i, j);
            if (!std::isfinite(a) || a < -tol || a > 1.0 + tol) {
                throw Error(ErrorCode::NotStochastic,
                            "entry (" + std::to_string(i) + "," + std::to_string(j) + ") out of [0,1]");
            }
            sum += a;
        }
        if (std::abs(sum - 1.0) > tol) {
            throw Error(ErrorCode::NotStochastic, "column " + std::to_string(j) + " sums to " + std::to_string(sum));
        }
    }
    return TransitionMatrix(std::move(m));
}

}  // namespace chansim
