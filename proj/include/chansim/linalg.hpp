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

#include <complex>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "chansim/error.hpp"
#include "chansim/matrix.hpp"

namespace chansim {

using Complex = std::complex<double>;

inline constexpr double kValidationTol = 1e-9;

/// Square complex matrix, row-major.
class ComplexMatrix {
  public:
    ComplexMatrix() = default;
    explicit ComplexMatrix(size_t n) : n_(n), data_(n * n) {}

    static ComplexMatrix identity(size_t n);
    static ComplexMatrix diagonal(std::span<const double> values);
    static ComplexMatrix from_real(const Matrix &m);
    /// Nested rows of complex entries; throws DimensionMismatch if not square.
    static ComplexMatrix from_rows(const std::vector<std::vector<Complex>> &rows);

    size_t dim() const { return n_; }

    Complex &operator()(size_t r, size_t c) { return data_[r * n_ + c]; }
    const Complex &operator()(size_t r, size_t c) const { return data_[r * n_ + c]; }

    ComplexMatrix operator+(const ComplexMatrix &o) const;
    ComplexMatrix operator-(const ComplexMatrix &o) const;
    ComplexMatrix operator*(const ComplexMatrix &o) const;
    ComplexMatrix operator*(Complex s) const;
    ComplexMatrix &operator+=(const ComplexMatrix &o);

    ComplexMatrix adjoint() const;
    Complex trace() const;
    double frobenius_norm() const;
    /// max |M - M^*| over entries.
    double hermitian_defect() const;
    bool all_finite() const;

    /// LU with partial pivoting.
    Complex determinant() const;

    std::vector<std::vector<Complex>> to_rows() const;

  private:
    size_t n_ = 0;
    std::vector<Complex> data_;
};

/// Real eigenvalues of a Hermitian matrix, ascending.
struct Spectrum {
    std::vector<double> values;
};

struct HermitianEigen {
    Spectrum spectrum;
    /// Column t is the unit eigenvector for spectrum.values[t].
    ComplexMatrix vectors;
};

struct Povm {
    std::vector<ComplexMatrix> outcomes;

    size_t size() const { return outcomes.size(); }
    size_t dim() const { return outcomes.empty() ? 0 : outcomes.front().dim(); }
};

struct DensityMatrix {
    ComplexMatrix matrix;
};

struct Violation {
    ErrorCode code;
    /// Offending outcome index for NotPsd, otherwise -1.
    int index = -1;
    std::string detail;
};

/// Cyclic complex Jacobi rotations. Throws Error(NotHermitian) when the
/// Hermitian defect exceeds tol.
HermitianEigen hermitian_eigen(const ComplexMatrix &m, double tol = kValidationTol);
Spectrum hermitian_eigenvalues(const ComplexMatrix &m, double tol = kValidationTol);

std::optional<Violation> validate_povm(const Povm &povm, double tol = kValidationTol);
std::optional<Violation> validate_density(const ComplexMatrix &rho, double tol = kValidationTol);

/// Throwing forms of the validators (InvalidPovm / InvalidDensity).
void require_valid(const Povm &povm, double tol = kValidationTol);
void require_valid(const DensityMatrix &rho, double tol = kValidationTol);

/// Real part of tr(A B) without forming the product.
double trace_product_real(const ComplexMatrix &a, const ComplexMatrix &b);

/// Entry (i, j) = tr(E_i rho_j).
TransitionMatrix born_matrix(const Povm &povm, std::span<const DensityMatrix> states);

/// V diag(values) V^*.
ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix &vectors);

}  // namespace chansim
