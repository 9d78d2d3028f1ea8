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

#include "chansim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace chansim {

ComplexMatrix ComplexMatrix::identity(size_t n) {
    ComplexMatrix m(n);
    for (size_t i = 0; i < n; ++i) {
        m(i, i) = 1.0;
    }
    return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const double> values) {
    ComplexMatrix m(values.size());
    for (size_t i = 0; i < values.size(); ++i) {
        m(i, i) = values[i];
    }
    return m;
}

ComplexMatrix ComplexMatrix::from_real(const Matrix &m) {
    if (m.rows() != m.cols()) {
        throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
    }
    ComplexMatrix out(m.rows());
    for (size_t r = 0; r < m.rows(); ++r) {
        for (size_t c = 0; c < m.cols(); ++c) {
            out(r, c) = m(r, c);
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::from_rows(const std::vector<std::vector<Complex>> &rows) {
    ComplexMatrix out(rows.size());
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != rows.size()) {
            throw Error(ErrorCode::DimensionMismatch, "matrix is not square");
        }
        for (size_t c = 0; c < rows.size(); ++c) {
            out(r, c) = rows[r][c];
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &o) const {
    ComplexMatrix out = *this;
    out += o;
    return out;
}

ComplexMatrix &ComplexMatrix::operator+=(const ComplexMatrix &o) {
    if (n_ != o.n_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix sum dimension mismatch");
    }
    for (size_t i = 0; i < data_.size(); ++i) {
        data_[i] += o.data_[i];
    }
    return *this;
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &o) const {
    if (n_ != o.n_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix difference dimension mismatch");
    }
    ComplexMatrix out = *this;
    for (size_t i = 0; i < data_.size(); ++i) {
        out.data_[i] -= o.data_[i];
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &o) const {
    if (n_ != o.n_) {
        throw Error(ErrorCode::DimensionMismatch, "matrix product dimension mismatch");
    }
    ComplexMatrix out(n_);
    for (size_t r = 0; r < n_; ++r) {
        for (size_t t = 0; t < n_; ++t) {
            Complex a = (*this)(r, t);
            for (size_t c = 0; c < n_; ++c) {
                out(r, c) += a * o(t, c);
            }
        }
    }
    return out;
}

ComplexMatrix ComplexMatrix::operator*(Complex s) const {
    ComplexMatrix out = *this;
    for (auto &v : out.data_) {
        v *= s;
    }
    return out;
}

ComplexMatrix ComplexMatrix::adjoint() const {
    ComplexMatrix out(n_);
    for (size_t r = 0; r < n_; ++r) {
        for (size_t c = 0; c < n_; ++c) {
            out(c, r) = std::conj((*this)(r, c));
        }
    }
    return out;
}

Complex ComplexMatrix::trace() const {
    Complex t = 0.0;
    for (size_t i = 0; i < n_; ++i) {
        t += (*this)(i, i);
    }
    return t;
}

double ComplexMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto &v : data_) {
        s += std::norm(v);
    }
    return std::sqrt(s);
}

double ComplexMatrix::hermitian_defect() const {
    double worst = 0.0;
    for (size_t r = 0; r < n_; ++r) {
        for (size_t c = r; c < n_; ++c) {
            worst = std::max(worst, std::abs((*this)(r, c) - std::conj((*this)(c, r))));
        }
    }
    return worst;
}

bool ComplexMatrix::all_finite() const {
    return std::all_of(data_.begin(), data_.end(),
                       [](const Complex &v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); });
}

Complex ComplexMatrix::determinant() const {
    ComplexMatrix lu = *this;
    Complex det = 1.0;
    for (size_t col = 0; col < n_; ++col) {
        size_t pivot = col;
        double best = std::abs(lu(col, col));
        for (size_t r = col + 1; r < n_; ++r) {
            double mag = std::abs(lu(r, col));
            if (mag > best) {
                best = mag;
                pivot = r;
            }
        }
        if (best == 0.0) {
            return 0.0;
        }
        if (pivot != col) {
            for (size_t c = 0; c < n_; ++c) {
                std::swap(lu(pivot, c), lu(col, c));
            }
            det = -det;
        }
        Complex d = lu(col, col);
        det *= d;
        for (size_t r = col + 1; r < n_; ++r) {
            Complex f = lu(r, col) / d;
            if (f == Complex(0.0)) {
                continue;
            }
            for (size_t c = col + 1; c < n_; ++c) {
                lu(r, c) -= f * lu(col, c);
            }
        }
    }
    return det;
}

std::vector<std::vector<Complex>> ComplexMatrix::to_rows() const {
    std::vector<std::vector<Complex>> out(n_, std::vector<Complex>(n_));
    for (size_t r = 0; r < n_; ++r) {
        for (size_t c = 0; c < n_; ++c) {
            out[r][c] = (*this)(r, c);
        }
    }
    return out;
}

namespace {

double off_diagonal_mass(const ComplexMatrix &a) {
    double s = 0.0;
    for (size_t r = 0; r < a.dim(); ++r) {
        for (size_t c = 0; c < a.dim(); ++c) {
            if (r != c) {
                s += std::norm(a(r, c));
            }
        }
    }
    return std::sqrt(s);
}

}  // namespace

HermitianEigen hermitian_eigen(const ComplexMatrix &m, double tol) {
    const size_t n = m.dim();
    if (!m.all_finite()) {
        throw Error(ErrorCode::NotHermitian, "matrix has non-finite entries");
    }
    double defect = m.hermitian_defect();
    if (defect > tol) {
        throw Error(ErrorCode::NotHermitian, "hermitian defect " + std::to_string(defect));
    }
    // Work on the exactly Hermitian part.
    ComplexMatrix a = (m + m.adjoint()) * Complex(0.5);
    ComplexMatrix v = ComplexMatrix::identity(n);
    const double threshold = 1e-12 * std::max(1.0, a.frobenius_norm());

    for (int sweep = 0; sweep < 100 && off_diagonal_mass(a) >= threshold; ++sweep) {
        for (size_t p = 0; p + 1 < n; ++p) {
            for (size_t q = p + 1; q < n; ++q) {
                Complex b = a(p, q);
                double mag = std::abs(b);
                if (mag < 1e-300) {
                    continue;
                }
                // Phase-rotate q so that a(p, q) becomes real, then apply a
                // real Givens rotation that annihilates it.
                Complex phase = std::conj(b) / mag;
                double app = a(p, p).real();
                double aqq = a(q, q).real();
                double theta = (aqq - app) / (2.0 * mag);
                double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                const Complex g_pp = c;
                const Complex g_pq = s;
                const Complex g_qp = -s * phase;
                const Complex g_qq = c * phase;

                for (size_t r = 0; r < n; ++r) {
                    Complex arp = a(r, p);
                    Complex arq = a(r, q);
                    a(r, p) = arp * g_pp + arq * g_qp;
                    a(r, q) = arp * g_pq + arq * g_qq;
                    Complex vrp = v(r, p);
                    Complex vrq = v(r, q);
                    v(r, p) = vrp * g_pp + vrq * g_qp;
                    v(r, q) = vrp * g_pq + vrq * g_qq;
                }
                for (size_t c2 = 0; c2 < n; ++c2) {
                    Complex apc = a(p, c2);
                    Complex aqc = a(q, c2);
                    a(p, c2) = std::conj(g_pp) * apc + std::conj(g_qp) * aqc;
                    a(q, c2) = std::conj(g_pq) * apc + std::conj(g_qq) * aqc;
                }
                a(p, q) = 0.0;
                a(q, p) = 0.0;
                a(p, p) = a(p, p).real();
                a(q, q) = a(q, q).real();
            }
        }
    }

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](size_t x, size_t y) { return a(x, x).real() < a(y, y).real(); });
    HermitianEigen out;
    out.spectrum.values.resize(n);
    out.vectors = ComplexMatrix(n);
    for (size_t t = 0; t < n; ++t) {
        out.spectrum.values[t] = a(order[t], order[t]).real();
        for (size_t r = 0; r < n; ++r) {
            out.vectors(r, t) = v(r, order[t]);
        }
    }
    return out;
}

Spectrum hermitian_eigenvalues(const ComplexMatrix &m, double tol) {
    return hermitian_eigen(m, tol).spectrum;
}

ComplexMatrix from_eigen(std::span<const double> values, const ComplexMatrix &vectors) {
    const size_t n = vectors.dim();
    if (values.size() != n) {
        throw Error(ErrorCode::DimensionMismatch, "eigenvalue count does not match dimension");
    }
    ComplexMatrix out(n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            Complex s = 0.0;
            for (size_t t = 0; t < n; ++t) {
                s += vectors(r, t) * values[t] * std::conj(vectors(c, t));
            }
            out(r, c) = s;
        }
    }
    return out;
}

std::optional<Violation> validate_povm(const Povm &povm, double tol) {
    if (povm.outcomes.empty()) {
        return Violation{ErrorCode::DimensionMismatch, -1, "POVM has no outcomes"};
    }
    const size_t n = povm.dim();
    if (n == 0) {
        return Violation{ErrorCode::DimensionMismatch, -1, "POVM outcomes are empty matrices"};
    }
    ComplexMatrix total(n);
    for (size_t i = 0; i < povm.size(); ++i) {
        const auto &e = povm.outcomes[i];
        if (e.dim() != n) {
            return Violation{ErrorCode::DimensionMismatch, static_cast<int>(i), "outcome dimension differs"};
        }
        if (!e.all_finite() || e.hermitian_defect() > tol) {
            return Violation{ErrorCode::NotHermitian, static_cast<int>(i), "outcome is not Hermitian"};
        }
        double lowest = hermitian_eigenvalues(e, tol).values.front();
        if (lowest < -tol) {
            return Violation{ErrorCode::NotPsd, static_cast<int>(i),
                             "outcome has eigenvalue " + std::to_string(lowest)};
        }
        total += e;
    }
    ComplexMatrix gap = total - ComplexMatrix::identity(n);
    for (size_t r = 0; r < n; ++r) {
        for (size_t c = 0; c < n; ++c) {
            if (std::abs(gap(r, c)) > tol) {
                return Violation{ErrorCode::SumNotIdentity, -1, "outcomes do not sum to the identity"};
            }
        }
    }
    return std::nullopt;
}

std::optional<Violation> validate_density(const ComplexMatrix &rho, double tol) {
    if (rho.dim() == 0) {
        return Violation{ErrorCode::DimensionMismatch, -1, "empty density matrix"};
    }
    if (!rho.all_finite() || rho.hermitian_defect() > tol) {
        return Violation{ErrorCode::NotHermitian, -1, "density matrix is not Hermitian"};
    }
    double lowest = hermitian_eigenvalues(rho, tol).values.front();
    if (lowest < -tol) {
        return Violation{ErrorCode::NotPsd, -1, "density matrix has eigenvalue " + std::to_string(lowest)};
    }
    double tr = rho.trace().real();
    if (std::abs(tr - 1.0) > tol) {
        return Violation{ErrorCode::TraceNotOne, -1, "trace is " + std::to_string(tr)};
    }
    return std::nullopt;
}

void require_valid(const Povm &povm, double tol) {
    if (auto v = validate_povm(povm, tol)) {
        throw Error(ErrorCode::InvalidPovm, std::string(error_code_name(v->code)) + " (" + v->detail + ")");
    }
}

void require_valid(const DensityMatrix &rho, double tol) {
    if (auto v = validate_density(rho.matrix, tol)) {
        throw Error(ErrorCode::InvalidDensity, std::string(error_code_name(v->code)) + " (" + v->detail + ")");
    }
}

double trace_product_real(const ComplexMatrix &a, const ComplexMatrix &b) {
    if (a.dim() != b.dim()) {
        throw Error(ErrorCode::DimensionMismatch, "trace product dimension mismatch");
    }
    double s = 0.0;
    for (size_t r = 0; r < a.dim(); ++r) {
        for (size_t c = 0; c < a.dim(); ++c) {
            s += (a(r, c) * b(c, r)).real();
        }
    }
    return s;
}

TransitionMatrix born_matrix(const Povm &povm, std::span<const DensityMatrix> states) {
    const size_t n = povm.dim();
    for (const auto &e : povm.outcomes) {
        if (e.dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, "POVM outcome dimension differs");
        }
    }
    Matrix a(povm.size(), states.size());
    for (size_t j = 0; j < states.size(); ++j) {
        if (states[j].matrix.dim() != n) {
            throw Error(ErrorCode::DimensionMismatch, "state dimension does not match POVM");
        }
        for (size_t i = 0; i < povm.size(); ++i) {
            a(i, j) = trace_product_real(povm.outcomes[i], states[j].matrix);
        }
    }
    return TransitionMatrix::from(std::move(a), 1e-6);
}

}  // namespace chansim
