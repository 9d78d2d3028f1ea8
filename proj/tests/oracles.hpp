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

// Independent reference computations used only by the tests.

#include <algorithm>
#include <cmath>
#include <complex>
#include <optional>
#include <vector>

#include "chansim/linalg.hpp"
#include "chansim/matrix.hpp"

namespace chansim::oracle {

/// Characteristic polynomial coefficients c_0..c_n of det(x I - M) by the
/// Faddeev-LeVerrier recursion; c_n = 1.
inline std::vector<double> char_poly(const ComplexMatrix &m) {
    const size_t n = m.dim();
    std::vector<Complex> c(n + 1);
    c[n] = 1.0;
    ComplexMatrix acc(n);
    for (size_t k = 1; k <= n; ++k) {
        ComplexMatrix next = m * acc;
        for (size_t i = 0; i < n; ++i) {
            next(i, i) += c[n - k + 1];
        }
        acc = next;
        c[n - k] = -(m * acc).trace() / static_cast<double>(k);
    }
    std::vector<double> out(n + 1);
    for (size_t i = 0; i <= n; ++i) {
        out[i] = c[i].real();
    }
    return out;
}

inline double eval_poly(const std::vector<double> &c, double x) {
    double v = 0.0;
    for (size_t i = c.size(); i-- > 0;) {
        v = v * x + c[i];
    }
    return v;
}

/// Real roots of the characteristic polynomial of a Hermitian matrix with
/// simple spectrum, by sign-change scanning inside the Gershgorin bound and
/// bisection.
inline std::vector<double> eigenvalues_by_bisection(const ComplexMatrix &m, size_t grid = 20000) {
    const size_t n = m.dim();
    double bound = 0.0;
    for (size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (size_t j = 0; j < n; ++j) {
            row += std::abs(m(i, j));
        }
        bound = std::max(bound, row);
    }
    bound += 1.0;
    auto c = char_poly(m);
    std::vector<double> roots;
    double step = 2.0 * bound / static_cast<double>(grid);
    double lo = -bound;
    double flo = eval_poly(c, lo);
    for (size_t g = 1; g <= grid; ++g) {
        double hi = -bound + step * static_cast<double>(g);
        double fhi = eval_poly(c, hi);
        if (flo == 0.0) {
            roots.push_back(lo);
        } else if ((flo < 0) != (fhi < 0)) {
            double a = lo, b = hi, fa = flo;
            for (int it = 0; it < 200; ++it) {
                double mid = 0.5 * (a + b);
                double fm = eval_poly(c, mid);
                if ((fm < 0) == (fa < 0)) {
                    a = mid;
                    fa = fm;
                } else {
                    b = mid;
                }
            }
            roots.push_back(0.5 * (a + b));
        }
        lo = hi;
        flo = fhi;
    }
    return roots;
}

/// Solves a small dense system by Gaussian elimination; nullopt if singular.
inline std::optional<std::vector<double>> solve_dense(std::vector<std::vector<double>> a, std::vector<double> b) {
    const size_t n = b.size();
    for (size_t c = 0; c < n; ++c) {
        size_t p = c;
        for (size_t r = c + 1; r < n; ++r) {
            if (std::abs(a[r][c]) > std::abs(a[p][c])) {
                p = r;
            }
        }
        if (std::abs(a[p][c]) < 1e-10) {
            return std::nullopt;
        }
        std::swap(a[p], a[c]);
        std::swap(b[p], b[c]);
        for (size_t r = 0; r < n; ++r) {
            if (r == c) {
                continue;
            }
            double f = a[r][c] / a[c][c];
            for (size_t cc = c; cc < n; ++cc) {
                a[r][cc] -= f * a[c][cc];
            }
            b[r] -= f * b[c];
        }
    }
    for (size_t i = 0; i < n; ++i) {
        b[i] /= a[i][i];
    }
    return b;
}

/// Half-space a . x <= b.
struct HalfSpace {
    std::vector<double> a;
    double b = 0.0;
};

/// Best objective over all basic points of a bounded feasible region given
/// by half-spaces; nullopt when no basic point is feasible.
inline std::optional<double> vertex_enumeration_max(const std::vector<HalfSpace> &rows, const std::vector<double> &c,
                                                   double tol = 1e-9) {
    const size_t n = c.size();
    const size_t m = rows.size();
    std::optional<double> best;
    std::vector<size_t> pick(n);
    std::vector<bool> mask(m, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(std::min(n, m)), true);
    if (m < n) {
        return best;
    }
    do {
        std::vector<std::vector<double>> a;
        std::vector<double> b;
        for (size_t r = 0; r < m; ++r) {
            if (mask[r]) {
                a.push_back(rows[r].a);
                b.push_back(rows[r].b);
            }
        }
        auto x = solve_dense(a, b);
        if (!x) {
            continue;
        }
        bool ok = true;
        for (const auto &h : rows) {
            double s = 0.0;
            for (size_t i = 0; i < n; ++i) {
                s += h.a[i] * (*x)[i];
            }
            if (s > h.b + tol) {
                ok = false;
                break;
            }
        }
        if (!ok) {
            continue;
        }
        double v = 0.0;
        for (size_t i = 0; i < n; ++i) {
            v += c[i] * (*x)[i];
        }
        if (!best || v > *best) {
            best = v;
        }
    } while (std::prev_permutation(mask.begin(), mask.end()));
    return best;
}

/// Hall-type supply-demand check: every right-node set T has
/// demand(T) <= supply(N(T)) + tol.
inline bool hall_feasible(const std::vector<double> &supply, const std::vector<double> &demand,
                          const std::vector<std::pair<int, int>> &edges, double tol = 1e-8) {
    const size_t r = demand.size();
    for (unsigned t = 1; t < (1u << r); ++t) {
        double dem = 0.0;
        for (size_t j = 0; j < r; ++j) {
            if (t & (1u << j)) {
                dem += demand[j];
            }
        }
        std::vector<bool> hit(supply.size(), false);
        for (auto [i, j] : edges) {
            if (t & (1u << j)) {
                hit[static_cast<size_t>(i)] = true;
            }
        }
        double sup = 0.0;
        for (size_t i = 0; i < supply.size(); ++i) {
            if (hit[i]) {
                sup += supply[i];
            }
        }
        if (dem > sup + tol) {
            return false;
        }
    }
    return true;
}

inline double max_abs_diff(const std::vector<double> &a, const std::vector<double> &b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) {
        m = std::max(m, std::abs(a[i] - b[i]));
    }
    return m;
}

}  // namespace chansim::oracle
