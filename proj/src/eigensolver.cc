// Copyright 2026 The nucsim Authors
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

#include "nucsim/eigensolver.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nucsim {

namespace {

struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> offdiag;  // offdiag[i] couples i and i+1, all >= 0
    Matrix basis;                 // a = basis * T * basis†
};

Tridiagonal householder_tridiagonalize(const Matrix &input) {
    const size_t n = input.rows();
    Matrix a(n, n);
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c <= r; c++) {
            a(r, c) = input(r, c);
            a(c, r) = std::conj(input(r, c));
        }
        a(r, r) = input(r, r).real();
    }
    Matrix q = Matrix::identity(n);

    std::vector<cplx> v(n), p(n), w(n), qv(n);
    for (size_t k = 0; k + 2 < n; k++) {
        const size_t lo = k + 1;
        const size_t m = n - lo;
        double xnorm2 = 0;
        for (size_t i = 0; i < m; i++) {
            xnorm2 += std::norm(a(lo + i, k));
        }
        // Nothing below the subdiagonal to annihilate.
        double tail2 = xnorm2 - std::norm(a(lo, k));
        if (tail2 <= 1e-300) {
            continue;
        }
        double xnorm = std::sqrt(xnorm2);
        cplx x0 = a(lo, k);
        cplx phase = std::abs(x0) > 0 ? x0 / std::abs(x0) : cplx{1.0};
        cplx alpha = -phase * xnorm;

        for (size_t i = 0; i < m; i++) {
            v[i] = a(lo + i, k);
        }
        v[0] -= alpha;
        double vnorm = std::sqrt(std::accumulate(v.begin(), v.begin() + m, 0.0,
                                                 [](double s, cplx z) { return s + std::norm(z); }));
        for (size_t i = 0; i < m; i++) {
            v[i] /= vnorm;
        }

        // Trailing block update B <- H B H with H = I - 2 v v†.
        for (size_t i = 0; i < m; i++) {
            cplx acc{};
            for (size_t j = 0; j < m; j++) {
                acc += a(lo + i, lo + j) * v[j];
            }
            p[i] = acc;
        }
        double kappa = 0;
        for (size_t i = 0; i < m; i++) {
            kappa += (std::conj(v[i]) * p[i]).real();
        }
        for (size_t i = 0; i < m; i++) {
            w[i] = p[i] - kappa * v[i];
        }
        for (size_t i = 0; i < m; i++) {
            for (size_t j = 0; j < m; j++) {
                a(lo + i, lo + j) -= 2.0 * (v[i] * std::conj(w[j]) + w[i] * std::conj(v[j]));
            }
        }
        a(lo, k) = alpha;
        a(k, lo) = std::conj(alpha);
        for (size_t i = 1; i < m; i++) {
            a(lo + i, k) = 0;
            a(k, lo + i) = 0;
        }

        // Q <- Q H on columns [lo, n).
        for (size_t r = 0; r < n; r++) {
            cplx acc{};
            for (size_t j = 0; j < m; j++) {
                acc += q(r, lo + j) * v[j];
            }
            qv[r] = acc;
        }
        for (size_t r = 0; r < n; r++) {
            for (size_t j = 0; j < m; j++) {
                q(r, lo + j) -= 2.0 * qv[r] * std::conj(v[j]);
            }
        }
    }

    Tridiagonal t;
    t.diag.resize(n);
    t.offdiag.assign(n > 0 ? n - 1 : 0, 0.0);
    for (size_t i = 0; i < n; i++) {
        t.diag[i] = a(i, i).real();
    }
    // Diagonal unitary D rotating every subdiagonal entry onto the
    // non-negative real axis: T_real = D† T D.
    std::vector<cplx> d(n, cplx{1.0});
    for (size_t i = 0; i + 1 < n; i++) {
        cplx e = a(i + 1, i);
        double mag = std::abs(e);
        t.offdiag[i] = mag;
        d[i + 1] = mag > 0 ? d[i] * (e / mag) : d[i];
    }
    for (size_t r = 0; r < n; r++) {
        for (size_t c = 0; c < n; c++) {
            q(r, c) *= d[c];
        }
    }
    t.basis = std::move(q);
    return t;
}

// Implicit QL on a real symmetric tridiagonal matrix (EISPACK tql2 lineage).
// rot_t holds the transposed rotation accumulator: row i is eigenvector i.
void tridiagonal_ql(std::vector<double> &d, std::vector<double> e, std::vector<double> &rot_t, size_t n) {
    e.push_back(0.0);
    double f = 0.0;
    double tst1 = 0.0;
    const double eps = std::ldexp(1.0, -52);
    auto rot = [&](size_t row, size_t col) -> double & { return rot_t[row * n + col]; };

    for (size_t l = 0; l < n; l++) {
        tst1 = std::max(tst1, std::abs(d[l]) + std::abs(e[l]));
        size_t m = l;
        while (m < n) {
            if (std::abs(e[m]) <= eps * tst1) {
                break;
            }
            m++;
        }
        if (m > l) {
            int iter = 0;
            do {
                if (++iter > 200) {
                    throw std::runtime_error("Tridiagonal QL iteration failed to converge.");
                }
                double g = d[l];
                double p = (d[l + 1] - g) / (2.0 * e[l]);
                double r = std::hypot(p, 1.0);
                if (p < 0) {
                    r = -r;
                }
                d[l] = e[l] / (p + r);
                d[l + 1] = e[l] * (p + r);
                double dl1 = d[l + 1];
                double h = g - d[l];
                for (size_t i = l + 2; i < n; i++) {
                    d[i] -= h;
                }
                f += h;

                p = d[m];
                double c = 1.0, c2 = 1.0, c3 = 1.0;
                double el1 = e[l + 1];
                double s = 0.0, s2 = 0.0;
                for (size_t ii = m; ii-- > l;) {
                    c3 = c2;
                    c2 = c;
                    s2 = s;
                    g = c * e[ii];
                    h = c * p;
                    r = std::hypot(p, e[ii]);
                    e[ii + 1] = s * r;
                    s = e[ii] / r;
                    c = p / r;
                    p = c * d[ii] - s * g;
                    d[ii + 1] = h + s * (c * g + s * d[ii]);
                    for (size_t k = 0; k < n; k++) {
                        double hk = rot(ii + 1, k);
                        rot(ii + 1, k) = s * rot(ii, k) + c * hk;
                        rot(ii, k) = c * rot(ii, k) - s * hk;
                    }
                }
                p = -s * s2 * c3 * el1 * e[l] / dl1;
                e[l] = s * p;
                d[l] = c * p;
            } while (std::abs(e[l]) > eps * tst1);
        }
        d[l] += f;
        e[l] = 0.0;
    }
}

}  // namespace

EigenDecomposition hermitian_eigensolve(const Matrix &a) {
    if (a.rows() != a.cols()) {
        throw std::invalid_argument("hermitian_eigensolve requires a square matrix.");
    }
    const size_t n = a.rows();
    EigenDecomposition out;
    if (n == 0) {
        return out;
    }

    Tridiagonal t = householder_tridiagonalize(a);
    std::vector<double> rot_t(n * n, 0.0);
    for (size_t i = 0; i < n; i++) {
        rot_t[i * n + i] = 1.0;
    }
    tridiagonal_ql(t.diag, t.offdiag, rot_t, n);

    std::vector<size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](size_t x, size_t y) { return t.diag[x] < t.diag[y]; });

    out.values.resize(n);
    out.vectors = Matrix(n, n);
    for (size_t j = 0; j < n; j++) {
        size_t src = order[j];
        out.values[j] = t.diag[src];
        const double *z = &rot_t[src * n];
        for (size_t r = 0; r < n; r++) {
            cplx acc{};
            for (size_t i = 0; i < n; i++) {
                acc += t.basis(r, i) * z[i];
            }
            out.vectors(r, j) = acc;
        }
    }
    return out;
}

}  // namespace nucsim
