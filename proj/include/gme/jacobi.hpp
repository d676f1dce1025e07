#pragma once

// Cyclic Jacobi diagonalisation for small dense complex Hermitian matrices.
// Each rotation annihilates one off-diagonal pair with a unitary plane
// rotation carrying the phase of the target entry; sweeps repeat until the
// off-diagonal Frobenius norm falls below tolerance.

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "gme/cmatrix.hpp"
#include "gme/errors.hpp"

namespace gme {

template <std::size_t N>
struct EigenDecomposition {
    std::array<double, N> values{};  // descending
    CMatrix<N> vectors{};            // orthonormal columns, M = V diag(values) V^dagger
};

template <std::size_t N>
double offdiag_norm(const CMatrix<N>& a) {
    double s = 0.0;
    for (std::size_t p = 0; p < N; ++p)
        for (std::size_t q = p + 1; q < N; ++q) s += std::norm(a[p][q]);
    return std::sqrt(2.0 * s);
}

template <std::size_t N>
EigenDecomposition<N> jacobi_hermitian(CMatrix<N> a,
                                       double hermitian_tol = 1e-10) {
    if (hermiticity_defect(a) > hermitian_tol)
        throw NotHermitian("jacobi_hermitian: input is not Hermitian");

    const double scale = std::max(1.0, frobenius(a));
    CMatrix<N> v = identity_matrix<N>();

    constexpr int kMaxSweeps = 60;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        if (offdiag_norm(a) <= 1e-14 * scale) break;
        for (std::size_t p = 0; p < N; ++p) {
            for (std::size_t q = p + 1; q < N; ++q) {
                const double r = std::abs(a[p][q]);
                if (r == 0.0) continue;
                const cplx phase = a[p][q] / r;  // e^{i arg(a_pq)}
                const double app = a[p][p].real();
                const double aqq = a[q][q].real();
                const double tau = (aqq - app) / (2.0 * r);
                const double t =
                    (tau >= 0.0 ? 1.0 : -1.0) /
                    (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;

                // A <- R^dagger A R with R_pp = c, R_pq = s*phase,
                // R_qp = -s*conj(phase), R_qq = c.
                for (std::size_t k = 0; k < N; ++k) {
                    if (k == p || k == q) continue;
                    const cplx akp = a[k][p];
                    const cplx akq = a[k][q];
                    a[k][p] = c * akp - s * std::conj(phase) * akq;
                    a[k][q] = s * phase * akp + c * akq;
                    a[p][k] = std::conj(a[k][p]);
                    a[q][k] = std::conj(a[k][q]);
                }
                const double app_new = c * c * app - 2.0 * s * c * r + s * s * aqq;
                const double aqq_new = s * s * app + 2.0 * s * c * r + c * c * aqq;
                a[p][p] = app_new;
                a[q][q] = aqq_new;
                a[p][q] = 0.0;
                a[q][p] = 0.0;

                for (std::size_t k = 0; k < N; ++k) {
                    const cplx vkp = v[k][p];
                    const cplx vkq = v[k][q];
                    v[k][p] = c * vkp - s * std::conj(phase) * vkq;
                    v[k][q] = s * phase * vkp + c * vkq;
                }
            }
        }
    }

    EigenDecomposition<N> out;
    std::array<std::size_t, N> order{};
    for (std::size_t i = 0; i < N; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return a[x][x].real() > a[y][y].real();
    });
    for (std::size_t i = 0; i < N; ++i) {
        out.values[i] = a[order[i]][order[i]].real();
        for (std::size_t k = 0; k < N; ++k) out.vectors[k][i] = v[k][order[i]];
    }
    return out;
}

}  // namespace gme
