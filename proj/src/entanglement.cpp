#include "gme/entanglement.hpp"

#include <cmath>

namespace gme {

Spectrum4 hermitian_eigen(const CMat4& m) { return jacobi_hermitian(m); }

double log_negativity(const PairState4& rho) {
    validate(rho);
    const CMat4 pt = partial_transpose_B(rho);
    const Spectrum4 eig = hermitian_eigen(pt);
    double trace_norm = 0.0;
    for (double v : eig.values) trace_norm += std::abs(v);
    // Separable states have unit trace norm; snap round-off to exactly 0.
    if (std::abs(trace_norm - 1.0) <= 1e-10) return 0.0;
    return std::log2(trace_norm);
}

double reduced_coherence(const PairState4& rho) {
    const QubitState2 a = partial_trace_B(rho);
    return 2.0 * std::abs(a.m[0][1]);
}

}  // namespace gme
