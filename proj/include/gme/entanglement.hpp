#pragma once

// Entanglement quantification: Hermitian eigensolver wrapper, logarithmic
// negativity via the partial transpose, and reduced-state coherence.

#include "gme/jacobi.hpp"
#include "gme/state.hpp"

namespace gme {

using Spectrum4 = EigenDecomposition<4>;

// Cyclic Jacobi diagonalisation; eigenvalues descending, orthonormal
// eigenvector columns. Throws NotHermitian if max|M - M^dagger| > 1e-10.
Spectrum4 hermitian_eigen(const CMat4& m);

// E_N = log2(sum |lambda_i(rho^Gamma)|) in bits. Values within 1e-10 of a
// unit trace norm are clamped to exactly 0 so separable states report 0.
double log_negativity(const PairState4& rho);

// 2 |(Tr_B rho)_{12}|; equals |cos(phase_sum/2)| on the closed-form family.
double reduced_coherence(const PairState4& rho);

}  // namespace gme
