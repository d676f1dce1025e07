#pragma once

// Density-matrix value types for one qubit and the pair, with tensor
// product, partial trace and partial transpose. Pair basis order is
// {LL, LR, RL, RR}; the index fold is I = 2*(i-1) + k for subsystem
// indices i (A) and k (B).

#include "gme/cmatrix.hpp"
#include "gme/errors.hpp"

namespace gme {

struct QubitState2 {
    CMat2 m{};
};

struct PairState4 {
    CMat4 m{};
};

// Hermitian to 1e-12, unit trace to 1e-12, eigenvalues >= -1e-10;
// throws InvalidState otherwise.
void validate(const QubitState2& s);
void validate(const PairState4& s);

// rho_IJ = a_ij * b_kl under the index fold. Inputs are validated.
PairState4 tensor(const QubitState2& a, const QubitState2& b);

// (rho_A)_ij = sum_k rho_{(i,k),(j,k)}
QubitState2 partial_trace_B(const PairState4& p);

// (rho^Gamma)_{(i,k),(j,l)} = rho_{(i,l),(j,k)}; Hermitian and trace
// preserving but in general not positive.
CMat4 partial_transpose_B(const PairState4& p);

double purity(const PairState4& p);  // trace(rho^2), real part

}  // namespace gme
