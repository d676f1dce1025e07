#pragma once

// Dirac-representation gamma matrices, rest-frame spinors, the
// (I (x) sigma^3) bilinears consumed by the rate assembly, and the
// tensor factors of the de Donder-gauge mediator for the two index
// choices used here.

#include "gme/cmatrix.hpp"

namespace gme {

struct GammaBasis {
    std::array<CMat4, 4> gamma;        // gamma^0..gamma^3, Dirac representation
    std::array<double, 4> eta_diag;    // metric signature (+,-,-,-)

    static const GammaBasis& dirac();
};

// gamma^mu; mu in {0,1,2,3}, else throws std::out_of_range.
const CMat4& gamma(int mu);

// sigma_{mu nu} = (i/2)[gamma_mu, gamma_nu] with lowered indices.
CMat4 sigma_tensor(int mu, int nu);

// ubar_{rprime} (I (x) sigma^3) u_r for rest-frame spinors, unit-normalised
// so the result is diag(+1, -1) over (rprime, r) in {1,2}^2. Evaluated by
// explicit contraction, not table lookup.
double bilinear_sigma3(int rprime, int r);

enum class PropagatorComponent { Static0000, Transverse0303 };

// Dimensionless numerator of -(eta eta + eta eta - eta eta)/|K|^2 for the
// selected index pairs: Static0000 -> -1, Transverse0303 -> +1. Recomputed
// from the metric on every call.
double propagator_factor(PropagatorComponent c);

// Asserts the algebraic inputs above (Clifford algebra, bilinear values,
// propagator factors) against their stored expectations; throws on mismatch.
void run_spinor_startup_checks();

}  // namespace gme
