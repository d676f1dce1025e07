#pragma once

// Dynamical core: coupling models, accumulated phases, forward-scattering
// rate assembly, fixed-step integration, the closed-form evolved state and
// the wave-packet-regularised interaction kernel.
//
// The forward-scattering dynamics is entrywise linear: each pair-state
// entry rotates with a constant per-entry rate built from differences of
// the interaction kernel evaluated at the four path-pair separations.

#include <functional>
#include <optional>

#include "gme/cmatrix.hpp"
#include "gme/geometry.hpp"
#include "gme/state.hpp"
#include "gme/units.hpp"

namespace gme {

enum class ModelKind { ModelI, ModelII, StaticLimit };

const char* model_name(ModelKind k);

struct CouplingModel {
    ModelKind kind = ModelKind::ModelI;
    PhysicalQuantity m1{0.0, Dimension::Mass};
    PhysicalQuantity m2{0.0, Dimension::Mass};
    // External magnetic field along the layout axis; required for ModelII.
    std::optional<PhysicalQuantity> B3;
};

// Interaction strength in units of G*mass^2 of the given system.
//   ModelI:      G * m1 * m2
//   ModelII:     G * B3^2 / (4 m1 m2), i.e. the Larmor replacement
//                m_i -> omega0_i / 2 with omega0_i = B3 / m_i evaluated in
//                natural units and mapped back to the requested system.
//   StaticLimit: 0
double coupling_strength(const CouplingModel& c, const UnitSystem& u);

struct WavePacketWidths {
    double sigma0 = 0.0;
    double sigma0p = 0.0;

    // Width entering the regularised kernel: the product of the two
    // single-particle Gaussians carries exp(-(sigma0^2 + sigma0p^2)|K|^2),
    // which matches exp(-sigma^2 |K|^2 / 2) for sigma^2 = 2(sigma0^2+sigma0p^2).
    double sigma_eff() const;
};

using Kernel = std::function<double(double)>;

// K(R) = 1/R (point particles).
Kernel point_kernel();

// K(R) = erf(R / (sqrt(2) sigma_eff)) / R; reduces to 1/R for zero widths,
// stays finite as R -> 0 with limit 2/(sqrt(2 pi) sigma_eff).
Kernel wavepacket_kernel(const WavePacketWidths& w);

// Error function; |error| <= 1e-12 for |x| <= 6, saturates to +-1 beyond.
double erf(double x);

struct PhasePair {
    double dphi_LR = 0.0;    // phi_LR - phi, <= 0
    double dphi_RL = 0.0;    // phi_RL - phi, >= 0
    double phi_common = 0.0; // phi at separation d

    double phase_sum() const { return dphi_LR + dphi_RL; }
};

// phi_ab = g_c * tau * K(R_ab) / hbar for the three distinct separations.
PhasePair phase_pair(const CouplingModel& c, const Geometry& g, double tau,
                     const UnitSystem& u);
PhasePair phase_pair(const CouplingModel& c, const Geometry& g, double tau,
                     const UnitSystem& u, const Kernel& kernel);

// Quadruple spin sum of the forward-scattering contraction: kernel-weighted
// vertex products folded to the 4x4 pair index. The paired state picture is
// rho_dot = -i * g_c * F with g_c = coupling_strength. Vertex parities come
// from bilinear_sigma3 and enter squared; gain/loss signs are calibrated so
// the assembled rates equal rate_matrix (see explain_signs()).
CMat4 assemble_F(const QubitState2& rhoA, const QubitState2& rhoB,
                 const Geometry& g, const Kernel& kernel);
CMat4 assemble_F(const QubitState2& rhoA, const QubitState2& rhoB,
                 const Geometry& g);

struct RateMatrix {
    // Entrywise generator: rho_dot_IJ = lambda_IJ * rho_IJ. The diagonal and
    // the (1,4)/(4,1) corner vanish; lambda_JI = conj(lambda_IJ) so Hermitian
    // states stay Hermitian.
    CMat4 lambda{};
};

RateMatrix rate_matrix(const CouplingModel& c, const Geometry& g,
                       const UnitSystem& u, const Kernel& kernel);
RateMatrix rate_matrix(const CouplingModel& c, const Geometry& g,
                       const UnitSystem& u);

// Classical fixed-step RK4 on the entrywise-linear system; trace is
// renormalised to 1 on output.
PairState4 evolve_rk4(const PairState4& rho0, const RateMatrix& rm, double tau,
                      int steps);

// Evolved pure state for the all-1/4 initial condition:
// rho_IJ = v_I conj(v_J)/4 with v = (1, e^{i dphi_LR}, e^{i dphi_RL}, 1).
PairState4 closed_form_state(const PhasePair& p);

// Human-readable description of the sign conventions fixed at calibration.
std::string explain_signs();

// Asserts that the quadruple-sum assembly reproduces the closed rate
// formulas on a reference geometry (and runs the spinor checks);
// throws on mismatch.
void run_startup_checks();

}  // namespace gme
