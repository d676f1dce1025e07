#pragma once

// Physical constants and SI <-> natural-unit conversions.
//
// Conventions (printed by the CLI with --print-units):
//   * Constants pinned to CODATA 2018: G, hbar, c, mu0.
//   * Natural units take hbar = c = 1 with energy as the base dimension,
//     measured in joule. Every supported quantity is a power of energy:
//       mass          kg  -> J      factor c^2
//       length        m   -> 1/J    factor 1/(hbar c)
//       time          s   -> 1/J    factor 1/hbar
//       frequency     1/s -> J      factor hbar
//       magnetic field T  -> J^2    factor sqrt((hbar c)^3 / mu0)
//     The magnetic-field factor uses the Heaviside-Lorentz normalisation
//     (field energy density B^2/2), so that B_SI^2/(2 mu0) and B_nat^2/2
//     describe the same energy density.
//   * kappa_sq = 16*pi*G in both modes; kappa_sq/(16*pi) always recovers G.

#include <string>

#include "gme/errors.hpp"

namespace gme {

enum class Dimension {
    Mass,
    Length,
    Time,
    MagneticField,
    Frequency,
    Dimensionless,
};

const char* dimension_name(Dimension d);

struct PhysicalQuantity {
    double value = 0.0;
    Dimension dim = Dimension::Dimensionless;
};

// Same-dimension arithmetic only; mismatches throw DimensionMismatch.
PhysicalQuantity operator+(const PhysicalQuantity& a, const PhysicalQuantity& b);
PhysicalQuantity operator-(const PhysicalQuantity& a, const PhysicalQuantity& b);
PhysicalQuantity operator*(double f, const PhysicalQuantity& a);

namespace constants {
// CODATA 2018
inline constexpr double G_si = 6.67430e-11;         // m^3 kg^-1 s^-2
inline constexpr double hbar_si = 1.054571817e-34;  // J s
inline constexpr double c_si = 299792458.0;         // m/s
inline constexpr double mu0_si = 1.25663706212e-6;  // N A^-2
}  // namespace constants

struct UnitSystem {
    enum class Mode { SI, Natural };

    Mode mode = Mode::SI;
    double hbar = constants::hbar_si;
    double c = constants::c_si;
    double G = constants::G_si;
    double kappa_sq = 0.0;  // 16*pi*G

    static UnitSystem si();
    static UnitSystem natural();
    // Natural system with G overridden (test normalisations such as G = 1).
    static UnitSystem natural_with_G(double g);
};

// kappa^2/(16*pi); equals the system's G up to rounding.
double coupling_prefactor(const UnitSystem& u);

// Rescales q between unit systems. Conversion factors are fixed by the
// CODATA anchors above and do not depend on a system's G override.
PhysicalQuantity convert(const PhysicalQuantity& q, const UnitSystem& from,
                         const UnitSystem& to);

// SI -> natural multiplier for one dimension.
double si_to_natural_factor(Dimension d);

// key=value dump of constants and conventions for audit output.
std::string describe_units(const UnitSystem& u);

}  // namespace gme
