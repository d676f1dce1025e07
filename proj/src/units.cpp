#include "gme/units.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

namespace gme {

namespace {

constexpr double kPi = std::numbers::pi;

double checked_factor(Dimension d) {
    using namespace constants;
    switch (d) {
        case Dimension::Mass:
            return c_si * c_si;  // kg -> J
        case Dimension::Length:
            return 1.0 / (hbar_si * c_si);  // m -> 1/J
        case Dimension::Time:
            return 1.0 / hbar_si;  // s -> 1/J
        case Dimension::MagneticField:
            // Heaviside-Lorentz: B_nat^2/2 carries the SI energy density
            // B^2/(2 mu0) once volumes are expressed in 1/J^3.
            return std::sqrt(hbar_si * c_si * hbar_si * c_si * hbar_si * c_si /
                             mu0_si);  // T -> J^2
        case Dimension::Frequency:
            return hbar_si;  // 1/s -> J
        case Dimension::Dimensionless:
            return 1.0;
    }
    throw UnsupportedDimension("convert: unsupported dimension");
}

}  // namespace

const char* dimension_name(Dimension d) {
    switch (d) {
        case Dimension::Mass: return "mass";
        case Dimension::Length: return "length";
        case Dimension::Time: return "time";
        case Dimension::MagneticField: return "magnetic_field";
        case Dimension::Frequency: return "frequency";
        case Dimension::Dimensionless: return "dimensionless";
    }
    return "unknown";
}

PhysicalQuantity operator+(const PhysicalQuantity& a, const PhysicalQuantity& b) {
    if (a.dim != b.dim)
        throw DimensionMismatch(std::string("cannot add ") + dimension_name(a.dim) +
                                " to " + dimension_name(b.dim));
    return {a.value + b.value, a.dim};
}

PhysicalQuantity operator-(const PhysicalQuantity& a, const PhysicalQuantity& b) {
    if (a.dim != b.dim)
        throw DimensionMismatch(std::string("cannot subtract ") +
                                dimension_name(b.dim) + " from " +
                                dimension_name(a.dim));
    return {a.value - b.value, a.dim};
}

PhysicalQuantity operator*(double f, const PhysicalQuantity& a) {
    return {f * a.value, a.dim};
}

UnitSystem UnitSystem::si() {
    UnitSystem u;
    u.mode = Mode::SI;
    u.hbar = constants::hbar_si;
    u.c = constants::c_si;
    u.G = constants::G_si;
    u.kappa_sq = 16.0 * kPi * u.G;
    return u;
}

UnitSystem UnitSystem::natural() {
    using namespace constants;
    UnitSystem u;
    u.mode = Mode::Natural;
    u.hbar = 1.0;
    u.c = 1.0;
    // G in 1/J^2: G_SI / (hbar c^5), the inverse square of the Planck energy.
    u.G = G_si / (hbar_si * c_si * c_si * c_si * c_si * c_si);
    u.kappa_sq = 16.0 * kPi * u.G;
    return u;
}

UnitSystem UnitSystem::natural_with_G(double g) {
    UnitSystem u = natural();
    u.G = g;
    u.kappa_sq = 16.0 * kPi * g;
    return u;
}

double coupling_prefactor(const UnitSystem& u) {
    return u.kappa_sq / (16.0 * kPi);
}

double si_to_natural_factor(Dimension d) { return checked_factor(d); }

PhysicalQuantity convert(const PhysicalQuantity& q, const UnitSystem& from,
                         const UnitSystem& to) {
    const double f = checked_factor(q.dim);  // validates the dimension
    if (from.mode == to.mode) return q;
    if (from.mode == UnitSystem::Mode::SI) return {q.value * f, q.dim};
    return {q.value / f, q.dim};
}

std::string describe_units(const UnitSystem& u) {
    char buf[160];
    std::string out;
    auto kv = [&](const char* key, double v, const char* unit) {
        std::snprintf(buf, sizeof(buf), "%s=%.12g %s\n", key, v, unit);
        out += buf;
    };
    out += std::string("mode=") +
           (u.mode == UnitSystem::Mode::SI ? "SI" : "natural") + "\n";
    kv("G", u.G, u.mode == UnitSystem::Mode::SI ? "m^3 kg^-1 s^-2" : "J^-2");
    kv("hbar", u.hbar, u.mode == UnitSystem::Mode::SI ? "J s" : "1");
    kv("c", u.c, u.mode == UnitSystem::Mode::SI ? "m/s" : "1");
    kv("kappa_sq", u.kappa_sq,
       u.mode == UnitSystem::Mode::SI ? "(16 pi G) m^3 kg^-1 s^-2" : "(16 pi G) J^-2");
    kv("mu0", constants::mu0_si, "N A^-2 (CODATA 2018 anchor)");
    out += "natural_base=energy (joule), hbar=c=1\n";
    out += "magnetic_field_convention=Heaviside-Lorentz (u = B^2/2)\n";
    kv("factor_mass_kg_to_J", si_to_natural_factor(Dimension::Mass), "c^2");
    kv("factor_length_m_to_invJ", si_to_natural_factor(Dimension::Length),
       "1/(hbar c)");
    kv("factor_time_s_to_invJ", si_to_natural_factor(Dimension::Time), "1/hbar");
    kv("factor_frequency_invs_to_J", si_to_natural_factor(Dimension::Frequency),
       "hbar");
    kv("factor_magnetic_field_T_to_J2",
       si_to_natural_factor(Dimension::MagneticField), "sqrt((hbar c)^3/mu0)");
    kv("G_natural", UnitSystem::natural().G, "J^-2");
    return out;
}

}  // namespace gme
