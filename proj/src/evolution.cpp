#include "gme/evolution.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "gme/spinor.hpp"

namespace gme {

namespace {

const cplx kI(0.0, 1.0);
constexpr double kSqrtPi = 1.7724538509055160273;

// Maclaurin series, adequate up to |x| ~ 2 where the alternating terms are
// still well conditioned.
double erf_series(double x) {
    const double x2 = x * x;
    double term = x;
    double sum = x;
    for (int n = 1; n < 80; ++n) {
        term *= -x2 / n;
        const double contrib = term / (2 * n + 1);
        sum += contrib;
        if (std::abs(contrib) < 1e-18 * std::abs(sum)) break;
    }
    return 2.0 / kSqrtPi * sum;
}

// Continued fraction for erfc(x), x >= 2 (modified Lentz):
// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x != 0.0 ? x : tiny;
    double c = f;
    double d = 0.0;
    for (int n = 1; n < 200; ++n) {
        const double a = 0.5 * n;
        d = x + a * d;
        if (d == 0.0) d = tiny;
        c = x + a / c;
        if (c == 0.0) c = tiny;
        d = 1.0 / d;
        const double delta = c * d;
        f *= delta;
        if (std::abs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / (kSqrtPi * f);
}

// Separations keyed by the four pair-basis configurations LL, LR, RL, RR.
std::array<double, 4> config_separations(const Geometry& g) {
    return {separation(g, {Path::L, Path::L}), separation(g, {Path::L, Path::R}),
            separation(g, {Path::R, Path::L}), separation(g, {Path::R, Path::R})};
}

// Relative gain/loss weights fixed by calibration against the closed rate
// formulas; see explain_signs().
constexpr double kGainSign = -1.0;
constexpr double kLossSign = 1.0;

}  // namespace

const char* model_name(ModelKind k) {
    switch (k) {
        case ModelKind::ModelI: return "I";
        case ModelKind::ModelII: return "II";
        case ModelKind::StaticLimit: return "static";
    }
    return "?";
}

double erf(double x) {
    if (std::isnan(x)) return x;
    const double ax = std::abs(x);
    double r;
    if (ax <= 2.0)
        r = erf_series(ax);
    else
        r = 1.0 - erfc_cf(ax);
    return x < 0.0 ? -r : r;
}

double WavePacketWidths::sigma_eff() const {
    if (sigma0 < 0.0 || sigma0p < 0.0)
        throw std::invalid_argument("wave packet widths must be >= 0");
    return std::sqrt(2.0 * (sigma0 * sigma0 + sigma0p * sigma0p));
}

Kernel point_kernel() {
    return [](double r) { return 1.0 / r; };
}

Kernel wavepacket_kernel(const WavePacketWidths& w) {
    const double sigma = w.sigma_eff();
    if (sigma == 0.0) return point_kernel();
    const double a = 1.0 / (std::numbers::sqrt2 * sigma);
    return [a](double r) { return gme::erf(a * r) / r; };
}

double coupling_strength(const CouplingModel& c, const UnitSystem& u) {
    if (c.kind == ModelKind::StaticLimit) return 0.0;
    if (c.m1.dim != Dimension::Mass || c.m2.dim != Dimension::Mass)
        throw DimensionMismatch("coupling_strength: m1/m2 must carry mass");
    if (!(c.m1.value > 0.0) || !(c.m2.value > 0.0))
        throw std::invalid_argument("coupling_strength: masses must be > 0");
    if (c.kind == ModelKind::ModelI) return u.G * c.m1.value * c.m2.value;

    // ModelII: the mass product is replaced by the Larmor product
    // omega0_1 * omega0_2 / 4 with omega0_i = B3/m_i; evaluate in natural
    // units, then express the two effective masses back in u.
    if (!c.B3)
        throw std::invalid_argument("coupling_strength: ModelII requires B3");
    if (c.B3->dim != Dimension::MagneticField)
        throw DimensionMismatch("coupling_strength: B3 must carry magnetic_field");
    if (c.B3->value < 0.0)
        throw std::invalid_argument("coupling_strength: B3 must be >= 0");
    const UnitSystem nat = UnitSystem::natural();
    const double m1n = convert(c.m1, u, nat).value;
    const double m2n = convert(c.m2, u, nat).value;
    const double b3n = convert(*c.B3, u, nat).value;
    const PhysicalQuantity meff1{b3n / (2.0 * m1n), Dimension::Mass};
    const PhysicalQuantity meff2{b3n / (2.0 * m2n), Dimension::Mass};
    return u.G * convert(meff1, nat, u).value * convert(meff2, nat, u).value;
}

PhasePair phase_pair(const CouplingModel& c, const Geometry& g, double tau,
                     const UnitSystem& u, const Kernel& kernel) {
    if (tau < 0.0) throw std::invalid_argument("phase_pair: tau must be >= 0");
    const double gh = coupling_strength(c, u) / u.hbar;
    const double k_common = kernel(separation(g, {Path::L, Path::L}));
    const double k_rl = kernel(separation(g, {Path::R, Path::L}));
    const double k_lr = kernel(separation(g, {Path::L, Path::R}));
    PhasePair p;
    p.phi_common = gh * tau * k_common;
    p.dphi_RL = gh * tau * k_rl - p.phi_common;
    p.dphi_LR = gh * tau * k_lr - p.phi_common;
    return p;
}

PhasePair phase_pair(const CouplingModel& c, const Geometry& g, double tau,
                     const UnitSystem& u) {
    return phase_pair(c, g, tau, u, point_kernel());
}

CMat4 assemble_F(const QubitState2& rhoA, const QubitState2& rhoB,
                 const Geometry& g, const Kernel& kernel) {
    // Kernel values for A on path r against B on path s.
    double ksr[2][2];
    for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
            ksr[s][r] = kernel(separation(
                g, {r == 0 ? Path::L : Path::R, s == 0 ? Path::L : Path::R}));

    // Vertex parity factors from the rest-frame contraction (diag(+1,-1)).
    double bil[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) bil[a][b] = bilinear_sigma3(a + 1, b + 1);

    CMat4 f{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    cplx acc{};
                    for (int r = 0; r < 2; ++r)
                        for (int rp = 0; rp < 2; ++rp)
                            for (int s = 0; s < 2; ++s)
                                for (int sp = 0; sp < 2; ++sp) {
                                    const double w = bil[rp][r] * bil[sp][s];
                                    if (w == 0.0) continue;
                                    // Parities enter squared; only the
                                    // spin-path slaving of R_sr survives.
                                    const double w2 = w * w;
                                    cplx term{};
                                    if (r == i && s == k)
                                        term += kGainSign * rhoA.m[rp][j] *
                                                rhoB.m[sp][l];
                                    if (rp == j && sp == l)
                                        term += kLossSign * rhoA.m[i][r] *
                                                rhoB.m[k][s];
                                    acc += w2 * ksr[s][r] * term;
                                }
                    f[2 * i + k][2 * j + l] = acc;
                }
    return f;
}

CMat4 assemble_F(const QubitState2& rhoA, const QubitState2& rhoB,
                 const Geometry& g) {
    return assemble_F(rhoA, rhoB, g, point_kernel());
}

RateMatrix rate_matrix(const CouplingModel& c, const Geometry& g,
                       const UnitSystem& u, const Kernel& kernel) {
    const double gh = coupling_strength(c, u) / u.hbar;
    RateMatrix rm;
    if (gh == 0.0) return rm;
    const auto k = config_separations(g);
    std::array<double, 4> kv{kernel(k[0]), kernel(k[1]), kernel(k[2]),
                             kernel(k[3])};
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            rm.lambda[a][b] = kI * gh * (kv[a] - kv[b]);
    return rm;
}

RateMatrix rate_matrix(const CouplingModel& c, const Geometry& g,
                       const UnitSystem& u) {
    return rate_matrix(c, g, u, point_kernel());
}

PairState4 evolve_rk4(const PairState4& rho0, const RateMatrix& rm, double tau,
                      int steps) {
    if (steps < 1) throw std::invalid_argument("evolve_rk4: steps must be >= 1");
    if (tau < 0.0) throw std::invalid_argument("evolve_rk4: tau must be >= 0");
    validate(rho0);

    const double h = tau / steps;
    PairState4 rho = rho0;
    for (int n = 0; n < steps; ++n) {
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) {
                const cplx lam = rm.lambda[a][b];
                if (lam == cplx{}) continue;
                const cplx y = rho.m[a][b];
                const cplx k1 = lam * y;
                const cplx k2 = lam * (y + 0.5 * h * k1);
                const cplx k3 = lam * (y + 0.5 * h * k2);
                const cplx k4 = lam * (y + h * k3);
                rho.m[a][b] = y + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
            }
    }
    const double tr = trace(rho.m).real();
    if (tr != 1.0)
        for (auto& row : rho.m)
            for (auto& e : row) e /= tr;
    return rho;
}

PairState4 closed_form_state(const PhasePair& p) {
    const std::array<cplx, 4> v{cplx(1.0), std::exp(kI * p.dphi_LR),
                                std::exp(kI * p.dphi_RL), cplx(1.0)};
    PairState4 rho;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) rho.m[a][b] = 0.25 * v[a] * std::conj(v[b]);
    return rho;
}

std::string explain_signs() {
    return
        "forward-scattering sign calibration\n"
        "  mediator tensor factor, static (00,00) indices      : -1\n"
        "  mediator tensor factor, transverse (03,03) indices  : +1\n"
        "    (both recomputed from the metric at startup; the transverse\n"
        "     factor flips the sign of the -i prefactor in the rate)\n"
        "  vertex parity ubar (I x sigma3) u: +1 for spin 1 / path L,\n"
        "    -1 for spin 2 / path R; parities enter the assembled rate\n"
        "    squared, so only the spin-path slaving of the separations\n"
        "    R_sr survives in the kernel weights\n"
        "  gain/loss combination: (-gain, +loss), equivalent to the\n"
        "    diagonal-generator form lambda_IJ = +i (g_c/hbar) (K_I - K_J)\n"
        "    with K_I the kernel at the configuration-I separation\n"
        "  cross-check at startup: quadruple-sum assembly against the\n"
        "    closed rate formulas on a reference geometry, to 1e-14\n";
}

void run_startup_checks() {
    run_spinor_startup_checks();

    // Assembled rates must match the closed formulas on a reference layout.
    const Geometry g{2.0, 1.0};
    QubitState2 plus;
    for (auto& row : plus.m)
        for (auto& e : row) e = 0.5;
    const CMat4 f = assemble_F(plus, plus, g);
    const UnitSystem u = UnitSystem::natural_with_G(1.0);
    const CouplingModel unit_model{ModelKind::ModelI,
                                   {1.0, Dimension::Mass},
                                   {1.0, Dimension::Mass},
                                   std::nullopt};
    const RateMatrix rm = rate_matrix(unit_model, g, u);
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            const cplx assembled = -kI * f[a][b] * 4.0;  // rho_IJ = 1/4
            if (std::abs(assembled - rm.lambda[a][b]) > 1e-14)
                throw std::logic_error(
                    "evolution: sign calibration of the rate assembly failed");
        }
}

}  // namespace gme
