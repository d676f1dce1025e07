#include "gme/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "gme/entanglement.hpp"

namespace gme {

namespace {

UnitSystem system_for(UnitSystem::Mode m) {
    return m == UnitSystem::Mode::SI ? UnitSystem::si() : UnitSystem::natural();
}

Kernel kernel_for(const SweepConfig& cfg) {
    if (cfg.kernel == "point") return point_kernel();
    if (cfg.kernel == "erf")
        return wavepacket_kernel({cfg.sigma0, cfg.sigma0p});
    throw ConfigError("--kernel: expected 'point' or 'erf', got '" + cfg.kernel +
                      "'");
}

CouplingModel model_for(ModelKind kind, double mass, double b3) {
    CouplingModel c;
    c.kind = kind;
    c.m1 = {mass, Dimension::Mass};
    c.m2 = {mass, Dimension::Mass};
    if (kind == ModelKind::ModelII)
        c.B3 = PhysicalQuantity{b3, Dimension::MagneticField};
    return c;
}

std::vector<double> mass_grid(const SweepConfig& cfg) {
    std::vector<double> m(static_cast<std::size_t>(cfg.points));
    const int n = cfg.points - 1;
    if (cfg.log_grid) {
        const double la = std::log(cfg.mass_min);
        const double lb = std::log(cfg.mass_max);
        for (int i = 0; i <= n; ++i)
            m[static_cast<std::size_t>(i)] = std::exp(la + (lb - la) * i / n);
    } else {
        for (int i = 0; i <= n; ++i)
            m[static_cast<std::size_t>(i)] =
                cfg.mass_min + (cfg.mass_max - cfg.mass_min) * i / n;
    }
    return m;
}

// Second difference of the kernel across the layout; the phase sum is
// (g_c tau / hbar) times this.
double kernel_curvature(const Geometry& g, const Kernel& k) {
    return k(g.d - g.dx) + k(g.d + g.dx) - 2.0 * k(g.d);
}

PairState4 quarter_state() {
    PairState4 s;
    for (auto& row : s.m)
        for (auto& e : row) e = 0.25;
    return s;
}

}  // namespace

SweepConfig preset(const std::string& name) {
    SweepConfig cfg;
    if (name == "setA") {
        cfg.d = 10e-9;
        cfg.tau = 1e3;
    } else if (name == "setB") {
        cfg.d = 0.1e-9;
        cfg.tau = 1e6;
    } else {
        throw ConfigError("--preset: unknown preset '" + name +
                          "' (expected setA or setB)");
    }
    cfg.dx = cfg.d / 2.0;
    cfg.b3 = 1.0;
    return cfg;
}

void validate(const SweepConfig& cfg) {
    if (cfg.models.empty())
        throw ConfigError("--model: at least one model is required");
    if (!(cfg.d > 0.0)) throw ConfigError("--d: must be > 0");
    if (cfg.dx < 0.0) throw ConfigError("--dx: must be >= 0");
    if (!(cfg.dx < cfg.d)) throw ConfigError("--dx: must be < --d");
    if (cfg.tau < 0.0) throw ConfigError("--tau: must be >= 0");
    if (cfg.b3 < 0.0) throw ConfigError("--b3: must be >= 0");
    if (cfg.sigma0 < 0.0) throw ConfigError("--sigma0: must be >= 0");
    if (cfg.sigma0p < 0.0) throw ConfigError("--sigma0p: must be >= 0");
    if (cfg.kernel != "point" && cfg.kernel != "erf")
        throw ConfigError("--kernel: expected 'point' or 'erf'");
    if (!(cfg.mass_min > 0.0)) throw ConfigError("--mass-min: must be > 0");
    if (!(cfg.mass_min < cfg.mass_max))
        throw ConfigError("--mass-min: must be < --mass-max");
    if (cfg.points < 2) throw ConfigError("--points: must be >= 2");
    if (cfg.steps < 0) throw ConfigError("--steps: must be >= 0");
}

std::vector<SweepRow> run_sweep(const SweepConfig& cfg) {
    validate(cfg);
    const UnitSystem us = system_for(cfg.units);
    const UnitSystem nat = UnitSystem::natural();
    const Geometry g{cfg.d, cfg.dx};
    const Kernel kernel = kernel_for(cfg);

    // Fixed SI reporting columns regardless of the input unit system.
    auto to_si = [&](double v, Dimension dim) {
        return convert({v, dim}, us, UnitSystem::si()).value;
    };
    const double d_m = to_si(cfg.d, Dimension::Length);
    const double dx_m = to_si(cfg.dx, Dimension::Length);
    const double tau_s = to_si(cfg.tau, Dimension::Time);
    const double b3_T = to_si(cfg.b3, Dimension::MagneticField);

    std::vector<SweepRow> rows;
    rows.reserve(static_cast<std::size_t>(cfg.points) * cfg.models.size());
    for (double mass : mass_grid(cfg)) {
        for (ModelKind kind : cfg.models) {
            const CouplingModel model = model_for(kind, mass, cfg.b3);
            const PhasePair phases = phase_pair(model, g, cfg.tau, us, kernel);
            const PairState4 rho = closed_form_state(phases);

            SweepRow row;
            row.model = kind;
            row.mass_kg = to_si(mass, Dimension::Mass);
            row.coupling_natural = coupling_strength(
                model_for(kind, convert({mass, Dimension::Mass}, us, nat).value,
                          convert({cfg.b3, Dimension::MagneticField}, us, nat)
                              .value),
                nat);
            row.dphi_LR = phases.dphi_LR;
            row.dphi_RL = phases.dphi_RL;
            row.phase_sum = phases.phase_sum();
            row.log_negativity = log_negativity(rho);
            row.kernel = cfg.kernel;
            row.d_m = d_m;
            row.dx_m = dx_m;
            row.tau_s = tau_s;
            row.b3_T = b3_T;
            rows.push_back(row);

            // Cross-check the exact solution against the integrator wherever
            // the accumulated phases are small enough for a 4096-step run.
            const double span = std::max(
                {std::abs(phases.dphi_LR), std::abs(phases.dphi_RL),
                 std::abs(phases.dphi_RL - phases.dphi_LR)});
            if (cfg.steps > 0 && span > 0.0 && span <= 8.0) {
                const RateMatrix rm = rate_matrix(model, g, us, kernel);
                const PairState4 evolved =
                    evolve_rk4(quarter_state(), rm, cfg.tau, cfg.steps);
                if (max_abs_diff(evolved.m, rho.m) > 1e-9)
                    throw std::logic_error(
                        "run_sweep: integrator disagrees with the closed-form "
                        "solution");
            }
        }
    }
    std::stable_sort(rows.begin(), rows.end(),
                     [](const SweepRow& a, const SweepRow& b) {
                         return a.mass_kg < b.mass_kg;
                     });
    return rows;
}

std::string rows_to_csv(const std::vector<SweepRow>& rows) {
    std::string out =
        "model,mass_kg,coupling_natural,dphi_LR,dphi_RL,phase_sum,"
        "log_negativity,kernel,d_m,dx_m,tau_s,B3_T\n";
    char buf[512];
    for (const SweepRow& r : rows) {
        std::snprintf(buf, sizeof(buf),
                      "%s,%.16e,%.16e,%.16e,%.16e,%.16e,%.16e,%s,%.16e,%.16e,"
                      "%.16e,%.16e\n",
                      model_name(r.model), r.mass_kg, r.coupling_natural,
                      r.dphi_LR, r.dphi_RL, r.phase_sum, r.log_negativity,
                      r.kernel.c_str(), r.d_m, r.dx_m, r.tau_s, r.b3_T);
        out += buf;
    }
    return out;
}

CrossoverResult find_crossover(const SweepConfig& cfg) {
    validate(cfg);
    if (!(cfg.b3 > 0.0))
        throw ConfigError(
            "--b3: crossover requires b3 > 0 (the activated coupling vanishes "
            "identically)");
    const UnitSystem us = system_for(cfg.units);
    const UnitSystem nat = UnitSystem::natural();
    const double b3n =
        convert({cfg.b3, Dimension::MagneticField}, us, nat).value;

    auto log_gap = [&](double m_nat) {
        const double ci =
            coupling_strength(model_for(ModelKind::ModelI, m_nat, b3n), nat);
        const double cii =
            coupling_strength(model_for(ModelKind::ModelII, m_nat, b3n), nat);
        return std::log(ci) - std::log(cii);
    };

    double lo = convert({cfg.mass_min, Dimension::Mass}, us, nat).value;
    double hi = convert({cfg.mass_max, Dimension::Mass}, us, nat).value;
    double flo = log_gap(lo);
    double fhi = log_gap(hi);
    if (flo == 0.0) hi = lo;
    else if (fhi == 0.0) lo = hi;
    else if (flo * fhi > 0.0)
        throw ConfigError(
            "--mass-min/--mass-max: no coupling crossover inside the grid (no "
            "sign change)");
    for (int it = 0; it < 200 && hi / lo - 1.0 > 1e-15; ++it) {
        const double mid = std::sqrt(lo * hi);
        const double fm = log_gap(mid);
        if (fm == 0.0) {
            lo = hi = mid;
        } else if (fm * flo < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fm;
        }
    }

    CrossoverResult res;
    res.mass_natural = std::sqrt(lo * hi);
    res.mass_kg =
        convert({res.mass_natural, Dimension::Mass}, nat, UnitSystem::si())
            .value;
    const double ci = coupling_strength(
        model_for(ModelKind::ModelI, res.mass_natural, b3n), nat);
    const double cii = coupling_strength(
        model_for(ModelKind::ModelII, res.mass_natural, b3n), nat);
    res.coupling_ratio = ci / cii;
    res.ratio_to_reference = res.mass_kg / res.reference_kg;
    return res;
}

double entanglement_threshold_mass_kg(const SweepConfig& cfg, ModelKind kind,
                                      double level) {
    if (kind == ModelKind::StaticLimit) return 0.0;
    if (!(level > 0.0) || !(level <= 1.0))
        throw std::invalid_argument("threshold level must lie in (0, 1]");
    const UnitSystem us = system_for(cfg.units);
    const UnitSystem nat = UnitSystem::natural();
    const Geometry g_nat{
        convert({cfg.d, Dimension::Length}, us, nat).value,
        convert({cfg.dx, Dimension::Length}, us, nat).value};
    WavePacketWidths w{
        convert({cfg.sigma0, Dimension::Length}, us, nat).value,
        convert({cfg.sigma0p, Dimension::Length}, us, nat).value};
    const Kernel k =
        cfg.kernel == "erf" ? wavepacket_kernel(w) : point_kernel();
    const double curv = kernel_curvature(g_nat, k);
    const double tau_n = convert({cfg.tau, Dimension::Time}, us, nat).value;
    const double a = UnitSystem::natural().G * tau_n * curv;
    if (!(a > 0.0)) return 0.0;

    // E_N = log2(1 + sin(s/2)) reaches `level` at this phase sum.
    const double s_star = 2.0 * std::asin(std::exp2(level) - 1.0);
    double m_nat;
    if (kind == ModelKind::ModelI) {
        m_nat = std::sqrt(s_star / a);
    } else {
        const double b3n =
            convert({cfg.b3, Dimension::MagneticField}, us, nat).value;
        if (!(b3n > 0.0)) return 0.0;
        m_nat = 0.5 * b3n * std::sqrt(a / s_star);
    }
    return convert({m_nat, Dimension::Mass}, nat, UnitSystem::si()).value;
}

}  // namespace gme
