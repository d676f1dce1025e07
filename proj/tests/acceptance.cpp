// Acceptance suite: one pass/fail line per criterion, exit code 0 only if
// every criterion holds at its stated tolerance.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "gme/entanglement.hpp"
#include "gme/evolution.hpp"
#include "gme/sweep.hpp"
#include "oracle.hpp"

using namespace gme;

namespace {

constexpr double kPi = std::numbers::pi;

struct Harness {
    int failures = 0;
    std::vector<PairState4> evolved_states;

    void note(const PairState4& s) { evolved_states.push_back(s); }

    void criterion(int id, const std::string& label, double time_limit_s,
                   const std::function<bool(std::string&)>& body) {
        std::string detail;
        bool ok = false;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            ok = body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        const double dt =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                .count();
        if (time_limit_s > 0.0 && dt >= time_limit_s) {
            ok = false;
            detail += (detail.empty() ? "" : "; ") + std::string("over time limit");
        }
        if (!ok) ++failures;
        std::printf("criterion %2d: %s  [%.2fs] %s%s%s\n", id,
                    ok ? "PASS" : "FAIL", dt, label.c_str(),
                    detail.empty() ? "" : " -- ", detail.c_str());
        std::fflush(stdout);
    }
};

PairState4 quarter_state() {
    PairState4 s;
    for (auto& row : s.m)
        for (auto& e : row) e = 0.25;
    return s;
}

QubitState2 plus_state() {
    QubitState2 s;
    for (auto& row : s.m)
        for (auto& e : row) e = 0.5;
    return s;
}

CouplingModel model_I_natural(double mass) {
    return {ModelKind::ModelI,
            {mass, Dimension::Mass},
            {mass, Dimension::Mass},
            {}};
}

double negativity_law(double s) {
    return std::log2(1.0 + std::abs(std::sin(0.5 * s)));
}

PairState4 state_with_phase_sum(double s) {
    PhasePair p;
    p.dphi_LR = 0.25 * s;
    p.dphi_RL = 0.75 * s;
    return closed_form_state(p);
}

}  // namespace

int main() {
    Harness h;
    const UnitSystem nat1 = UnitSystem::natural_with_G(1.0);
    const UnitSystem si = UnitSystem::si();

    run_startup_checks();

    // 1. Static-limit null result for both model parameter sets.
    h.criterion(1, "static limit generates no entanglement", 1.0, [&](std::string& detail) {
        const Geometry g{2.0, 1.0};
        for (bool magnetic : {false, true}) {
            CouplingModel c{ModelKind::StaticLimit,
                            {1.0, Dimension::Mass},
                            {1.0, Dimension::Mass},
                            {}};
            if (magnetic)
                c.B3 = PhysicalQuantity{1.0, Dimension::MagneticField};
            const RateMatrix rm = rate_matrix(c, g, nat1);
            for (int i = 0; i < 100; ++i) {
                const double tau = 0.1 * (i + 1);
                const PairState4 rho =
                    evolve_rk4(quarter_state(), rm, tau, 256);
                h.note(rho);
                if (log_negativity(rho) != 0.0) {
                    detail = "nonzero negativity at tau index " + std::to_string(i);
                    return false;
                }
            }
        }
        return true;
    });

    // 2. RK4 (4096 steps) vs closed form, 100 random tuples, 1e-9.
    h.criterion(2, "integrator matches the closed-form solution to 1e-9", 10.0,
                [&](std::string& detail) {
        std::mt19937_64 gen(20260810);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double d = 0.5 + 4.5 * u01(gen);
            const double dx = d * (0.05 + 0.85 * u01(gen));
            const Geometry g{d, dx};
            const double g_c = 0.1 + 9.9 * u01(gen);
            const double max_rate = g_c * 2.0 * dx / (d * d - dx * dx);
            const double tau = (0.1 + 19.9 * u01(gen)) / max_rate;
            const CouplingModel c = model_I_natural(std::sqrt(g_c));
            const RateMatrix rm = rate_matrix(c, g, nat1);
            const PairState4 evolved = evolve_rk4(quarter_state(), rm, tau, 4096);
            const PairState4 closed =
                closed_form_state(phase_pair(c, g, tau, nat1));
            h.note(evolved);
            h.note(closed);
            worst = std::max(worst, max_abs_diff(evolved.m, closed.m));
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max entry error %.2e", worst);
        detail = buf;
        return worst <= 1e-9;
    });

    // 3. State-vector oracle vs closed form, 100 random tuples, 1e-12.
    h.criterion(3, "state-vector oracle equals the closed form to 1e-12", 5.0,
                [&](std::string& detail) {
        std::mt19937_64 gen(5150);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        double worst = 0.0;
        for (int i = 0; i < 100; ++i) {
            const double d = 0.5 + 4.5 * u01(gen);
            const double dx = d * (0.05 + 0.85 * u01(gen));
            const Geometry g{d, dx};
            const double g_c = 0.1 + 3.9 * u01(gen);
            const double tau = 10.0 * d * u01(gen);  // common phase <= ~20
            const PairState4 sv =
                oracle::statevector_evolution(g, g_c, tau, nat1);
            const CouplingModel c = model_I_natural(std::sqrt(g_c));
            const PairState4 cf = closed_form_state(phase_pair(c, g, tau, nat1));
            h.note(sv);
            worst = std::max(worst, max_abs_diff(sv.m, cf.m));
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max entry error %.2e", worst);
        detail = buf;
        return worst <= 1e-12;
    });

    // 4. Rate coefficients assembled from the quadruple spin sum.
    h.criterion(4, "assembled rates reproduce the reference coefficients", 0.0,
                [&](std::string& detail) {
        const Geometry g{2.0, 1.0};
        const CMat4 f = assemble_F(plus_state(), plus_state(), g);
        const cplx iu(0.0, 1.0);
        // lambda_IJ = -i * F_IJ / rho_IJ with rho_IJ = 1/4 and unit coupling
        auto lam = [&](int a, int b) { return -iu * f[a][b] * 4.0; };
        struct Expect { int a, b; double im; };
        const Expect table[] = {
            {0, 1, 1.0 / 6.0},  {0, 2, -1.0 / 2.0}, {1, 2, -2.0 / 3.0},
            {1, 3, -1.0 / 6.0}, {2, 3, 1.0 / 2.0},
        };
        for (const auto& e : table) {
            const cplx got = lam(e.a, e.b);
            if (std::abs(got - cplx(0.0, e.im)) > 1e-14 ||
                std::abs(lam(e.b, e.a) - std::conj(got)) > 1e-14) {
                detail = "entry (" + std::to_string(e.a + 1) + "," +
                         std::to_string(e.b + 1) + ") off";
                return false;
            }
        }
        for (int k = 0; k < 4; ++k)
            if (std::abs(f[k][k]) > 1e-16) {
                detail = "nonzero diagonal";
                return false;
            }
        if (std::abs(f[0][3]) > 1e-16 || std::abs(f[3][0]) > 1e-16) {
            detail = "nonzero (1,4) corner";
            return false;
        }
        return true;
    });

    // 5. Negativity law over 1000 phase sums in [0, 2 pi].
    std::vector<PairState4> grid_states;
    std::vector<double> grid_sums;
    h.criterion(5, "negativity follows log2(1+|sin(s/2)|), maximal 1 at pi", 5.0,
                [&](std::string& detail) {
        const int n = 1000;
        double worst = 0.0;
        double at_pi = -1.0;
        double prev = -1.0;
        int argmax = -1;
        double best = -1.0;
        for (int i = 0; i <= n; ++i) {
            const double s = 2.0 * kPi * i / n;
            const PairState4 rho = state_with_phase_sum(s);
            grid_states.push_back(rho);
            grid_sums.push_back(s);
            h.note(rho);
            const double en = log_negativity(rho);
            worst = std::max(worst, std::abs(en - negativity_law(s)));
            if (i == n / 2) at_pi = en;
            if (en > best) {
                best = en;
                argmax = i;
            }
            if (i <= n / 2 && i > 0 && en < prev - 1e-12) {
                detail = "not monotone on [0, pi]";
                return false;
            }
            prev = en;
        }
        char buf[96];
        std::snprintf(buf, sizeof(buf), "max law error %.2e, E_N(pi) = %.12f",
                      worst, at_pi);
        detail = buf;
        return worst <= 1e-9 && std::abs(at_pi - 1.0) <= 1e-9 &&
               argmax == 500;
    });

    // 6. Reduced coherence on the same grid.
    h.criterion(6, "reduced coherence equals |cos(s/2)| to 1e-9", 0.0,
                [&](std::string& detail) {
        double worst = 0.0;
        for (std::size_t i = 0; i < grid_states.size(); ++i) {
            const double expected = std::abs(std::cos(0.5 * grid_sums[i]));
            worst = std::max(
                worst, std::abs(reduced_coherence(grid_states[i]) - expected));
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max error %.2e", worst);
        detail = buf;
        return worst <= 1e-9 && !grid_states.empty();
    });

    // 7. Wave-packet kernel vs quadrature; Coulomb recovery; phase shrink.
    h.criterion(7, "erf kernel matches quadrature and caps the phase sum", 30.0,
                [&](std::string& detail) {
        const double sigma = 1.0;
        const Kernel k = wavepacket_kernel({std::sqrt(0.5) * sigma, 0.0});
        double worst = 0.0;
        for (int i = 0; i < 40; ++i) {
            const double ratio =
                std::pow(10.0, -3.0 + (std::log10(20.0) + 3.0) * i / 39.0);
            const double r = ratio * sigma;
            const double closed = k(r) / (4.0 * kPi);
            const double quad = oracle::kernel_by_quadrature(r, sigma);
            worst = std::max(worst, std::abs(closed - quad) / std::abs(quad));
        }
        if (worst > 1e-6) {
            detail = "quadrature disagreement";
            return false;
        }
        for (double r : {10.0, 14.0, 20.0}) {
            const double coulomb = 1.0 / (4.0 * kPi * r);
            if (std::abs(k(r) / (4.0 * kPi) - coulomb) > 1e-6 * coulomb) {
                detail = "Coulomb limit missed";
                return false;
            }
        }
        std::mt19937_64 gen(777);
        std::uniform_real_distribution<double> u01(0.0, 1.0);
        const CouplingModel c = model_I_natural(1.0);
        for (int i = 0; i < 200; ++i) {
            const double d = 0.5 + 4.5 * u01(gen);
            const Geometry g{d, d * (0.05 + 0.9 * u01(gen))};
            const double s0 = 0.01 + 3.0 * u01(gen);
            const double tau = 5.0 * u01(gen);
            const double sharp = phase_pair(c, g, tau, nat1).phase_sum();
            const double smeared =
                phase_pair(c, g, tau, nat1, wavepacket_kernel({s0, 0.0}))
                    .phase_sum();
            if (smeared > sharp + 1e-12) {
                detail = "erf phase sum exceeded the point kernel";
                return false;
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max rel quadrature error %.2e", worst);
        detail = buf;
        return true;
    });

    // 8. Log-log sweep slopes +2 / -2 at every interior grid point.
    h.criterion(8, "sweep slopes are +2 (model I) and -2 (model II)", 5.0,
                [&](std::string& detail) {
        SweepConfig cfg = preset("setA");
        cfg.points = 200;
        cfg.mass_min = 1e-30;
        cfg.mass_max = 1e-20;
        double worst = 0.0;
        for (auto [kind, expect] :
             {std::pair{ModelKind::ModelI, 2.0}, {ModelKind::ModelII, -2.0}}) {
            cfg.models = {kind};
            const auto rows = run_sweep(cfg);
            for (const SweepRow& r : rows) {
                PhasePair p;
                p.dphi_LR = r.dphi_LR;
                p.dphi_RL = r.dphi_RL;
                h.note(closed_form_state(p));
            }
            for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
                const double slope =
                    (std::log(std::abs(rows[i + 1].phase_sum)) -
                     std::log(std::abs(rows[i - 1].phase_sum))) /
                    (std::log(rows[i + 1].mass_kg) -
                     std::log(rows[i - 1].mass_kg));
                worst = std::max(worst, std::abs(slope - expect));
            }
        }
        char buf[64];
        std::snprintf(buf, sizeof(buf), "max slope deviation %.2e", worst);
        detail = buf;
        return worst <= 1e-6;
    });

    // 9. Crossover structure; the kg value is reported, not asserted.
    h.criterion(9, "coupling crossover at sqrt(B3_natural/2)", 0.0,
                [&](std::string& detail) {
        SweepConfig cfg = preset("setA");
        cfg.mass_min = 1e-40;
        cfg.mass_max = 1e-20;
        const CrossoverResult cx = find_crossover(cfg);
        const double b3n =
            convert({1.0, Dimension::MagneticField}, si, UnitSystem::natural())
                .value;
        const double expected = std::sqrt(b3n / 2.0);
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "m* = %.6e kg, computed/reference(1e-27 kg) = %.3e "
                      "(convention-dependent, reported only)",
                      cx.mass_kg, cx.ratio_to_reference);
        detail = buf;
        return std::abs(cx.coupling_ratio - 1.0) <= 1e-12 &&
               std::abs(cx.mass_natural - expected) <= 1e-12 * expected;
    });

    // 10. State sanity across everything the earlier criteria evolved.
    h.criterion(10, "all evolved states stay physical", 0.0,
                [&](std::string& detail) {
        double herm = 0.0, tr = 0.0, eig_min = 0.0, pur = 0.0;
        for (const PairState4& s : h.evolved_states) {
            herm = std::max(herm, hermiticity_defect(s.m));
            tr = std::max(tr, std::abs(trace(s.m) - cplx(1.0, 0.0)));
            const auto eig = hermitian_eigen(s.m);
            eig_min = std::min(eig_min, eig.values.back());
            pur = std::max(pur, std::abs(purity(s) - 1.0));
        }
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "%zu states: herm %.1e, trace %.1e, min eig %.1e, purity "
                      "%.1e",
                      h.evolved_states.size(), herm, tr, eig_min, pur);
        detail = buf;
        return !h.evolved_states.empty() && herm <= 1e-12 && tr <= 1e-12 &&
               eig_min >= -1e-10 && pur <= 1e-9;
    });

    // 11. Byte-identical CSV for repeated preset sweeps.
    h.criterion(11, "preset sweeps are byte-identical across runs", 0.0,
                [&](std::string& detail) {
        for (const char* name : {"setA", "setB"}) {
            SweepConfig cfg = preset(name);
            cfg.points = 61;
            const std::string a = rows_to_csv(run_sweep(cfg));
            const std::string b = rows_to_csv(run_sweep(cfg));
            if (a != b || a.empty()) {
                detail = std::string(name) + " differed";
                return false;
            }
        }
        return true;
    });

    if (h.failures == 0) {
        std::printf("acceptance: all criteria passed\n");
        return 0;
    }
    std::printf("acceptance: %d criterion(s) failed\n", h.failures);
    return 1;
}
