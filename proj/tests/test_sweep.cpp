#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gme/sweep.hpp"

using namespace gme;

namespace {

SweepConfig small_config() {
    SweepConfig cfg = preset("setA");
    cfg.points = 9;
    cfg.mass_min = 1e-22;
    cfg.mass_max = 1e-18;
    return cfg;
}

}  // namespace

TEST_CASE("presets pin the two named parameter sets") {
    const SweepConfig a = preset("setA");
    CHECK(a.d == 10e-9);
    CHECK(a.dx == 5e-9);
    CHECK(a.tau == 1e3);
    CHECK(a.b3 == 1.0);
    const SweepConfig b = preset("setB");
    CHECK(b.d == 0.1e-9);
    CHECK(b.dx == 0.05e-9);
    CHECK(b.tau == 1e6);
    CHECK_THROWS_AS(preset("setC"), ConfigError);
}

TEST_CASE("config validation names the offending flag") {
    SweepConfig cfg = small_config();
    cfg.dx = cfg.d;
    try {
        validate(cfg);
        FAIL("expected ConfigError");
    } catch (const ConfigError& e) {
        CHECK(std::string(e.what()).find("--dx") != std::string::npos);
    }
    cfg = small_config();
    cfg.points = 1;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = small_config();
    cfg.mass_min = cfg.mass_max;
    CHECK_THROWS_AS(validate(cfg), ConfigError);
    cfg = small_config();
    cfg.kernel = "gauss";
    CHECK_THROWS_AS(validate(cfg), ConfigError);
}

TEST_CASE("static limit sweeps report exactly zero negativity") {
    SweepConfig cfg = small_config();
    cfg.models = {ModelKind::StaticLimit};
    for (const SweepRow& r : run_sweep(cfg)) {
        CHECK(r.log_negativity == 0.0);
        CHECK(r.phase_sum == 0.0);
        CHECK(r.coupling_natural == 0.0);
    }
}

TEST_CASE("log-log slopes are +2 for model I and -2 for model II") {
    SweepConfig cfg = small_config();
    cfg.points = 41;
    for (auto [kind, expect] :
         {std::pair{ModelKind::ModelI, 2.0}, {ModelKind::ModelII, -2.0}}) {
        cfg.models = {kind};
        const auto rows = run_sweep(cfg);
        for (std::size_t i = 1; i + 1 < rows.size(); ++i) {
            const double slope =
                (std::log(std::abs(rows[i + 1].phase_sum)) -
                 std::log(std::abs(rows[i - 1].phase_sum))) /
                (std::log(rows[i + 1].mass_kg) - std::log(rows[i - 1].mass_kg));
            CHECK(slope == doctest::Approx(expect).epsilon(1e-6));
        }
    }
}

TEST_CASE("csv output is deterministic and carries the schema") {
    const SweepConfig cfg = small_config();
    const std::string csv1 = rows_to_csv(run_sweep(cfg));
    const std::string csv2 = rows_to_csv(run_sweep(cfg));
    CHECK(csv1 == csv2);
    CHECK(csv1.rfind("model,mass_kg,coupling_natural,dphi_LR,dphi_RL,phase_sum,"
                     "log_negativity,kernel,d_m,dx_m,tau_s,B3_T\n",
                     0) == 0);
    // one row per (model, mass) plus header
    const auto lines = std::count(csv1.begin(), csv1.end(), '\n');
    CHECK(lines == 1 + 2 * cfg.points);
}

TEST_CASE("every row ties negativity to the phase sum") {
    SweepConfig cfg = small_config();
    cfg.points = 25;
    cfg.mass_min = 1e-20;
    cfg.mass_max = 1e-17;
    for (const SweepRow& r : run_sweep(cfg)) {
        const double expected =
            std::log2(1.0 + std::abs(std::sin(0.5 * r.phase_sum)));
        CHECK(r.log_negativity == doctest::Approx(expected).epsilon(1e-9));
        CHECK(r.phase_sum ==
              doctest::Approx(r.dphi_LR + r.dphi_RL).epsilon(1e-12));
    }
}

TEST_CASE("erf kernel rows never exceed the point-kernel phase sum") {
    SweepConfig point_cfg = small_config();
    SweepConfig erf_cfg = point_cfg;
    erf_cfg.kernel = "erf";
    erf_cfg.sigma0 = 2e-9;
    erf_cfg.sigma0p = 1e-9;
    const auto rows_point = run_sweep(point_cfg);
    const auto rows_erf = run_sweep(erf_cfg);
    REQUIRE(rows_point.size() == rows_erf.size());
    for (std::size_t i = 0; i < rows_point.size(); ++i) {
        CHECK(rows_erf[i].phase_sum <= rows_point[i].phase_sum + 1e-15);
        CHECK(std::abs(rows_erf[i].phase_sum) <=
              std::abs(rows_point[i].phase_sum) + 1e-15);
    }
}

TEST_CASE("crossover bisection in test-normalised units") {
    // G = 1 natural system equivalent: work directly in natural units.
    SweepConfig cfg;
    cfg.units = UnitSystem::Mode::Natural;
    cfg.models = {ModelKind::ModelI, ModelKind::ModelII};
    cfg.d = 2.0;
    cfg.dx = 1.0;
    cfg.tau = 1.0;
    cfg.b3 = 2.0;  // natural units: crossover at m = sqrt(2/2) = 1
    cfg.mass_min = 1e-3;
    cfg.mass_max = 1e3;
    const CrossoverResult cx = find_crossover(cfg);
    CHECK(cx.mass_natural == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cx.coupling_ratio == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("crossover for 1 tesla reports the natural-unit answer") {
    SweepConfig cfg = preset("setA");
    cfg.mass_min = 1e-40;
    cfg.mass_max = 1e-20;
    const CrossoverResult cx = find_crossover(cfg);
    const UnitSystem nat = UnitSystem::natural();
    const double b3n =
        convert({1.0, Dimension::MagneticField}, UnitSystem::si(), nat).value;
    CHECK(cx.mass_natural ==
          doctest::Approx(std::sqrt(b3n / 2.0)).epsilon(1e-12));
    CHECK(cx.coupling_ratio == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cx.ratio_to_reference ==
          doctest::Approx(cx.mass_kg / 1e-27).epsilon(1e-12));

    SweepConfig no_field = cfg;
    no_field.b3 = 0.0;
    CHECK_THROWS_AS(find_crossover(no_field), ConfigError);

    SweepConfig no_crossing = cfg;
    no_crossing.mass_min = 1e-30;
    no_crossing.mass_max = 1e-28;
    CHECK_THROWS_AS(find_crossover(no_crossing), ConfigError);
}

TEST_CASE("sweep polylines straddle the crossover mass") {
    SweepConfig cfg = preset("setA");
    cfg.points = 61;
    cfg.mass_min = 1e-40;
    cfg.mass_max = 1e-30;
    const CrossoverResult cx = find_crossover(cfg);
    REQUIRE(cx.mass_kg > cfg.mass_min);
    REQUIRE(cx.mass_kg < cfg.mass_max);
    const auto rows = run_sweep(cfg);
    // walk mass cells; the phase gap between models must change sign inside
    // the cell containing m*
    double prev_gap = 0.0, prev_mass = 0.0;
    bool bracketed = false;
    for (std::size_t i = 0; i + 1 < rows.size(); i += 2) {
        REQUIRE(rows[i].mass_kg == rows[i + 1].mass_kg);
        const double gap = std::abs(rows[i].phase_sum) - std::abs(rows[i + 1].phase_sum);
        if (i > 0 && prev_gap * gap <= 0.0) {
            CHECK(prev_mass <= cx.mass_kg);
            CHECK(cx.mass_kg <= rows[i].mass_kg);
            bracketed = true;
            break;
        }
        prev_gap = gap;
        prev_mass = rows[i].mass_kg;
    }
    CHECK(bracketed);
}

TEST_CASE("svg output is well formed") {
    SweepConfig cfg = small_config();
    cfg.models = {ModelKind::ModelI};
    const auto rows_one = run_sweep(cfg);
    const std::string svg_one = emit_svg(rows_one, PlotKind::PhaseVsMass);
    CHECK(svg_one.find("<svg xmlns=\"http://www.w3.org/2000/svg\"") !=
          std::string::npos);
    CHECK(svg_one.find("</svg>") != std::string::npos);

    std::size_t count_one = 0;
    for (std::size_t pos = 0;
         (pos = svg_one.find("<polyline", pos)) != std::string::npos; ++pos)
        ++count_one;
    CHECK(count_one == 1);

    cfg.models = {ModelKind::ModelI, ModelKind::ModelII};
    const std::string svg_two = emit_svg(run_sweep(cfg), PlotKind::PhaseVsMass);
    std::size_t count_two = 0;
    for (std::size_t pos = 0;
         (pos = svg_two.find("<polyline", pos)) != std::string::npos; ++pos)
        ++count_two;
    CHECK(count_two == 2);

    CHECK_THROWS_AS(emit_svg({}, PlotKind::PhaseVsMass), ConfigError);
}

TEST_CASE("negativity-vs-phase plot peaks at pi with value 1") {
    // mass window spanning a single phase period [0.04, ~6.2] under setA
    SweepConfig cfg = preset("setA");
    cfg.models = {ModelKind::ModelI};
    cfg.points = 301;
    cfg.mass_min = 1e-18;
    cfg.mass_max = 1.21e-17;
    const auto rows = run_sweep(cfg);
    double best_en = 0.0, best_phase = 0.0;
    bool spans_pi = false;
    for (const SweepRow& r : rows) {
        if (r.log_negativity > best_en) {
            best_en = r.log_negativity;
            best_phase = r.phase_sum;
        }
        if (r.phase_sum > std::numbers::pi) spans_pi = true;
    }
    REQUIRE(spans_pi);
    CHECK(best_en == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(best_phase == doctest::Approx(std::numbers::pi).epsilon(0.05));
    CHECK(emit_svg(rows, PlotKind::NegativityVsPhaseSum).find("phase sum") !=
          std::string::npos);
}

TEST_CASE("threshold masses follow the phase scaling") {
    const SweepConfig cfg = preset("setA");
    const double m_i =
        entanglement_threshold_mass_kg(cfg, ModelKind::ModelI, 0.01);
    REQUIRE(m_i > 0.0);
    // verify by reconstructing the phase sum at the threshold mass
    SweepConfig probe = cfg;
    probe.models = {ModelKind::ModelI};
    probe.points = 2;
    probe.mass_min = m_i * (1.0 - 1e-9);
    probe.mass_max = m_i * (1.0 + 1e-9);
    const auto rows = run_sweep(probe);
    CHECK(rows.front().log_negativity == doctest::Approx(0.01).epsilon(1e-6));

    const double m_ii =
        entanglement_threshold_mass_kg(cfg, ModelKind::ModelII, 0.01);
    REQUIRE(m_ii > 0.0);
    probe.models = {ModelKind::ModelII};
    probe.mass_min = m_ii * (1.0 - 1e-9);
    probe.mass_max = m_ii * (1.0 + 1e-9);
    const auto rows2 = run_sweep(probe);
    CHECK(rows2.front().log_negativity == doctest::Approx(0.01).epsilon(1e-6));

    CHECK(entanglement_threshold_mass_kg(cfg, ModelKind::StaticLimit, 0.01) ==
          0.0);
}
