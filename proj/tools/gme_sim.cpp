// Sweep driver: evolves the two-qubit pair over a mass grid for the
// selected coupling models, writes CSV (and optional SVG plots), and
// reports the coupling crossover and entanglement thresholds.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gme/sweep.hpp"

namespace {

gme::ModelKind parse_model(const std::string& s) {
    if (s == "I" || s == "i" || s == "1") return gme::ModelKind::ModelI;
    if (s == "II" || s == "ii" || s == "2") return gme::ModelKind::ModelII;
    if (s == "static") return gme::ModelKind::StaticLimit;
    throw gme::ConfigError("--model: expected I, II or static, got '" + s + "'");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw gme::ConfigError("cannot open output file '" + path + "'");
    out << content;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gravitationally mediated two-qubit entanglement sweeps "
        "(forward-scattering phase dynamics)"};
    app.set_config("--config", "", "INI key=value config file; flags win");

    std::vector<std::string> model_names;
    std::string preset_name;
    gme::SweepConfig cfg;
    std::string units_name = "si";
    std::string svg_kind = "phase";
    bool print_units = false;
    bool explain_signs = false;
    bool crossover_only = false;

    app.add_option("--model", model_names, "coupling model: I, II or static")
        ->delimiter(',');
    app.add_option("--preset", preset_name,
                   "parameter set: setA (d=10nm, tau=1e3s) or setB (d=0.1nm, "
                   "tau=1e6s); both dx=d/2, B3=1T");
    auto* od = app.add_option("--d", cfg.d, "centre separation (m)");
    auto* odx = app.add_option("--dx", cfg.dx, "superposition extent (m)");
    auto* otau = app.add_option("--tau", cfg.tau, "hold time (s)");
    auto* ob3 = app.add_option("--b3", cfg.b3, "magnetic field (T)");
    app.add_option("--mass-min", cfg.mass_min, "lower sweep mass (kg)");
    app.add_option("--mass-max", cfg.mass_max, "upper sweep mass (kg)");
    app.add_option("--points", cfg.points, "grid points");
    app.add_flag("--linear-grid{false},!--log-grid", cfg.log_grid,
                 "mass grid spacing (default log)");
    app.add_option("--kernel", cfg.kernel, "interaction kernel: point | erf");
    app.add_option("--sigma0", cfg.sigma0, "wave packet width, particle A (m)");
    app.add_option("--sigma0p", cfg.sigma0p, "wave packet width, particle B (m)");
    app.add_option("--steps", cfg.steps,
                   "RK4 steps for the built-in evolution self-check (0 = off)");
    app.add_option("--out", cfg.out_csv, "CSV output path");
    app.add_option("--svg", cfg.out_svg, "SVG output path");
    app.add_option("--svg-kind", svg_kind,
                   "plot: phase | negativity | negativity-vs-phase");
    app.add_option("--units", units_name, "input units: si | natural");
    app.add_flag("--print-units", print_units,
                 "dump constants and conventions, then exit");
    app.add_flag("--explain-signs", explain_signs,
                 "print the sign calibration, then exit");
    app.add_flag("--crossover", crossover_only,
                 "report only the model I/II coupling crossover");

    CLI11_PARSE(app, argc, argv);

    try {
        gme::run_startup_checks();

        if (units_name == "si") cfg.units = gme::UnitSystem::Mode::SI;
        else if (units_name == "natural") cfg.units = gme::UnitSystem::Mode::Natural;
        else throw gme::ConfigError("--units: expected si or natural");

        if (print_units) {
            const auto sys = cfg.units == gme::UnitSystem::Mode::SI
                                 ? gme::UnitSystem::si()
                                 : gme::UnitSystem::natural();
            std::cout << gme::describe_units(sys);
            return 0;
        }
        if (explain_signs) {
            std::cout << gme::explain_signs();
            return 0;
        }

        if (!preset_name.empty()) {
            const gme::SweepConfig p = gme::preset(preset_name);
            if (!od->count()) cfg.d = p.d;
            if (!odx->count()) cfg.dx = p.dx;
            if (!otau->count()) cfg.tau = p.tau;
            if (!ob3->count()) cfg.b3 = p.b3;
        }
        if (!model_names.empty()) {
            cfg.models.clear();
            for (const auto& s : model_names) cfg.models.push_back(parse_model(s));
        }

        const bool both_models =
            std::count(cfg.models.begin(), cfg.models.end(),
                       gme::ModelKind::ModelI) &&
            std::count(cfg.models.begin(), cfg.models.end(),
                       gme::ModelKind::ModelII);

        if (crossover_only) {
            const auto cx = gme::find_crossover(cfg);
            std::printf("crossover_mass_kg=%.6e\n", cx.mass_kg);
            std::printf("crossover_mass_natural_J=%.6e\n", cx.mass_natural);
            std::printf("coupling_ratio_at_crossover=%.12f\n", cx.coupling_ratio);
            std::printf("reference_crossover_kg=%.1e\n", cx.reference_kg);
            std::printf("ratio_computed_to_reference=%.6e\n",
                        cx.ratio_to_reference);
            return 0;
        }

        const auto rows = gme::run_sweep(cfg);
        write_file(cfg.out_csv, gme::rows_to_csv(rows));
        std::printf("wrote %s (%zu rows)\n", cfg.out_csv.c_str(), rows.size());

        if (!cfg.out_svg.empty()) {
            gme::PlotKind kind;
            if (svg_kind == "phase") kind = gme::PlotKind::PhaseVsMass;
            else if (svg_kind == "negativity") kind = gme::PlotKind::NegativityVsMass;
            else if (svg_kind == "negativity-vs-phase")
                kind = gme::PlotKind::NegativityVsPhaseSum;
            else throw gme::ConfigError("--svg-kind: unknown plot kind '" + svg_kind + "'");
            write_file(cfg.out_svg, gme::emit_svg(rows, kind));
            std::printf("wrote %s\n", cfg.out_svg.c_str());
        }

        for (gme::ModelKind kind : cfg.models) {
            if (kind == gme::ModelKind::StaticLimit) continue;
            const double m = gme::entanglement_threshold_mass_kg(cfg, kind, 0.01);
            if (!(m > 0.0)) continue;
            const double ref = kind == gme::ModelKind::ModelI ? 1e-23 : 1e-31;
            std::printf(
                "model %-6s E_N >= 0.01 %s m = %.6e kg   (reference %.0e kg, "
                "ratio %.3e)\n",
                gme::model_name(kind),
                kind == gme::ModelKind::ModelI ? "above" : "below", m, ref,
                m / ref);
        }
        if (both_models) {
            try {
                const auto cx = gme::find_crossover(cfg);
                std::printf(
                    "coupling crossover at m* = %.6e kg (%.6e J natural); "
                    "coupling ratio %.12f\n",
                    cx.mass_kg, cx.mass_natural, cx.coupling_ratio);
                std::printf(
                    "  reference estimate %.0e kg; ratio computed/reference = "
                    "%.6e\n",
                    cx.reference_kg, cx.ratio_to_reference);
            } catch (const gme::ConfigError& e) {
                std::printf("coupling crossover: %s\n", e.what());
            }
        }
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
