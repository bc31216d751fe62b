// accelres: resonance dipole-dipole interaction energies for two uniformly
// accelerated entangled atoms near a perfectly reflecting mirror.
//
// Subcommands: energy, sweep, figure3, validate, convert.
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 I/O error.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "accelres/em_model.hpp"
#include "accelres/scalar_model.hpp"
#include "accelres/sweep.hpp"
#include "accelres/units.hpp"
#include "accelres/validation.hpp"

namespace {

constexpr int exit_ok = 0;
constexpr int exit_validation_failure = 1;
constexpr int exit_usage_error = 2;
constexpr int exit_io_error = 3;

struct EnergyFlags {
    std::string field = "scalar";
    std::string geometry = "perp";
    double a = 0.0;
    double sep = 0.0;
    double z = 0.0;
    double omega0 = 0.0;
    std::string state = "sym";
    double lambda_sq = 1.0;
    std::string dipole_a;
    std::string dipole_b;
    std::string dipole_preset;
    std::string dipole_mag = "1.0";
    std::string units = "natural";
};

void add_energy_flags(CLI::App* cmd, EnergyFlags& f, bool require_geometry) {
    cmd->add_option("--field", f.field, "scalar | em")
        ->check(CLI::IsMember({"scalar", "em"}));
    cmd->add_option("--geometry", f.geometry, "perp | par")
        ->check(CLI::IsMember({"perp", "par"}));
    auto* sep = cmd->add_option("--sep", f.sep, "separation L or D [eV^-1]");
    auto* z = cmd->add_option("--z", f.z, "nearest atom's mirror distance [eV^-1]");
    auto* w0 = cmd->add_option("--omega0", f.omega0, "transition frequency [eV]");
    cmd->add_option("--a", f.a, "proper acceleration [eV]");
    if (require_geometry) {
        sep->required();
        z->required();
        w0->required();
    }
    cmd->add_option("--state", f.state, "sym | anti")->check(CLI::IsMember({"sym", "anti"}));
    cmd->add_option("--lambda-sq", f.lambda_sq, "scalar coupling squared (scalar field)");
    cmd->add_option("--dipole-a", f.dipole_a, "dipole of atom A as x,y,z [e eV^-1]");
    cmd->add_option("--dipole-b", f.dipole_b, "dipole of atom B as x,y,z [e eV^-1]");
    cmd->add_option("--dipole-preset", f.dipole_preset,
                    "cross-xz | cross-xy | cross-yz | parallel-yy");
    cmd->add_option("--dipole-mag", f.dipole_mag,
                    "preset magnitude: a number, or 'ea0' for e * Bohr radius");
    cmd->add_option("--units", f.units, "natural | si (also print joules)")
        ->check(CLI::IsMember({"natural", "si"}));
}

accelres::Vec3 parse_vec3(const std::string& text, const char* flag) {
    accelres::Vec3 v;
    char trailing = '\0';
    if (std::sscanf(text.c_str(), "%lf,%lf,%lf%c", &v.x, &v.y, &v.z, &trailing) != 3) {
        throw CLI::ValidationError(std::string(flag) + ": expected x,y,z");
    }
    return v;
}

double parse_magnitude(const std::string& text) {
    if (text == "ea0") return accelres::units::e_bohr_dipole();
    try {
        size_t pos = 0;
        const double v = std::stod(text, &pos);
        if (pos != text.size()) throw std::invalid_argument(text);
        return v;
    } catch (const std::exception&) {
        throw CLI::ValidationError("--dipole-mag: expected a number or 'ea0'");
    }
}

accelres::Alignment parse_alignment(const std::string& s) {
    return s == "perp" ? accelres::Alignment::perpendicular : accelres::Alignment::parallel;
}

accelres::BellSign parse_state(const std::string& s) {
    return s == "sym" ? accelres::BellSign::symmetric : accelres::BellSign::antisymmetric;
}

accelres::DipolePair resolve_dipoles(const EnergyFlags& f) {
    if (!f.dipole_preset.empty()) {
        return accelres::dipole_preset(f.dipole_preset, parse_magnitude(f.dipole_mag));
    }
    if (f.dipole_a.empty() || f.dipole_b.empty()) {
        throw CLI::ValidationError("em field requires --dipole-a and --dipole-b, or --dipole-preset");
    }
    return {parse_vec3(f.dipole_a, "--dipole-a"), parse_vec3(f.dipole_b, "--dipole-b")};
}

accelres::EnergyBreakdown evaluate(const EnergyFlags& f) {
    const accelres::PairGeometry geometry{parse_alignment(f.geometry), f.sep, f.z, f.a};
    if (f.field == "scalar") {
        return accelres::scalar_energy(
            {geometry, f.omega0, f.lambda_sq, parse_state(f.state)});
    }
    return accelres::em_energy({geometry, f.omega0, resolve_dipoles(f), parse_state(f.state)});
}

void print_energy(const accelres::EnergyBreakdown& e, const std::string& units) {
    const bool si = units == "si";
    const auto line = [&](const char* name, double ev) {
        if (si) {
            std::printf("%-8s = %.9g eV (%.9g J)\n", name, ev,
                        accelres::units::energy_natural_to_si(ev));
        } else {
            std::printf("%-8s = %.9g eV\n", name, ev);
        }
    };
    line("free", e.free_term);
    line("boundary", e.boundary_term);
    line("total", e.total);
}

std::filesystem::path resolve_output(const std::string& out) {
    std::filesystem::path p(out);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("ACCELRES_OUTPUT_DIR"); dir && *dir) {
            p = std::filesystem::path(dir) / p;
        }
    }
    return p;
}

accelres::SweepParameter parse_sweep_parameter(const std::string& s) {
    if (s == "a") return accelres::SweepParameter::acceleration;
    if (s == "sep") return accelres::SweepParameter::separation;
    if (s == "z") return accelres::SweepParameter::mirror_distance;
    return accelres::SweepParameter::omega0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"resonance interaction of two accelerated atoms near a mirror"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_config("--config", "", "plain-text key=value configuration; flags override it");

    // ---- energy ----
    EnergyFlags energy_flags;
    auto* energy_cmd = app.add_subcommand("energy", "single-point energy query");
    add_energy_flags(energy_cmd, energy_flags, /*require_geometry=*/true);

    // ---- sweep ----
    EnergyFlags sweep_base;
    std::string sweep_param = "a";
    double sweep_from = 0.0, sweep_to = 0.0;
    int sweep_points = 2;
    std::string sweep_scale = "linear";
    std::string sweep_out = "sweep.csv";
    auto* sweep_cmd = app.add_subcommand("sweep", "sweep one parameter to CSV");
    add_energy_flags(sweep_cmd, sweep_base, /*require_geometry=*/true);
    sweep_cmd->add_option("--param", sweep_param, "a | sep | z | omega0")
        ->check(CLI::IsMember({"a", "sep", "z", "omega0"}));
    sweep_cmd->add_option("--from", sweep_from)->required();
    sweep_cmd->add_option("--to", sweep_to)->required();
    sweep_cmd->add_option("--points", sweep_points)->required();
    sweep_cmd->add_option("--scale", sweep_scale, "linear | log")
        ->check(CLI::IsMember({"linear", "log"}));
    sweep_cmd->add_option("--out", sweep_out, "output CSV path");

    // ---- figure3 ----
    accelres::Figure3Options fig_opt;
    std::string fig_out = "figure3.csv";
    auto* fig_cmd = app.add_subcommand(
        "figure3", "acceleration sweep at the stock geometry, CSV plus gnuplot script");
    fig_cmd->add_option("--out", fig_out, "output CSV path");
    fig_cmd->add_option("--a-min", fig_opt.a_min, "smallest acceleration [eV]");
    fig_cmd->add_option("--a-max", fig_opt.a_max, "largest acceleration [eV]");
    fig_cmd->add_option("--points", fig_opt.points);
    fig_cmd->add_option("--sep", fig_opt.separation, "separation [eV^-1]");
    fig_cmd->add_option("--z", fig_opt.z, "mirror distance [eV^-1]");
    fig_cmd->add_option("--omega0", fig_opt.omega0, "transition frequency [eV]");

    // ---- validate ----
    std::string validate_filter;
    auto* validate_cmd = app.add_subcommand("validate", "run the oracle suite");
    validate_cmd->add_option("--filter", validate_filter, "keep case ids containing substring");

    // ---- convert ----
    auto* convert_cmd = app.add_subcommand("convert", "unit conversions");
    double conv_length_si = -1.0, conv_length_nat = -1.0;
    double conv_accel_si = -1.0, conv_accel_nat = -1.0;
    double conv_temp_k = -1.0, conv_temp_ev = -1.0;
    double conv_unruh_nat = -1.0, conv_unruh_si = -1.0;
    convert_cmd->add_option("--length-si", conv_length_si, "meters -> eV^-1");
    convert_cmd->add_option("--length-nat", conv_length_nat, "eV^-1 -> meters");
    convert_cmd->add_option("--accel-si", conv_accel_si, "m/s^2 -> eV");
    convert_cmd->add_option("--accel-nat", conv_accel_nat, "eV -> m/s^2");
    convert_cmd->add_option("--temp-k", conv_temp_k, "kelvin -> eV");
    convert_cmd->add_option("--temp-ev", conv_temp_ev, "eV -> kelvin");
    convert_cmd->add_option("--unruh-a-nat", conv_unruh_nat,
                            "Unruh temperature [eV] of an acceleration [eV]");
    convert_cmd->add_option("--unruh-a-si", conv_unruh_si,
                            "Unruh temperature [K] of an acceleration [m/s^2]");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_usage_error;
    }

    try {
        if (energy_cmd->parsed()) {
            print_energy(evaluate(energy_flags), energy_flags.units);
            return exit_ok;
        }
        if (sweep_cmd->parsed()) {
            accelres::SweepSpec spec;
            spec.parameter = parse_sweep_parameter(sweep_param);
            spec.from = sweep_from;
            spec.to = sweep_to;
            spec.points = sweep_points;
            spec.scale = sweep_scale == "log" ? accelres::SweepScale::log
                                              : accelres::SweepScale::linear;
            const accelres::PairGeometry geometry{parse_alignment(sweep_base.geometry),
                                                  sweep_base.sep, sweep_base.z, sweep_base.a};
            if (sweep_base.field == "scalar") {
                spec.field = accelres::FieldKind::scalar;
                spec.scalar = {geometry, sweep_base.omega0, sweep_base.lambda_sq,
                               parse_state(sweep_base.state)};
            } else {
                spec.field = accelres::FieldKind::em;
                spec.em = {geometry, sweep_base.omega0, resolve_dipoles(sweep_base),
                           parse_state(sweep_base.state)};
            }
            const auto rows = accelres::run_sweep(spec);
            const auto path = resolve_output(sweep_out);
            std::ofstream os(path, std::ios::binary);
            if (!os) {
                std::fprintf(stderr, "error: cannot open %s\n", path.string().c_str());
                return exit_io_error;
            }
            accelres::write_sweep_csv(os, rows);
            if (!os.good()) {
                std::fprintf(stderr, "error: write failed for %s\n", path.string().c_str());
                return exit_io_error;
            }
            std::printf("wrote %s (%zu rows)\n", path.string().c_str(), rows.size());
            return exit_ok;
        }
        if (fig_cmd->parsed()) {
            const auto path = resolve_output(fig_out);
            try {
                accelres::write_figure3_files(path, fig_opt);
            } catch (const std::runtime_error& e) {
                std::fprintf(stderr, "error: %s\n", e.what());
                return exit_io_error;
            }
            std::printf("wrote %s and %s\n", path.string().c_str(),
                        std::filesystem::path(path).replace_extension(".gp").string().c_str());
            return exit_ok;
        }
        if (validate_cmd->parsed()) {
            const auto reports = accelres::validation::run_validation_suite(validate_filter);
            accelres::validation::print_reports(std::cout, reports);
            const bool ok = accelres::validation::all_passed(reports);
            std::printf("# %zu cases, %s\n", reports.size(), ok ? "all passed" : "FAILURES");
            return ok ? exit_ok : exit_validation_failure;
        }
        if (convert_cmd->parsed()) {
            namespace u = accelres::units;
            bool any = false;
            const auto emit = [&](bool given, const char* name, double value, const char* unit) {
                if (!given) return;
                std::printf("%s = %.9g %s\n", name, value, unit);
                any = true;
            };
            emit(convert_cmd->count("--length-si") > 0, "length",
                 conv_length_si >= 0 ? u::length_si_to_natural(conv_length_si) : 0.0, "eV^-1");
            emit(convert_cmd->count("--length-nat") > 0, "length",
                 conv_length_nat >= 0 ? u::length_natural_to_si(conv_length_nat) : 0.0, "m");
            emit(convert_cmd->count("--accel-si") > 0, "acceleration",
                 conv_accel_si >= 0 ? u::acceleration_si_to_natural(conv_accel_si) : 0.0, "eV");
            emit(convert_cmd->count("--accel-nat") > 0, "acceleration",
                 conv_accel_nat >= 0 ? u::acceleration_natural_to_si(conv_accel_nat) : 0.0,
                 "m/s^2");
            emit(convert_cmd->count("--temp-k") > 0, "temperature",
                 conv_temp_k >= 0 ? u::temperature_si_to_natural(conv_temp_k) : 0.0, "eV");
            emit(convert_cmd->count("--temp-ev") > 0, "temperature",
                 conv_temp_ev >= 0 ? u::temperature_natural_to_si(conv_temp_ev) : 0.0, "K");
            emit(convert_cmd->count("--unruh-a-nat") > 0, "unruh_temperature",
                 conv_unruh_nat >= 0 ? u::unruh_temperature(conv_unruh_nat) : 0.0, "eV");
            emit(convert_cmd->count("--unruh-a-si") > 0, "unruh_temperature",
                 conv_unruh_si >= 0 ? u::unruh_temperature_si_kelvin(conv_unruh_si) : 0.0, "K");
            if (!any) {
                std::fprintf(stderr, "error: convert requires at least one conversion flag\n");
                return exit_usage_error;
            }
            return exit_ok;
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage_error;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage_error;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_usage_error;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return exit_io_error;
    }
    return exit_usage_error;
}
