#include "accelres/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace accelres {

namespace {

std::vector<double> grid_points(double from, double to, int points, SweepScale scale) {
    std::vector<double> out;
    out.reserve(static_cast<size_t>(points));
    if (points == 1) {
        out.push_back(from);
        return out;
    }
    if (scale == SweepScale::linear) {
        const double step = (to - from) / (points - 1);
        for (int i = 0; i < points; ++i) out.push_back(from + step * i);
    } else {
        const double ratio = std::log(to / from) / (points - 1);
        for (int i = 0; i < points; ++i) out.push_back(from * std::exp(ratio * i));
    }
    out.back() = to;
    return out;
}

void apply_parameter(PairGeometry& g, double& omega0, SweepParameter param, double value) {
    switch (param) {
        case SweepParameter::acceleration: g.a = value; break;
        case SweepParameter::separation: g.separation = value; break;
        case SweepParameter::mirror_distance: g.z = value; break;
        case SweepParameter::omega0: omega0 = value; break;
    }
}

}  // namespace

void SweepSpec::validate() const {
    if (points < 2) {
        throw std::domain_error("SweepSpec: points must be >= 2");
    }
    if (!(from < to)) {
        throw std::domain_error("SweepSpec: from must be < to");
    }
    if (scale == SweepScale::log && !(from > 0.0)) {
        throw std::domain_error("SweepSpec: log scale requires from > 0");
    }
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    spec.validate();
    const std::vector<double> values = grid_points(spec.from, spec.to, spec.points, spec.scale);
    std::vector<SweepRow> rows;
    rows.reserve(values.size());
    for (const double v : values) {
        SweepRow row;
        row.param = v;
        if (spec.field == FieldKind::scalar) {
            ScalarParams p = spec.scalar;
            apply_parameter(p.geometry, p.omega0, spec.parameter, v);
            const EnergyBreakdown e = scalar_energy(p);
            row.free_term = e.free_term;
            row.boundary_term = e.boundary_term;
            row.total = e.total;
            row.static_total = scalar_energy_static(p).total;
        } else {
            EmParams p = spec.em;
            apply_parameter(p.geometry, p.omega0, spec.parameter, v);
            const EnergyBreakdown e = em_energy(p);
            row.free_term = e.free_term;
            row.boundary_term = e.boundary_term;
            row.total = e.total;
            EmParams st = p;
            st.geometry.a = 0.0;
            row.static_total = em_energy(st).total;
        }
        rows.push_back(row);
    }
    return rows;
}

void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
    os << "param,free,boundary,total,static_total\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g,%.9g\n", r.param, r.free_term,
                      r.boundary_term, r.total, r.static_total);
        os << buf;
    }
}

std::vector<Figure3Row> figure3_rows(const Figure3Options& opt) {
    if (opt.points < 2 || !(opt.a_min > 0.0) || !(opt.a_min < opt.a_max)) {
        throw std::domain_error("figure3: requires points >= 2 and 0 < a_min < a_max");
    }
    const std::vector<double> a_values =
        grid_points(opt.a_min, opt.a_max, opt.points, SweepScale::log);

    ScalarParams perp{PairGeometry{Alignment::perpendicular, opt.separation, opt.z, 0.0},
                      opt.omega0, 1.0, BellSign::symmetric};
    ScalarParams par{PairGeometry{Alignment::parallel, opt.separation, opt.z, 0.0}, opt.omega0,
                     1.0, BellSign::symmetric};
    const double perp_static = scalar_energy_static(perp).total;
    const double par_static = scalar_energy_static(par).total;

    std::vector<Figure3Row> rows;
    rows.reserve(a_values.size());
    for (const double a : a_values) {
        perp.geometry.a = a;
        par.geometry.a = a;
        rows.push_back({a, scalar_energy(perp).total, scalar_energy(par).total, perp_static,
                        par_static});
    }
    return rows;
}

void write_figure3_csv(std::ostream& os, const std::vector<Figure3Row>& rows) {
    os << "a,perp_total,par_total,perp_static,par_static\n";
    char buf[192];
    for (const auto& r : rows) {
        std::snprintf(buf, sizeof buf, "%.9g,%.9g,%.9g,%.9g,%.9g\n", r.a, r.perp_total,
                      r.par_total, r.perp_static, r.par_static);
        os << buf;
    }
}

void write_figure3_files(const std::filesystem::path& csv_path, const Figure3Options& opt) {
    const std::vector<Figure3Row> rows = figure3_rows(opt);
    {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) {
            throw std::runtime_error("figure3: cannot open " + csv_path.string());
        }
        write_figure3_csv(csv, rows);
        if (!csv.good()) {
            throw std::runtime_error("figure3: write failed for " + csv_path.string());
        }
    }
    std::filesystem::path script_path = csv_path;
    script_path.replace_extension(".gp");
    std::ofstream gp(script_path, std::ios::binary);
    if (!gp) {
        throw std::runtime_error("figure3: cannot open " + script_path.string());
    }
    gp << "# gnuplot script for the acceleration sweep\n"
       << "set datafile separator ','\n"
       << "set logscale x\n"
       << "set xlabel 'a [eV]'\n"
       << "set ylabel 'resonance energy [eV / lambda^2]'\n"
       << "set key left bottom\n"
       << "plot '" << csv_path.filename().string() << "' using 1:2 with lines title 'perpendicular', \\\n"
       << "     '' using 1:3 with lines title 'parallel', \\\n"
       << "     '' using 1:4 with lines dashtype 2 title 'perpendicular (inertial)', \\\n"
       << "     '' using 1:5 with lines dashtype 3 title 'parallel (inertial)'\n";
    if (!gp.good()) {
        throw std::runtime_error("figure3: write failed for " + script_path.string());
    }
}

}  // namespace accelres
