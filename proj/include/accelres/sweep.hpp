#pragma once

/// Parameter sweeps to CSV and the stock acceleration-sweep figure.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "accelres/em_model.hpp"
#include "accelres/scalar_model.hpp"

namespace accelres {

enum class SweepParameter { acceleration, separation, mirror_distance, omega0 };
enum class SweepScale { linear, log };
enum class FieldKind { scalar, em };

struct SweepSpec {
    SweepParameter parameter = SweepParameter::acceleration;
    double from = 0.0;
    double to = 0.0;
    int points = 2;
    SweepScale scale = SweepScale::linear;
    FieldKind field = FieldKind::scalar;
    ScalarParams scalar;  ///< base point (field == scalar)
    EmParams em;          ///< base point (field == em)

    void validate() const;  ///< throws std::domain_error on a malformed range
};

struct SweepRow {
    double param = 0.0;
    double free_term = 0.0;
    double boundary_term = 0.0;
    double total = 0.0;
    double static_total = 0.0;  ///< same point evaluated in the inertial limit
};

std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header `param,free,boundary,total,static_total`, one row per grid point,
/// 9 significant digits, LF line endings.
void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows);

/// Acceleration sweep of the scalar resonance energy for both alignments at
/// the stock geometry (separation 7.5e-2, z 2.0e-2, omega0 4.17, symmetric
/// state, lambda_sq 1), spanning the near through far zones.
struct Figure3Options {
    double a_min = 1e-2;   ///< [eV]
    double a_max = 1e4;    ///< [eV]
    int points = 241;
    double separation = 7.5e-2;  ///< [eV^-1], used for both alignments
    double z = 2.0e-2;           ///< [eV^-1]
    double omega0 = 4.17;        ///< [eV]
};

struct Figure3Row {
    double a = 0.0;
    double perp_total = 0.0;
    double par_total = 0.0;
    double perp_static = 0.0;
    double par_static = 0.0;
};

std::vector<Figure3Row> figure3_rows(const Figure3Options& opt);

void write_figure3_csv(std::ostream& os, const std::vector<Figure3Row>& rows);

/// Writes the CSV and a gnuplot script `<csv stem>.gp` next to it.
/// Throws std::runtime_error when the files cannot be written.
void write_figure3_files(const std::filesystem::path& csv_path, const Figure3Options& opt);

}  // namespace accelres
