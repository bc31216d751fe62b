#pragma once

/// Independent numerical oracles and consistency sweeps.
///
/// The scalar closed forms are checked against a light-cone root-finding
/// oracle that never touches them: it solves the interval equation for the
/// light-cone crossing on the hyperbolic world-lines, evaluates the
/// delta-function Jacobian by numerical differentiation, and assembles the
/// kernel from those pieces alone.  The electromagnetic tensors are checked
/// at a = 0 against an independently coded textbook resonance tensor, plus
/// pinned finite-acceleration reference values; a coefficient-mutation sweep
/// verifies the suite actually exercises every implemented coefficient.

#include <iosfwd>
#include <string>
#include <vector>

#include "accelres/em_model.hpp"
#include "accelres/geometry.hpp"
#include "accelres/scalar_model.hpp"

namespace accelres::validation {

struct OracleReport {
    std::string case_id;
    double model_value = 0.0;
    double oracle_value = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool passed = false;
};

/// 1 / (d sqrt(1 + a^2 d^2 / 4)): local magnitude scale of the scalar
/// kernel, used to switch to envelope-scaled absolute comparisons near
/// phase zeros.
double scalar_envelope(double a, double d);

/// Build a report with the standard near-zero handling: the comparison is
/// relative against max(|oracle|, 1e-3 * envelope); when both vanish the
/// difference is held to 1e-30 absolute.
OracleReport compare(std::string case_id, double model, double oracle, double tolerance,
                     double envelope);

/// Kernel value K(a, d, omega0) computed without the closed form:
/// bisection + Newton root of the light-cone equation, numerical Jacobian,
/// cos(omega0 * dtau*) assembled with the numerically evaluated weight.
/// Requires a > 0, d > 0.  Throws std::runtime_error if the root finder
/// fails to converge within its iteration budget.
double scalar_delta_root_oracle(double a, double d, double omega0);

/// Textbook resonance dipole-field tensor for inertial atoms at separation
/// d along the unit vector n:
///   V_ij = (delta_ij - 3 n_i n_j)(cos(w0 d)/d^3 + w0 sin(w0 d)/d^2)
///        - (delta_ij - n_i n_j) w0^2 cos(w0 d)/d.
/// Coded from this formula directly; never from the susceptibility tensors.
Mat3 em_static_oracle(double d, const Vec3& n_axis, double omega0);

enum class Regime { far_zone, intermediate };

/// Grid specification for the asymptotic error maps.  Dimensionless
/// combinations fix each point; see the defaults in validation.cpp.
struct AsymptoticGrid {
    std::vector<double> a_times_distance;  ///< decades of a * (leading distance)
    std::vector<double> phase_numbers;     ///< omega0 * separation (far zone) or omega0 * image (intermediate)
    double min_abs_cos = 0.5;              ///< phase-sampling filter
};

AsymptoticGrid default_grid(Regime regime);

/// Relative error of the asymptotic formula against the exact closed form,
/// term by term, over the grid; only points passing the |cos| filter are
/// reported.  Throws std::invalid_argument when the filter empties the grid.
std::vector<OracleReport> asymptotic_error_map(Regime regime, const AsymptoticGrid& grid);
std::vector<OracleReport> asymptotic_error_map(Regime regime);

/// Runs every oracle comparison: the scalar delta-root grid, the
/// electromagnetic static checks over all tensor cases, pinned
/// finite-acceleration reference values, series-branch continuity,
/// sign/bilinearity properties and the coefficient-mutation sweep.
/// `filter` keeps only case ids containing the substring.
std::vector<OracleReport> run_validation_suite(std::string_view filter = {});

bool all_passed(const std::vector<OracleReport>& reports);

/// Line-delimited machine-readable records:
/// case_id,model,oracle,rel_error,tolerance,pass
void print_reports(std::ostream& os, const std::vector<OracleReport>& reports);

}  // namespace accelres::validation
