#pragma once

/// Resonance dipole-dipole interaction energy for two uniformly accelerated
/// two-level atoms coupled to a massless scalar field near a reflecting
/// mirror, in the symmetric (superradiant) or antisymmetric (subradiant)
/// Bell state.
///
/// Everything reduces to one kernel
///
///     K(a, d, w0) = cos( (2 w0 / a) asinh(a d / 2) ) / ( d sqrt(1 + a^2 d^2 / 4) )
///
/// evaluated at the direct separation (free-space term) and at the
/// image-method distance (boundary term).  Both alignments go through the
/// same kernel with their respective ImageDistances.

#include "accelres/geometry.hpp"

namespace accelres {

/// Entangled-state selector.  Flipping it negates every scalar energy term.
enum class BellSign : int { symmetric = +1, antisymmetric = -1 };

inline double bell_factor(BellSign s) { return static_cast<double>(static_cast<int>(s)); }

struct ScalarParams {
    PairGeometry geometry;
    double omega0 = 0.0;     ///< atomic transition frequency [eV]
    double lambda_sq = 1.0;  ///< dimensionless scalar coupling squared
    BellSign sign = BellSign::symmetric;

    void validate() const;
};

/// Free-space term, mirror-induced term and their sum, each in eV.
/// total is always free_term + boundary_term in the same floating arithmetic.
struct EnergyBreakdown {
    double free_term = 0.0;
    double boundary_term = 0.0;
    double total = 0.0;
};

inline EnergyBreakdown make_breakdown(double free_term, double boundary_term) {
    return {free_term, boundary_term, free_term + boundary_term};
}

/// K(a, d, w0) as above; cos(w0 d)/d at a = 0.  Throws std::domain_error
/// for d <= 0.
double scalar_kernel(double a, double d, double omega0);

/// Per-frequency spectral weight sin( (2 w / a) asinh(a d / 2) ) / (d sqrt(1 + a^2 d^2/4)),
/// the omega-dependent factor of the field susceptibility; exposed for the
/// frequency-domain cross-checks.
double scalar_spectral_kernel(double a, double d, double omega);

/// Exact closed form, valid for all (a, separation, z).
EnergyBreakdown scalar_energy(const ScalarParams& p);

/// Inertial (a = 0) limit; ignores p.geometry.a.
EnergyBreakdown scalar_energy_static(const ScalarParams& p);

/// Far-zone asymptotic form, intended for a * distance >> 1 (not enforced).
/// Throws std::domain_error at a = 0.
EnergyBreakdown scalar_energy_far_zone(const ScalarParams& p);

/// Intermediate-zone form (image >> 1/a >> separation, not enforced):
/// static-like free term, far-zone-like boundary term.
/// Throws std::domain_error at a = 0.
EnergyBreakdown scalar_energy_intermediate(const ScalarParams& p);

}  // namespace accelres
